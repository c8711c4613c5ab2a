#include "nilcomm/catalog.hpp"

#include "nilcomm/errors.hpp"

#include <sstream>

namespace nilcomm {

namespace {

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s + ")";
}

}  // namespace

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "dim " << dim << ", powers " << join(power_dims) << ", nilindex " << nilindex << ", ann " << ann_dim
       << ", ann series " << join(ann_series) << ", assoc " << associative << ", jordan " << jordan << ", cd " << cd
       << ", h2c " << h2c << ", h2d " << (h2d ? std::to_string(*h2d) : "n/a");
    return os.str();
}

bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.dim == b.dim && a.power_dims == b.power_dims && a.nilindex == b.nilindex && a.ann_dim == b.ann_dim &&
           a.ann_series == b.ann_series && a.associative == b.associative && a.jordan == b.jordan && a.cd == b.cd &&
           a.h2c == b.h2c && a.h2d == b.h2d;
}

Fingerprint fingerprint(const AlgebraTable& a) {
    Fingerprint f;
    f.dim = a.dim();
    PowerSeries ps = powers(a);
    f.power_dims = ps.dims;
    f.nilindex = ps.nilindex;
    f.ann_dim = annihilator(a).dim();
    for (const auto& s : annihilator_series(a)) f.ann_series.push_back(s.dim());
    f.associative = check_identity(a, Identity::associative).holds;
    f.jordan = check_identity(a, Identity::jordan).holds;
    f.cd = check_identity(a, Identity::cd).holds;
    H2Dims h = h2_dims(a);
    f.h2c = h.h2c;
    f.h2d = h.h2d;
    return f;
}

Fingerprint fingerprint(const Presentation& p, const Assignment& sample) {
    return fingerprint(specialize(p.table(), sample));
}

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::unverifiable: return "unverifiable";
        case CheckStatus::info: return "info";
    }
    return "?";
}

bool EntryReport::passed() const { return count(CheckStatus::fail) == 0; }

std::size_t EntryReport::count(CheckStatus s) const {
    std::size_t c = 0;
    for (const auto& ch : checks)
        if (ch.status == s) ++c;
    return c;
}

const Check* EntryReport::find(const std::string& kind) const {
    for (const auto& ch : checks)
        if (ch.kind == kind) return &ch;
    return nullptr;
}

std::string assignment_to_text(const Assignment& a) {
    std::string s;
    for (const auto& [k, v] : a) {
        if (!s.empty()) s += ", ";
        s += k + "=" + v.to_string();
    }
    return s;
}

namespace {

class Reporter {
public:
    explicit Reporter(EntryReport& r) : r_(r) {}
    void add(const std::string& kind, bool ok, const std::string& detail) {
        r_.checks.push_back({kind, ok ? CheckStatus::pass : CheckStatus::fail, detail});
    }
    void add(const std::string& kind, CheckStatus s, const std::string& detail) { r_.checks.push_back({kind, s, detail}); }

private:
    EntryReport& r_;
};

std::string at_text(const Assignment& s) { return s.empty() ? "" : " [" + assignment_to_text(s) + "]"; }

// Independence of classes modulo B2: returns the rank gained over B2.
std::size_t rank_over(const Subspace& b2, const std::vector<Vec>& vs) {
    Subspace s = b2;
    std::size_t gained = 0;
    for (const auto& v : vs)
        if (s.insert(v)) ++gained;
    return gained;
}

std::vector<Vec> instantiate(const std::vector<PolyVec>& list, const RingPtr& ring, const Assignment& s) {
    std::vector<Vec> out;
    for (const auto& v : list) {
        PolyVec w;
        for (const auto& p : v) w.push_back(p.recast(ring).substitute(s));
        out.push_back(to_constant(w));
    }
    return out;
}

void check_sample(const Presentation& e, const AlgebraTable& generic, const Assignment& s, Reporter& rep,
                  std::optional<Fingerprint>& fp, const VerifyOptions& opts) {
    const std::string tag = at_text(s);
    AlgebraTable a = specialize(generic, s);
    const Expectations* ex = e.expect ? &*e.expect : nullptr;

    try {
        PowerSeries ps = powers(a);
        rep.add("nilpotent", true, "power dims " + join(ps.dims) + ", nilindex " + std::to_string(ps.nilindex) + tag);
    } catch (const NotNilpotent& err) {
        rep.add("nilpotent", false, std::string(err.what()) + tag);
    }

    Subspace ann = annihilator(a);
    if (ex && ex->ann)
        rep.add("ann", ann.dim() == *ex->ann,
                "dim Ann = " + std::to_string(ann.dim()) + ", expected " + std::to_string(*ex->ann) + tag);

    IdentityReport cd = check_identity(a, Identity::cd);
    if (ex && ex->cd) rep.add("cd", cd.holds == *ex->cd, cd.describe() + tag);

    CohomologySpaces cs = cohomology(a);
    std::size_t a2 = powers(a).dims.size() > 1 ? powers(a).dims[1] : 0;
    bool b2_in_z2d = cs.z2d.contains(cs.b2);
    bool laws = cs.b2.dim() == a2 && b2_in_z2d == cd.holds;
    rep.add("cocycle-laws", laws,
            "dim B2 = " + std::to_string(cs.b2.dim()) + ", dim A2 = " + std::to_string(a2) + ", B2 in Z2_D " +
                (b2_in_z2d ? "yes" : "no") + tag);

    if (ex) {
        if (ex->h2c) rep.add("h2c", cs.h2c == *ex->h2c,
                             "h2c = " + std::to_string(cs.h2c) + ", expected " + std::to_string(*ex->h2c) + tag);
        if (ex->h2d)
            rep.add("h2d", cs.h2d && *cs.h2d == *ex->h2d,
                    "h2d = " + (cs.h2d ? std::to_string(*cs.h2d) : std::string("n/a")) + ", expected " +
                        std::to_string(*ex->h2d) + tag);
        if (ex->h2_equal)
            rep.add("h2-equal", cs.h2d && ((cs.h2c == *cs.h2d) == *ex->h2_equal),
                    std::string("H2_C ") + (cs.h2d && cs.h2c == *cs.h2d ? "=" : "!=") + " H2_D, expected " +
                        (*ex->h2_equal ? "=" : "!=") + tag);
        if (!ex->h2d_basis.empty()) {
            auto vs = instantiate(ex->h2d_basis, e.ring, s);
            bool in_z = true;
            for (const auto& v : vs) in_z = in_z && cs.z2d.contains(v);
            std::size_t r = rank_over(cs.b2, vs);
            bool ok = in_z && r == vs.size() && cs.h2d && r == *cs.h2d;
            rep.add("h2d-basis", ok,
                    std::to_string(vs.size()) + " classes, rank mod B2 " + std::to_string(r) +
                        (in_z ? "" : ", not all in Z2_D") + tag);
        }
        if (!ex->h2c_basis.empty()) {
            auto vs = instantiate(ex->h2d_basis, e.ring, s);
            auto extra = instantiate(ex->h2c_basis, e.ring, s);
            vs.insert(vs.end(), extra.begin(), extra.end());
            std::size_t r = rank_over(cs.b2, vs);
            rep.add("h2c-basis", r == vs.size() && r == cs.h2c,
                    std::to_string(vs.size()) + " classes, rank mod B2 " + std::to_string(r) + tag);
        }
        for (std::size_t k = 0; k < ex->automorphisms.size(); ++k) {
            const AutomorphismFamily& fam = ex->automorphisms[k];
            std::string label = "automorphism #" + std::to_string(k + 1);
            bool ok = !fam.samples.empty();
            std::string detail = ok ? "" : "no sample points";
            for (const auto& fs : fam.samples) {
                Assignment all = s;
                all.insert(fs.begin(), fs.end());
                Matrix m = fam.matrix.substitute(all);
                AutCheck c = is_automorphism(a, m);
                if (!c.ok) {
                    ok = false;
                    detail = c.describe() + " at " + assignment_to_text(fs);
                    break;
                }
                Subspace img = act_on_subspace(m, cs.b2, a.dim());
                if (img != cs.b2) {
                    ok = false;
                    detail = "phi(B2) != B2 at " + assignment_to_text(fs);
                    break;
                }
                if (cd.holds && act_on_subspace(m, cs.z2d, a.dim()) != cs.z2d) {
                    ok = false;
                    detail = "phi(Z2_D) != Z2_D at " + assignment_to_text(fs);
                    break;
                }
            }
            if (ok) detail = std::to_string(fam.samples.size()) + " instances preserve the product and B2";
            rep.add(label, ok, detail + tag);
        }
    }

    if (ann.dim() > 0) {
        AnnihilatorSplit sp = split_annihilator(a);
        bool ok = central_extend(sp.quotient, sp.theta) == change_basis(a, sp.basis_change);
        rep.add("split-roundtrip", ok, "split off " + std::to_string(ann.dim()) + "-dim annihilator and re-extended" + tag);
    }

    if (opts.fingerprints && !fp) fp = fingerprint(a);
}

void check_extension(const Presentation& e, const ExtensionClaim& c, const CatalogIndex& index, Reporter& rep) {
    std::string label = "extends " + c.base;
    auto it = index.find(c.base);
    if (it == index.end()) {
        rep.add(label, false, "base entry not found");
        return;
    }
    const Presentation& base = *it->second;
    AlgebraTable target = specialize(e.table(), c.at);
    RingPtr ring = unite_rings(target.ring(), base.ring);
    std::vector<SymCocycle> thetas;
    for (const auto& v : c.cocycles)
        thetas.push_back(SymCocycle::from_coords(e.ring, base.dim, {v}).substitute(c.at).recast(ring));
    AlgebraTable ext = central_extend(base.table().recast(ring), thetas);
    bool ok = ext == target.recast(ring);
    rep.add(label, ok, ok ? "central extension reproduces the table" : "extension gives " + ext.to_string());
}

}  // namespace

EntryReport verify_entry(const Presentation& entry, const CatalogIndex& index, const VerifyOptions& opts) {
    EntryReport r;
    r.name = entry.name;
    Reporter rep(r);
    try {
        AlgebraTable generic = entry.table();
        rep.add("commutative", true, "product stored on pairs i <= j");
        for (const auto& c : generic.constraints())
            rep.add("constraint", !c.poly.is_zero(), c.label);

        const Expectations* ex = entry.expect ? &*entry.expect : nullptr;
        if (!entry.params.empty()) {
            IdentityReport cd = check_identity(generic, Identity::cd);
            if (ex && ex->cd)
                rep.add("cd-generic", cd.holds == *ex->cd, cd.describe());
            else
                rep.add("cd-generic", CheckStatus::info, cd.describe());
        }

        r.samples = admissible_samples(entry.param_names(), generic.constraints(), entry.ring->order);
        for (const auto& s : r.samples) check_sample(entry, generic, s, rep, r.fingerprint, opts);

        if (ex) {
            for (const auto& c : ex->extends) check_extension(entry, c, index, rep);
            for (std::size_t k = 0; k < ex->witnesses.size(); ++k) {
                WitnessReport w = verify_witness(entry, ex->witnesses[k]);
                CheckStatus st = w.status == WitnessStatus::verified   ? CheckStatus::pass
                                 : w.status == WitnessStatus::failed   ? CheckStatus::fail
                                                                       : CheckStatus::unverifiable;
                rep.add("witness #" + std::to_string(k + 1), st, w.detail);
            }
        }
    } catch (const Error& err) {
        rep.add("error", false, err.what());
    }
    return r;
}

CatalogSummary verify_catalog(const std::vector<Presentation>& entries, const VerifyOptions& opts) {
    CatalogIndex index;
    for (const auto& e : entries) index.emplace(e.name, &e);
    CatalogSummary sum;
    for (const auto& e : entries) {
        sum.entries.push_back(verify_entry(e, index, opts));
        const EntryReport& r = sum.entries.back();
        if (r.passed())
            ++sum.passed;
        else
            ++sum.failed;
        sum.unverifiable += r.count(CheckStatus::unverifiable);
    }
    std::vector<bool> grouped(sum.entries.size(), false);
    for (std::size_t i = 0; i < sum.entries.size(); ++i) {
        if (grouped[i] || !sum.entries[i].fingerprint) continue;
        std::vector<std::string> group{sum.entries[i].name};
        for (std::size_t j = i + 1; j < sum.entries.size(); ++j) {
            if (grouped[j] || !sum.entries[j].fingerprint) continue;
            if (*sum.entries[j].fingerprint == *sum.entries[i].fingerprint) {
                grouped[j] = true;
                group.push_back(sum.entries[j].name);
            }
        }
        if (group.size() > 1) sum.collisions.push_back(std::move(group));
    }
    return sum;
}

CatalogSummary verify_catalog(const std::vector<std::string>& paths, const VerifyOptions& opts) {
    std::vector<Presentation> all;
    std::map<std::string, std::string> origin;
    for (const auto& path : paths) {
        for (auto& p : load_catalog(path)) {
            if (!origin.emplace(p.name, path).second) throw DuplicateName(p.name);
            all.push_back(std::move(p));
        }
    }
    return verify_catalog(all, opts);
}

}  // namespace nilcomm
