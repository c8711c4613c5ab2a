// nilcomm: validate and verify algebra catalogs from the command line.

#include "nilcomm/catalog.hpp"
#include "nilcomm/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace nilcomm;
using json = nlohmann::json;

namespace {

std::vector<Presentation> load_all(const std::vector<std::string>& files) {
    std::vector<Presentation> all;
    std::set<std::string> names;
    for (const auto& f : files) {
        for (auto& p : load_catalog(f)) {
            if (!names.insert(p.name).second) throw DuplicateName(p.name);
            all.push_back(std::move(p));
        }
    }
    return all;
}

const Presentation& find_entry(const std::vector<Presentation>& all, const std::string& name) {
    for (const auto& p : all)
        if (p.name == name) return p;
    throw Error("no entry named '" + name + "'");
}

Cyclotomic parse_scalar(const std::string& text, unsigned order) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw Error("not a rational number: '" + text + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw Error("zero denominator in '" + text + "'");
    return Cyclotomic(order, r);
}

// "alpha=3" pairs; parameters left out are taken from the first admissible sample.
Assignment resolve_assignment(const Presentation& p, const std::vector<std::string>& given) {
    Assignment fixed;
    for (const auto& g : given) {
        auto eq = g.find('=');
        if (eq == std::string::npos) throw Error("expected NAME=VALUE, got '" + g + "'");
        std::string name = g.substr(0, eq);
        if (!p.ring->index_of(name)) throw Error("'" + p.name + "' has no parameter '" + name + "'");
        fixed[name] = parse_scalar(g.substr(eq + 1), p.ring->order);
    }
    std::vector<std::string> rest;
    for (const auto& n : p.param_names())
        if (!fixed.count(n)) rest.push_back(n);
    Assignment out = admissible_samples(rest, p.constraints(), p.ring->order, fixed, 1).front();
    out.insert(fixed.begin(), fixed.end());
    return out;
}

std::string basis_text(const Subspace& s, std::size_t n) {
    if (s.dim() == 0) return "0";
    std::string out;
    for (const auto& v : s.basis()) {
        if (!out.empty()) out += "; ";
        out += cocycle_to_string(to_polyvec(make_ring({}, s.order()), v), n);
    }
    return out;
}

Presentation as_presentation(const std::string& name, const AlgebraTable& a) {
    Presentation p;
    p.name = name;
    p.dim = a.dim();
    p.ring = a.ring();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j)
            if (!is_zero(a.product(i, j))) p.equations.emplace(std::make_pair(i, j), a.product(i, j));
    return p;
}

json check_json(const Check& c) {
    json j{{"kind", c.kind}, {"status", status_name(c.status)}, {"detail", c.detail}};
    if (c.status == CheckStatus::unverifiable)
        j["pass"] = nullptr;
    else
        j["pass"] = c.status != CheckStatus::fail;
    return j;
}

json fingerprint_json(const Fingerprint& f) {
    json j{{"dim", f.dim},         {"power_dims", f.power_dims}, {"nilindex", f.nilindex},
           {"ann_dim", f.ann_dim}, {"ann_series", f.ann_series}, {"associative", f.associative},
           {"jordan", f.jordan},   {"cd", f.cd},                 {"h2c", f.h2c}};
    j["h2d"] = f.h2d ? json(*f.h2d) : json(nullptr);
    return j;
}

int cmd_validate(const std::vector<std::string>& files) {
    auto all = load_all(files);
    for (const auto& p : all) {
        p.table();
        if (parse(serialize(p)) != p) throw Error("'" + p.name + "' does not survive a serialize/parse round trip");
    }
    std::cout << all.size() << " entries valid\n";
    return 0;
}

int cmd_verify(const std::vector<std::string>& files, bool as_json) {
    auto all = load_all(files);
    CatalogSummary sum = verify_catalog(all);
    if (as_json) {
        json out = json::array();
        for (const auto& r : sum.entries) {
            json e{{"name", r.name}, {"checks", json::array()}};
            for (const auto& c : r.checks) e["checks"].push_back(check_json(c));
            e["samples"] = json::array();
            for (const auto& s : r.samples) e["samples"].push_back(assignment_to_text(s));
            e["fingerprint"] = r.fingerprint ? fingerprint_json(*r.fingerprint) : json(nullptr);
            out.push_back(e);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : sum.entries) {
            std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name;
            if (!r.samples.empty() && !r.samples.front().empty()) {
                std::cout << "  samples:";
                for (const auto& s : r.samples) std::cout << " {" << assignment_to_text(s) << "}";
            }
            std::cout << "\n";
            for (const auto& c : r.checks)
                if (c.status != CheckStatus::pass)
                    std::cout << "  " << status_name(c.status) << " " << c.kind << ": " << c.detail << "\n";
        }
        for (const auto& g : sum.collisions) {
            std::cout << "fingerprint collision:";
            for (const auto& n : g) std::cout << " " << n;
            std::cout << "\n";
        }
        std::cout << sum.entries.size() << " entries, " << sum.passed << " passed, " << sum.failed << " failed, "
                  << sum.unverifiable << " unverifiable checks\n";
    }
    return sum.failed == 0 ? 0 : 1;
}

int cmd_cohomology(const std::string& file, const std::string& name, const std::vector<std::string>& params) {
    auto all = load_catalog(file);
    const Presentation& p = find_entry(all, name);
    Assignment at = resolve_assignment(p, params);
    AlgebraTable a = specialize(p.table(), at);
    CohomologySpaces cs = cohomology(a);
    if (!at.empty()) std::cout << "at " << assignment_to_text(at) << "\n";
    std::cout << "B2   (dim " << cs.b2.dim() << "): " << basis_text(cs.b2, a.dim()) << "\n";
    std::cout << "Z2_D (dim " << cs.z2d.dim() << "): " << basis_text(cs.z2d, a.dim()) << "\n";
    std::cout << "h2c " << cs.h2c << "\n";
    std::cout << "h2d " << (cs.h2d ? std::to_string(*cs.h2d) : std::string("n/a (not a CD algebra)")) << "\n";
    return 0;
}

int cmd_extend(const std::string& file, const std::string& name, const std::vector<std::string>& cocycles,
               const std::vector<std::string>& params) {
    auto all = load_catalog(file);
    const Presentation& p = find_entry(all, name);
    Assignment at = resolve_assignment(p, params);
    AlgebraTable a = specialize(p.table(), at);
    std::size_t len = sym_dim(a.dim());
    std::vector<SymCocycle> thetas;
    for (const auto& text : cocycles) {
        PolyVec v;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) v.push_back(Poly(a.ring(), parse_scalar(item, a.ring()->order)));
        if (v.size() != len)
            throw Error("cocycle needs " + std::to_string(len) + " coordinates in the order D11, D12, ..., got " +
                        std::to_string(v.size()));
        thetas.push_back(SymCocycle::from_coords(a.ring(), a.dim(), {v}));
    }
    AlgebraTable ext = central_extend(a, thetas);
    std::cout << serialize(as_presentation(name + "_ext", ext));
    return 0;
}

int cmd_fingerprint(const std::string& file, const std::string& name, const std::vector<std::string>& params) {
    auto all = load_catalog(file);
    const Presentation& p = find_entry(all, name);
    Assignment at = resolve_assignment(p, params);
    if (!at.empty()) std::cout << "at " << assignment_to_text(at) << "\n";
    std::cout << fingerprint(p, at).to_string() << "\n";
    return 0;
}

int cmd_witness(const std::string& file, const std::string& name) {
    auto all = load_catalog(file);
    const Presentation& p = find_entry(all, name);
    bool failed = false;
    std::size_t k = 0;
    if (p.expect) {
        for (const auto& w : p.expect->witnesses) {
            WitnessReport r = verify_witness(p, w);
            failed = failed || r.status == WitnessStatus::failed;
            std::cout << "witness #" << ++k << ": " << status_name(r.status) << " " << r.detail << "\n";
        }
    }
    if (k == 0) std::cout << "no witnesses\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomology and catalog verification for nilpotent commutative algebras"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string file, name;
    std::vector<std::string> params, cocycles;
    bool as_json = false;

    auto* validate = app.add_subcommand("validate", "Parse catalog files and check round trips");
    validate->add_option("FILE", files, "Catalog files")->required()->check(CLI::ExistingFile);

    auto* verify = app.add_subcommand("verify", "Verify every entry against its expectations");
    verify->add_option("FILE", files, "Catalog files")->required()->check(CLI::ExistingFile);
    verify->add_flag("--json", as_json, "Emit one JSON object per entry");

    auto* coh = app.add_subcommand("cohomology", "Print B2, Z2_D and the H2 dimensions");
    coh->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    coh->add_option("NAME", name)->required();
    coh->add_option("--param", params, "NAME=VALUE for a parametric entry");

    auto* ext = app.add_subcommand("extend", "Central extension by cocycles given in Delta coordinates");
    ext->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    ext->add_option("NAME", name)->required();
    ext->add_option("--cocycle", cocycles, "Comma-separated coordinates c11,c12,...")->required();
    ext->add_option("--param", params, "NAME=VALUE for a parametric entry");

    auto* fp = app.add_subcommand("fingerprint", "Print isomorphism invariants");
    fp->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    fp->add_option("NAME", name)->required();
    fp->add_option("--param", params, "NAME=VALUE for a parametric entry");

    auto* wit = app.add_subcommand("witness", "Check the orbit witnesses of one entry");
    wit->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    wit->add_option("NAME", name)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return cmd_validate(files);
        if (*verify) return cmd_verify(files, as_json);
        if (*coh) return cmd_cohomology(file, name, params);
        if (*ext) return cmd_extend(file, name, cocycles, params);
        if (*fp) return cmd_fingerprint(file, name, params);
        if (*wit) return cmd_witness(file, name);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
