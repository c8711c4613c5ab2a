#pragma once

#include "nilcomm/algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilcomm {

// Declared parameter with its "lhs != rhs" conditions.
struct ParamDecl {
    std::string name;
    std::vector<std::pair<Poly, Poly>> constraints;

    friend bool operator==(const ParamDecl& a, const ParamDecl& b) {
        return a.name == b.name && a.constraints == b.constraints;
    }
};

// Automorphism family phi (columns are the images of e_1..e_n) with sample points.
struct AutomorphismFamily {
    std::vector<ParamDecl> vars;
    RingPtr ring;  // entry parameters followed by vars
    Matrix matrix;
    std::vector<Assignment> samples;

    friend bool operator==(const AutomorphismFamily& a, const AutomorphismFamily& b) {
        return a.vars == b.vars && a.ring->same_as(*b.ring) && a.matrix == b.matrix && a.samples == b.samples;
    }
};

// The entry's table equals central_extend(base, cocycles) after specializing the entry at `at`.
struct ExtensionClaim {
    std::string base;
    std::vector<PolyVec> cocycles;  // over the entry ring
    Assignment at;

    friend bool operator==(const ExtensionClaim& a, const ExtensionClaim& b) {
        return a.base == b.base && a.cocycles == b.cocycles && a.at == b.at;
    }
};

// Orbit witness: phi maps the classes `from` to the classes `to` (one by one), or
// with `span` set, maps their span modulo B2 onto the span of `to`.
struct WitnessAnnotation {
    std::vector<ParamDecl> vars;
    RingPtr ring;  // entry parameters followed by vars
    std::optional<Matrix> matrix;
    bool span = false;
    std::vector<PolyVec> from;
    std::vector<PolyVec> to;
    std::optional<std::string> unverifiable;

    friend bool operator==(const WitnessAnnotation& a, const WitnessAnnotation& b) {
        return a.vars == b.vars && a.ring->same_as(*b.ring) && a.matrix == b.matrix && a.span == b.span &&
               a.from == b.from && a.to == b.to && a.unverifiable == b.unverifiable;
    }
};

struct Expectations {
    std::optional<bool> cd;
    std::optional<std::size_t> ann;
    std::optional<std::size_t> h2c;
    std::optional<std::size_t> h2d;
    std::optional<bool> h2_equal;
    std::vector<PolyVec> h2d_basis;
    std::vector<PolyVec> h2c_basis;  // classes completing h2d_basis to a basis of H2
    std::vector<ExtensionClaim> extends;
    std::vector<AutomorphismFamily> automorphisms;
    std::vector<WitnessAnnotation> witnesses;

    friend bool operator==(const Expectations& a, const Expectations& b) {
        return a.cd == b.cd && a.ann == b.ann && a.h2c == b.h2c && a.h2d == b.h2d && a.h2_equal == b.h2_equal &&
               a.h2d_basis == b.h2d_basis && a.h2c_basis == b.h2c_basis && a.extends == b.extends &&
               a.automorphisms == b.automorphisms && a.witnesses == b.witnesses;
    }
};

struct Presentation {
    std::string name;
    std::size_t dim = 0;
    std::optional<std::string> source;
    std::vector<std::string> notes;
    RingPtr ring = make_ring();
    std::vector<ParamDecl> params;
    // Nonzero products e_i e_j, i <= j (0-based).
    std::map<std::pair<std::size_t, std::size_t>, PolyVec> equations;
    std::optional<Expectations> expect;
    std::size_t line = 0;  // first line in the source file; not compared

    AlgebraTable table() const;
    std::vector<Constraint> constraints() const;
    std::vector<std::string> param_names() const;

    friend bool operator==(const Presentation& a, const Presentation& b);
    friend bool operator!=(const Presentation& a, const Presentation& b) { return !(a == b); }
};

std::vector<Constraint> decl_constraints(const std::vector<ParamDecl>& decls);
std::string constraint_label(const Poly& lhs, const Poly& rhs);

// Exactly one entry; throws ParseError.
Presentation parse(std::string_view text);
// Any number of blank-line separated entries; throws ParseError or DuplicateName.
std::vector<Presentation> parse_catalog(std::string_view text, std::size_t first_line = 1);
std::vector<Presentation> load_catalog(const std::string& path);

std::string serialize(const Presentation& p);
std::string serialize_catalog(const std::vector<Presentation>& entries);

}  // namespace nilcomm
