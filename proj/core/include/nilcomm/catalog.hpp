#pragma once

#include "nilcomm/autaction.hpp"
#include "nilcomm/extension.hpp"
#include "nilcomm/tabledsl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilcomm {

// Isomorphism invariants of a parameter-free algebra.
struct Fingerprint {
    std::size_t dim = 0;
    std::vector<std::size_t> power_dims;
    std::size_t nilindex = 0;
    std::size_t ann_dim = 0;
    std::vector<std::size_t> ann_series;
    bool associative = false;
    bool jordan = false;
    bool cd = false;
    std::size_t h2c = 0;
    std::optional<std::size_t> h2d;

    std::string to_string() const;
    friend bool operator==(const Fingerprint& a, const Fingerprint& b);
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
};

Fingerprint fingerprint(const AlgebraTable& a);
// Specializes first; throws InadmissibleSpecialization.
Fingerprint fingerprint(const Presentation& p, const Assignment& sample);

enum class CheckStatus { pass, fail, unverifiable, info };
std::string status_name(CheckStatus s);

struct Check {
    std::string kind;
    CheckStatus status;
    std::string detail;
};

struct EntryReport {
    std::string name;
    std::vector<Assignment> samples;
    std::vector<Check> checks;
    std::optional<Fingerprint> fingerprint;  // at the first sample

    bool passed() const;
    std::size_t count(CheckStatus s) const;
    const Check* find(const std::string& kind) const;
};

struct VerifyOptions {
    bool fingerprints = true;
};

using CatalogIndex = std::map<std::string, const Presentation*>;

// Never throws on mathematical failures; they become report content.
EntryReport verify_entry(const Presentation& entry, const CatalogIndex& index = {}, const VerifyOptions& opts = {});

struct CatalogSummary {
    std::vector<EntryReport> entries;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t unverifiable = 0;
    // Groups of entry names sharing a fingerprint (informational only).
    std::vector<std::vector<std::string>> collisions;
};

CatalogSummary verify_catalog(const std::vector<Presentation>& entries, const VerifyOptions& opts = {});
CatalogSummary verify_catalog(const std::vector<std::string>& paths, const VerifyOptions& opts = {});

std::string assignment_to_text(const Assignment& a);

}  // namespace nilcomm
