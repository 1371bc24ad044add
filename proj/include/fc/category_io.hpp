#pragma once

#include "fc/associator.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fc {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int l, int c, const std::string& reason)
        : std::runtime_error("parse error at " + std::to_string(l) + ":" + std::to_string(c) +
                             ": " + reason),
          line(l), col(c) {}
};

struct UnsupportedVersion : std::runtime_error {
    explicit UnsupportedVersion(long long v)
        : std::runtime_error("unsupported format_version " + std::to_string(v)) {}
};

// On-disk category data (.fc): fusion ring, associator matrices and optional
// rigidity / pivotal / R-symbol sections. Unit-involving associators are
// implicit identities and are never serialized.
struct CategoryFile {
    int format_version = 1;
    int cyclotomic_order = 12;
    AssociatorSet assoc;  // carries the ring
    std::optional<std::vector<Cyclotomic>> birth;   // per strand
    std::optional<std::vector<Cyclotomic>> death;   // per strand
    std::optional<std::vector<Cyclotomic>> pivotal_t;
    std::optional<std::map<std::array<size_t, 3>, Mat<Cyclotomic>>> r_symbols;  // (x,y;z)

    const FusionRing& ring() const { return assoc.ring(); }
};

// Deterministic text output: sorted keys, lowest-term rationals, 2-space
// indentation. parse(serialize(f)) == f byte-for-byte on re-serialization.
std::string serialize(const CategoryFile& f);

// Strict parser with line/column errors; rejects non-canonical rationals and
// shape mismatches. Accepts // line comments.
CategoryFile parse(const std::string& text);

CategoryFile load_file(const std::string& path);
void save_file(const std::string& path, const CategoryFile& f);

} // namespace fc
