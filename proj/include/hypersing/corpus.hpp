#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypersing/sections.hpp"

namespace hypersing {

enum class CheckKind {
    teissier,
    corollary_chain,
    upper_bound,
    milnor_chain,
    lct_relation,
    spectrum_family,
    mu_constant,
    expect,
};

std::string to_string(CheckKind k);
std::optional<CheckKind> parse_check_kind(std::string_view text);
const std::vector<CheckKind>& all_check_kinds();

/// Exact values an entry asserts about its polynomial.
struct Expectations {
    std::optional<ExtNat> mu;
    std::optional<ExtNat> mult;
    std::optional<Rational> theta;
    std::optional<ExtRat> exponent;
    std::optional<std::vector<Rational>> spectrum;  // as a multiset

    bool empty() const { return !mu && !mult && !theta && !exponent && !spectrum; }
};

struct EntryParams {
    std::optional<std::uint64_t> d;
    std::optional<std::uint64_t> m;
    std::optional<std::vector<Rational>> samples;
    std::vector<Rational> exclusions;
    Expectations expect;
    std::optional<FamilyKind> family;
    std::optional<std::string> param;
    std::optional<std::vector<Rational>> hyperplane;
    bool nondegenerate = false;
};

struct CorpusEntry {
    std::string name;
    VarSet vars;
    std::string poly_text;
    Poly poly;                     // base polynomial; empty for parametric entries
    std::optional<Family> family;  // set for family entries
    std::vector<CheckKind> checks;
    EntryParams params;
    std::optional<std::uint64_t> seed;
};

struct Corpus {
    std::string name;
    std::vector<CorpusEntry> entries;
    std::uint64_t digest = 0;  // FNV-1a of the source bytes
};

/// Malformed or inconsistent corpus; nothing should run.
class CorpusError : public Error {
public:
    using Error::Error;
};

/// Parses and validates a corpus document (JSON). Throws CorpusError.
Corpus parse_corpus(std::string_view text);
Corpus load_corpus(const std::string& path);

/// Builds one validated entry from its parts (used by parse_corpus and tests).
CorpusEntry make_entry(std::string name, const std::vector<std::string>& vars, std::string poly,
                       std::vector<CheckKind> checks, EntryParams params = {},
                       std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace hypersing
