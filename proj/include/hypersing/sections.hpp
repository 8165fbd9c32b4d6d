#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypersing/invariants.hpp"

namespace hypersing {

/// The hyperplane sum a_i x_i = 0 through the origin.
class Hyperplane {
public:
    explicit Hyperplane(std::vector<Rational> coefficients);

    /// All coefficients drawn from the sampler, hence nonzero.
    static Hyperplane random(std::size_t n, Sampler& sampler);
    /// x_i = 0.
    static Hyperplane coordinate(std::size_t n, std::size_t i);

    std::size_t arity() const { return a_.size(); }
    const std::vector<Rational>& coefficients() const { return a_; }
    /// Last index with a nonzero coefficient; this variable is eliminated.
    std::size_t pivot() const { return pivot_; }

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

private:
    std::vector<Rational> a_;
    std::size_t pivot_ = 0;
};

std::string to_string(const Hyperplane& h);

/// f restricted to H, in the variables of f without the pivot. Throws
/// DomainError when f vanishes identically on H or n = 1.
Poly restrict(const Poly& f, const Hyperplane& h, std::size_t term_cap = kDefaultTermCap);

/// f after the linear change x_pivot = (u - sum_{i != pivot} a_i x_i) / a_pivot,
/// keeping the pivot's name for u. H becomes the coordinate hyperplane u = 0.
Poly adapt_to_hyperplane(const Poly& f, const Hyperplane& h, std::size_t term_cap = kDefaultTermCap);

enum class SectionInvariant { mu, mult, exponent, theta };

std::string to_string(SectionInvariant inv);
/// "mu", "mult", "exponent" or "theta"; nullopt otherwise.
std::optional<SectionInvariant> parse_section_invariant(std::string_view text);

/// A value of one of the section invariants, with its exactness flag.
struct InvariantValue {
    ExtRat value;
    bool exact = true;
    friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

InvariantValue evaluate_invariant(const Poly& f, SectionInvariant inv, const Limits& limits = {});

struct SectionResult {
    Stable<InvariantValue> stable;
    std::vector<Hyperplane> hyperplanes;  // the two hyperplanes of the final rung
};

/// Invariant of f|_H for generic H, with the two-seed stability certificate.
/// A draw whose restriction vanishes is redrawn; repeated vanishing throws.
SectionResult generic_section(const Poly& f, SectionInvariant inv, const Sampler& sampler,
                              const Limits& limits = {});

/// One generic restriction, redrawing while it vanishes.
Poly random_section(const Poly& f, Sampler& sampler, Hyperplane* chosen = nullptr);

enum class FamilyKind { parametric, loeser, cover };

std::string to_string(FamilyKind k);

/// A polynomial family. Its symbolic form lives over vars() followed by the
/// parameter variables; instances live over vars().
class Family {
public:
    FamilyKind kind() const { return kind_; }
    const VarSet& vars() const { return vars_; }
    const std::vector<std::string>& params() const { return params_; }
    /// Polynomial over vars() + params().
    const Poly& symbolic() const { return symbolic_; }

    /// Exact substitution of the parameter values, one per parameter.
    Poly instantiate(const std::vector<Rational>& values) const;
    Poly instantiate(const Rational& t) const { return instantiate(std::vector<Rational>{t}); }

    /// Reads text over vars plus the single parameter named param.
    static Family parametric(const VarSet& vars, const std::string& param, std::string_view text);

private:
    friend Family loeser_family(const Poly& f, std::uint64_t d);
    friend Family cover_family(const Poly& f, std::uint64_t d, std::uint64_t m);

    FamilyKind kind_ = FamilyKind::parametric;
    VarSet vars_;
    std::vector<std::string> params_;
    Poly symbolic_;
};

/// Fresh identifier not among taken, built from base ("t", "t1", "t2", ...).
std::string fresh_name(const std::vector<std::string>& taken, const std::string& base);

/// h_t = f(x', t x_n) + (1 - t) x_n^d. Requires n >= 2, d >= 2.
Family loeser_family(const Poly& f, std::uint64_t d);

/// h = f(x', y x_n^d) + z x_n^m with parameters (y, z). Requires m >= d >= 1.
/// Throws Error if h is not of weight 0 for wt(x_n) = 1, wt(y) = -d,
/// wt(z) = -m, wt(x_i) = 0.
Family cover_family(const Poly& f, std::uint64_t d, std::uint64_t m);

/// {-3, -2, -1/2, -1/3, 1/3, 1/2, 2, 3}.
std::vector<Rational> default_samples();

struct ScanPoint {
    Rational t;
    std::optional<ExtNat> mu;  // unset when the sample failed
    std::string error;
};

struct ScanResult {
    std::vector<ScanPoint> points;  // input sample order
    bool constant = false;          // every sample computed, one common value
    /// Sample indices grouped by mu value, groups ordered by value.
    std::vector<std::pair<ExtNat, std::vector<std::size_t>>> partition;
};

/// Milnor number of each instance (each sample is one-parameter; cover
/// families need two values and are scanned along z with y = 1). Samples
/// listed in exclusions are skipped. Budget failures mark the sample.
ScanResult mu_scan(const Family& family, std::vector<Rational> samples,
                   const std::vector<Rational>& exclusions = {}, const Limits& limits = {},
                   unsigned jobs = 1);

}  // namespace hypersing
