#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypersing/newton.hpp"
#include "hypersing/poly.hpp"
#include "hypersing/sampler.hpp"
#include "hypersing/standard_basis.hpp"

namespace hypersing {

/// Ideal of all partial derivatives (zero partials dropped).
/// Throws DomainError for constant input.
Ideal jacobian_ideal(const Poly& f);

/// mult_0(f), the order of f at the origin.
ExtNat multiplicity(const Poly& f);

/// Colength of the Jacobian ideal in the local ring: 0 at a smooth point,
/// infinity for a non-isolated singularity. Requires f(0) = 0.
ExtNat milnor_number(const Poly& f, const Limits& limits = {});

/// e(I) as the colength of n generic combinations of the generators.
/// Throws DomainError when I is not m-primary.
Stable<std::uint64_t> hilbert_samuel_multiplicity(const Ideal& ideal, const Sampler& sampler,
                                                  const Limits& limits = {});

/// e(I^[n-1], m): colength of n-1 generic combinations of the generators
/// plus one generic linear form.
Stable<std::uint64_t> mixed_multiplicity_hyperplane(const Ideal& ideal, const Sampler& sampler,
                                                    const Limits& limits = {});

/// Teissier's invariant through monomial valuations on the Newton polyhedron
/// of the Jacobian generator supports. exact_monomial when every partial is
/// a monomial (or n = 1, where J is principal). Two further closed forms are
/// exact: a homogeneous f of degree d has theta = d - 1, and an A_k
/// singularity has theta = k. Anything else is a newton_lower_bound.
ThetaVal theta(const Poly& f, const Limits& limits = {});

/// Unique positive w with <w,a> = 1 on the whole support, if any.
std::optional<WeightVector> find_qh_weights(const Poly& f);

/// Multiset of positive rationals attached to an ambient dimension.
class Spectrum {
public:
    explicit Spectrum(std::size_t ambient = 0) : ambient_(ambient) {}

    void add(const Rational& value, std::uint64_t multiplicity = 1);

    std::size_t ambient() const { return ambient_; }
    const std::map<Rational, std::uint64_t>& entries() const { return entries_; }
    std::uint64_t total() const;
    std::uint64_t multiplicity(const Rational& value) const;
    bool empty() const { return entries_.empty(); }
    const Rational& min() const;
    /// alpha -> n - alpha preserves multiplicities.
    bool is_symmetric() const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    std::size_t ambient_;
    std::map<Rational, std::uint64_t> entries_;
};

/// "{5/6, 7/6}" with "x3" suffixes for repeated entries.
std::string to_string(const Spectrum& s);

/// Spectrum of a quasi-homogeneous isolated singularity from the weighted
/// degrees sum (a_i + 1) w_i over a monomial basis of O/J_f. The total
/// multiplicity, minimum multiplicity and symmetry are self-checked.
Spectrum spectrum_qh(const Poly& f, const Limits& limits = {});

struct TsBlock {
    Poly part;                      // summand over the block's own variables
    std::vector<std::size_t> vars;  // indices into f.vars(), ascending
};

/// Splits f into summands in disjoint variable blocks (connected components
/// of the co-occurrence graph). Variables absent from f belong to no block.
std::vector<TsBlock> ts_split(const Poly& f);

/// Pairwise sums with multiplicities; ambient dimensions add.
Spectrum ts_spectrum(const Spectrum& a, const Spectrum& b);

enum class ExponentMethod {
    smooth,
    quasi_homogeneous,
    semi_quasi_homogeneous,
    thom_sebastiani,
    morse_ak,
    newton_estimate,
};

std::string to_string(ExponentMethod m);

struct MinExp {
    ExtRat value;
    ExponentMethod method;
    bool exact;
};

/// Rank of the quadratic part of f at the origin.
std::size_t hessian_rank(const Poly& f);

/// One variable: 1/mult. Several variables with mult 2, Hessian corank <= 1
/// and finite mu (an A_mu singularity): (n-1)/2 + 1/(mu+1). Otherwise none.
std::optional<MinExp> morse_ak_exponent(const Poly& f, const Limits& limits = {});

/// Weights w = normal/rhs of a Newton facet whose terms form an isolated
/// singularity, so that f is that principal part plus terms of w-degree > 1.
std::optional<WeightVector> semi_qh_weights(const Poly& f, const Limits& limits = {});

/// Minimal (Arnold) exponent. Exact routes, tried in order: smooth point,
/// Thom-Sebastiani split, quasi-homogeneous spectrum minimum, A_k, semi
/// quasi-homogeneous principal part (sum of weights). Anything else gets
/// the inexact Newton diagonal estimate min(1, lct_monomial), or 1/mult.
MinExp minimal_exponent(const Poly& f, const Limits& limits = {});

}  // namespace hypersing
