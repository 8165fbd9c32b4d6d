#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypersing/poly.hpp"

namespace hypersing {

/// Resource caps for the standard basis engine. Exceeding any of them throws
/// BudgetExceeded; no partial answer is ever returned.
struct Limits {
    std::size_t max_steps = 200'000;     // reduction steps per standard basis
    std::size_t max_terms = 50'000;      // terms in any intermediate polynomial
    std::uint64_t max_cells = 1'000'000; // staircase box cells walked by colength
};

/// Ideal of the local ring at the origin generated by polynomials.
class Ideal {
public:
    Ideal(VarSet vars, std::vector<Poly> generators);

    static Ideal maximal(const VarSet& vars);

    const VarSet& vars() const { return vars_; }
    const std::vector<Poly>& generators() const { return generators_; }
    bool is_monomial() const;

private:
    VarSet vars_;
    std::vector<Poly> generators_;
};

/// Local degree order: lower total degree is larger; ties are decided at the
/// last differing coordinate, where the smaller entry is larger. The unit
/// monomial is the maximum.
struct LocalOrder {
    static bool greater(const Exponent& a, const Exponent& b);
    static Exponent leading_exponent(const Poly& f);
};

/// Monomial staircase of a leading ideal.
class Staircase {
public:
    Staircase(std::size_t arity, std::vector<Exponent> corners, std::uint64_t max_cells);

    std::size_t arity() const { return arity_; }
    /// Minimal generators of the leading ideal (an antichain).
    const std::vector<Exponent>& corners() const { return corners_; }
    bool cofinite() const { return cofinite_; }
    const ExtNat& colength() const { return colength_; }
    bool contains(const Exponent& e) const;

    /// Exponents outside the leading ideal, ascending grlex. Requires cofinite().
    std::vector<Exponent> outside_monomials() const;

private:
    std::size_t arity_;
    std::vector<Exponent> corners_;
    bool cofinite_ = false;
    ExtNat colength_;
    std::uint64_t max_cells_;
};

class StandardBasis {
public:
    StandardBasis(Ideal ideal, std::vector<Poly> basis, Staircase staircase,
                  std::optional<std::uint64_t> corner)
        : ideal_(std::move(ideal)),
          basis_(std::move(basis)),
          staircase_(std::move(staircase)),
          corner_(corner) {}

    const Ideal& ideal() const { return ideal_; }
    const std::vector<Poly>& basis() const { return basis_; }
    const Staircase& staircase() const { return staircase_; }
    /// Degree N with m^N inside the ideal, once known. Basis elements are
    /// stored modulo m^N.
    std::optional<std::uint64_t> corner() const { return corner_; }

private:
    Ideal ideal_;
    std::vector<Poly> basis_;
    Staircase staircase_;
    std::optional<std::uint64_t> corner_;
};

/// Mora tangent-cone algorithm. Pairs are processed largest lcm first (local
/// order), FIFO on ties; reducers are chosen by least ecart, earliest first.
StandardBasis standard_basis(const Ideal& ideal, const Limits& limits = {});

/// Mora weak normal form of f against a standard basis. Zero iff f lies in
/// the ideal generated in the local ring.
Poly normal_form(const Poly& f, const StandardBasis& sb, const Limits& limits = {});

/// dim_Q of the local ring modulo the ideal; infinity when not m-primary.
ExtNat colength(const Ideal& ideal, const Limits& limits = {});

/// Monomial basis of the quotient, ascending grlex. Throws DomainError on
/// infinite colength.
std::vector<Exponent> quotient_monomial_basis(const Ideal& ideal, const Limits& limits = {});

}  // namespace hypersing
