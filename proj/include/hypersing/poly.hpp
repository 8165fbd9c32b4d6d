#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypersing/rational.hpp"

namespace hypersing {

inline constexpr std::size_t kMaxArity = 6;
inline constexpr std::size_t kDefaultTermCap = 50'000;

/// Syntax or name-resolution failure while reading a polynomial.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Ordered list of distinct variable names, 1 <= size <= kMaxArity.
class VarSet {
public:
    VarSet() = default;
    explicit VarSet(std::vector<std::string> names);

    /// Comma separated list, e.g. "x,y,z".
    static VarSet parse_list(std::string_view text);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    VarSet without(std::size_t i) const;
    VarSet subset(std::span<const std::size_t> indices) const;

    friend bool operator==(const VarSet&, const VarSet&) = default;

private:
    std::vector<std::string> names_;
};

/// Exponent vector of a monomial; length equals the arity of its VarSet.
class Exponent {
public:
    explicit Exponent(std::size_t n = 0);
    Exponent(std::initializer_list<std::uint32_t> entries);

    std::size_t size() const { return n_; }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }

    std::uint64_t degree() const;
    bool is_zero() const { return degree() == 0; }
    /// True iff x^this divides x^other.
    bool divides(const Exponent& other) const;

    friend Exponent operator+(const Exponent& a, const Exponent& b);
    /// Requires b.divides(a).
    friend Exponent operator-(const Exponent& a, const Exponent& b);
    friend Exponent lcm(const Exponent& a, const Exponent& b);
    friend bool operator==(const Exponent& a, const Exponent& b) = default;

    std::vector<std::uint32_t> to_vector() const { return {e_.begin(), e_.begin() + n_}; }

private:
    std::array<std::uint32_t, kMaxArity> e_{};
    std::uint8_t n_ = 0;
};

/// Graded lexicographic order (total degree, then lex with x_1 > x_2 > ...).
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial with rational coefficients in the variables of a VarSet.
/// No stored coefficient is zero; terms iterate in ascending grlex order.
class Poly {
public:
    using TermMap = std::map<Exponent, Rational, GrlexLess>;

    Poly() = default;
    explicit Poly(VarSet vars) : vars_(std::move(vars)) {}

    static Poly constant(VarSet vars, const Rational& c);
    static Poly variable(VarSet vars, std::size_t i);
    static Poly monomial(VarSet vars, const Exponent& e, const Rational& c = 1);

    const VarSet& vars() const { return vars_; }
    std::size_t arity() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }

    Rational coefficient(const Exponent& e) const;
    Rational constant_term() const;

    /// Adds c*x^e, merging like terms and dropping zeros.
    void add_term(const Exponent& e, const Rational& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    VarSet vars_;
    TermMap terms_;
};

/// Product with an explicit term-count cap; throws BudgetExceeded past it.
Poly multiply(const Poly& a, const Poly& b, std::size_t term_cap = kDefaultTermCap);
Poly power(const Poly& a, std::uint32_t k, std::size_t term_cap = kDefaultTermCap);

/// Canonical text, terms in ascending grlex order; reparses to an equal Poly.
std::string to_string(const Poly& f);

/// Reads the polynomial grammar:
///   expr  := ['+'|'-'] term (('+'|'-') term)*
///   term  := factor ('*'? factor)*
///   factor:= int ('/' posint)? | var ('^' nat)?
Poly parse_poly(std::string_view text, const VarSet& vars);

/// Identifiers appearing in text, in order of first appearance.
std::vector<std::string> collect_identifiers(std::string_view text);

Poly partial_derivative(const Poly& f, std::size_t i);

/// Replaces variable i of f by assignments.at(i); unassigned variables are
/// matched by name in target. All assigned polys must live in target.
Poly substitute(const Poly& f, const std::map<std::size_t, Poly>& assignments, const VarSet& target,
                std::size_t term_cap = kDefaultTermCap);

/// Re-expresses f over target, matching variables by name.
Poly embed(const Poly& f, const VarSet& target);

/// mult_0(f): least total degree of the support; infinity for f = 0.
ExtNat order_at_origin(const Poly& f);

/// Sum of the terms of total degree k.
Poly homogeneous_part(const Poly& f, std::uint64_t k);

/// Strictly positive rational weights, one per variable.
class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> w);
    std::size_t size() const { return w_.size(); }
    const Rational& operator[](std::size_t i) const { return w_[i]; }
    const std::vector<Rational>& values() const { return w_; }
    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<Rational> w_;
};

struct WeightedDegree {
    ExtRat degree;      // min <w,a> over the support; infinity for f = 0
    bool homogeneous;   // every term attains the minimum
};

WeightedDegree weighted_degree(const Poly& f, const WeightVector& w);
/// Same with arbitrary signed weights (family gradings).
WeightedDegree weighted_degree(const Poly& f, std::span<const Rational> w);

}  // namespace hypersing
