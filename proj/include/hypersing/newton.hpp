#pragma once

#include <span>
#include <vector>

#include "hypersing/poly.hpp"
#include "hypersing/standard_basis.hpp"

namespace hypersing {

inline constexpr std::size_t kMaxNewtonDim = 4;

using Point = std::vector<Rational>;

/// Half-space <normal, a> >= rhs.
struct Facet {
    std::vector<Rational> normal;
    Rational rhs;
    friend bool operator==(const Facet&, const Facet&) = default;
};

/// conv(vertices) + R^n_{>=0}, stored both as its vertices and as the facet
/// inequalities cutting it out of the orthant. Facet normals are primitive
/// integer vectors with nonnegative entries.
class NewtonPoly {
public:
    NewtonPoly(std::size_t dim, std::vector<Point> vertices, std::vector<Facet> facets);

    std::size_t dimension() const { return dim_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }

    /// True iff the region contains a point on every coordinate axis.
    bool meets_every_axis() const;
    NewtonPoly scaled(const Rational& k) const;

    friend bool operator==(const NewtonPoly&, const NewtonPoly&) = default;

private:
    std::size_t dim_;
    std::vector<Point> vertices_;  // sorted lexicographically
    std::vector<Facet> facets_;    // sorted lexicographically
};

NewtonPoly newton_polyhedron(std::span<const Point> points);
NewtonPoly newton_polyhedron(std::span<const Exponent> points);
/// Newton polyhedron of the union of the generator supports.
NewtonPoly newton_polyhedron(const Ideal& ideal);

/// Membership in the polyhedron; for a monomial ideal and an integral point
/// this is membership of x^a in the integral closure.
bool closure_contains(const NewtonPoly& np, std::span<const Rational> a);
bool closure_contains(const NewtonPoly& np, const Exponent& a);

/// How a theta value was obtained. Only newton_lower_bound is inexact.
enum class ThetaStatus { exact_monomial, exact_homogeneous, exact_ak, newton_lower_bound };

inline bool is_exact(ThetaStatus s) { return s != ThetaStatus::newton_lower_bound; }

struct ThetaVal {
    Rational value;
    ThetaStatus status;
    std::vector<Rational> witness;  // weight vector attaining the maximum, min entry 1
};

std::string to_string(ThetaStatus s);

/// max over weights w with min_i w_i = 1 of min over vertices v of <w,v>,
/// solved exactly as n small linear programs (w_i = 1 for each i in turn).
/// The status field is set to exact_monomial; callers downgrade it.
ThetaVal theta_lp(const NewtonPoly& np);

/// min p/q over q <= qmax with m^p inside the integral closure of I^q,
/// tested through closure_contains on q*NP. I must be monomial and m-primary.
Rational theta_oracle(const Ideal& monomial_ideal, unsigned qmax);

/// Diagonal threshold 1/t0 where t0*(1,...,1) lies on the boundary. The
/// polyhedron need not meet every axis.
/// Raw value: the min(., 1) cap of a log canonical threshold is left to callers.
Rational lct_monomial(const NewtonPoly& np);

/// Order in x_n of the multiplier ideal (x_n)^{floor(m(beta - eps))}:
/// floor(m*beta) when m*beta is not an integer, m*beta - 1 otherwise.
std::uint64_t multiplier_order(std::uint64_t m, const Rational& beta);

}  // namespace hypersing
