#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypersing/invariants.hpp"
#include "oracles.hpp"

using namespace hypersing;

namespace {

const VarSet xy = VarSet::parse_list("x,y");
const VarSet xyz = VarSet::parse_list("x,y,z");

Poly P(const char* s, const VarSet& v = xyz) { return parse_poly(s, v); }

Ideal I(const VarSet& v, std::initializer_list<const char*> gens) {
    std::vector<Poly> g;
    for (auto s : gens) g.push_back(parse_poly(s, v));
    return Ideal(v, std::move(g));
}

const VarSet& vars_for(std::size_t n) {
    static const VarSet v1 = VarSet::parse_list("x");
    return n == 1 ? v1 : n == 2 ? xy : xyz;
}

Poly brieskorn(const std::vector<unsigned>& a) {
    const VarSet& v = vars_for(a.size());
    Poly f(v);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Exponent e(a.size());
        e[i] = a[i];
        f.add_term(e, Rational(1));
    }
    return f;
}

Spectrum spectrum_of(std::size_t n, const std::vector<Rational>& values) {
    Spectrum s(n);
    for (const auto& v : values) s.add(v);
    return s;
}

Rational R(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("jacobian ideal and multiplicity") {
    CHECK(jacobian_ideal(P("x^2+y^3", xy)).generators() == std::vector<Poly>{P("2*x", xy), P("3*y^2", xy)});
    CHECK(jacobian_ideal(P("x*y", xy)).generators() == std::vector<Poly>{P("y", xy), P("x", xy)});
    CHECK(jacobian_ideal(P("x^2+y^3+z^5")).generators().size() == 3);
    CHECK_THROWS_AS(jacobian_ideal(P("5")), DomainError);
    CHECK(multiplicity(P("x^3+y^3+z^3")) == ExtNat(3));
    CHECK(multiplicity(P("x*y+z^7")) == ExtNat(2));
}

TEST_CASE("Milnor number examples") {
    CHECK(milnor_number(P("x^2+y^3", xy)) == ExtNat(2));
    CHECK(milnor_number(P("x^2+y^3+z^5")) == ExtNat(8));
    CHECK(milnor_number(P("x^2*y", xy)).is_infinite());
    CHECK(milnor_number(P("x+y^5", xy)) == ExtNat(0));
    CHECK(milnor_number(P("x^3+y^3+z^3+x*y*z")) == ExtNat(8));
    // E8 and a non-quasihomogeneous curve
    CHECK(milnor_number(P("x^3+y^5", xy)) == ExtNat(8));
    CHECK(milnor_number(P("x^4+y^5+x^2*y^2", xy)) == ExtNat(*oracle::colength(jacobian_ideal(P("x^4+y^5+x^2*y^2", xy)).generators(), 2, 14)));
}

TEST_CASE("Milnor numbers of Brieskorn-Pham sums match the product formula") {
    for (unsigned a = 2; a <= 6; ++a)
        for (unsigned b = 2; b <= 6; ++b) {
            CHECK(milnor_number(brieskorn({a, b})) == ExtNat(oracle::brieskorn_mu({a, b})));
            CHECK(milnor_number(brieskorn({a, b, 3})) == ExtNat(oracle::brieskorn_mu({a, b, 3})));
        }
}

TEST_CASE("Milnor number agrees with the truncated oracle on random curves") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int trial = 0; trial < 80 && checked < 20; ++trial) {
        Poly f = P("x^3+y^4", xy) + oracle::random_poly(rng, xy, 3, 4, false);
        if (order_at_origin(f) == ExtNat(1)) continue;
        auto want = oracle::colength(jacobian_ideal(f).generators(), 2, 10);
        if (!want) continue;
        ++checked;
        CHECK(milnor_number(f) == ExtNat(*want));
    }
    CHECK(checked >= 10);
}

TEST_CASE("Hilbert-Samuel and mixed multiplicities") {
    Sampler s(4);
    CHECK(hilbert_samuel_multiplicity(I(xy, {"x", "y^2"}), s).value == 2u);
    CHECK(hilbert_samuel_multiplicity(Ideal::maximal(xyz), s).value == 1u);
    CHECK(hilbert_samuel_multiplicity(jacobian_ideal(P("x^2+y^3+z^5")), s).value == 8u);
    // e(m^2) = 2^n
    CHECK(hilbert_samuel_multiplicity(I(xy, {"x^2", "x*y", "y^2"}), s).value == 4u);
    CHECK_THROWS_AS(hilbert_samuel_multiplicity(I(xy, {"x*y"}), s), DomainError);

    CHECK(mixed_multiplicity_hyperplane(I(xyz, {"x", "y^2", "z^4"}), s).value == 2u);
    CHECK(mixed_multiplicity_hyperplane(Ideal::maximal(xyz), s).value == 1u);
    CHECK(mixed_multiplicity_hyperplane(I(xy, {"x^2", "y^2"}), s).value == 2u);
}

TEST_CASE("e(J_f) equals the Milnor number") {
    Sampler s(8);
    for (const char* t : {"x^2+y^3+z^4", "x^3+y^3+z^3", "x^2+y^2+z^2", "x^3+y^3+z^3+x*y*z", "x^2*y+y^4+z^2"}) {
        Poly f = P(t);
        CHECK(hilbert_samuel_multiplicity(jacobian_ideal(f), s).value == milnor_number(f).value());
    }
}

TEST_CASE("theta examples") {
    ThetaVal a = theta(P("x^2+y^3", xy));
    CHECK(a.value == 2);
    CHECK(a.status == ThetaStatus::exact_monomial);
    for (unsigned p = 2; p <= 7; ++p)
        for (unsigned q = p; q <= 7; ++q) {
            ThetaVal t = theta(brieskorn({p, q}));
            CHECK(t.value == Rational(q - 1));
            CHECK(is_exact(t.status));
        }
    ThetaVal c = theta(P("x^3+y^3+z^3"));
    CHECK(c.value == 2);
    CHECK(c.status == ThetaStatus::exact_monomial);
    CHECK(theta(P("x^2+y^3+z^5")).value == 4);
}

TEST_CASE("theta of Fermat sums") {
    for (unsigned d = 2; d <= 6; ++d) {
        Poly f(xyz);
        for (std::size_t i = 0; i < 3; ++i) {
            Exponent e(3);
            e[i] = d;
            f.add_term(e, Rational(1));
        }
        CHECK(theta(f).value == Rational(d - 1));
    }
}

TEST_CASE("theta closed forms and bounds") {
    ThetaVal h = theta(P("x^3+y^3+z^3+x*y*z"));
    CHECK(h.value == 2);
    CHECK(h.status == ThetaStatus::exact_homogeneous);
    ThetaVal ak = theta(P("x^2+x*y^2+y^5", xy));  // A_3 in disguise
    CHECK(ak.status == ThetaStatus::exact_ak);
    CHECK(ak.value == Rational(milnor_number(P("x^2+x*y^2+y^5", xy)).value()));
    ThetaVal lb = theta(P("x^3+y^4+x*y^3", xy));
    CHECK(lb.status == ThetaStatus::newton_lower_bound);
    CHECK(lb.value >= 1);
    CHECK_THROWS_AS(theta(P("x^2*y", xy)), DomainError);
}

TEST_CASE("quasi-homogeneous weights") {
    auto a = find_qh_weights(P("x^2+y^3", xy));
    REQUIRE(a);
    CHECK(a->values() == std::vector<Rational>{R(1, 2), R(1, 3)});
    auto b = find_qh_weights(P("x^3+y^3+z^3+x*y*z"));
    REQUIRE(b);
    CHECK(b->values() == std::vector<Rational>{R(1, 3), R(1, 3), R(1, 3)});
    CHECK_FALSE(find_qh_weights(P("x^2+y^3+x*y", xy)));
    auto c = find_qh_weights(P("x^2*y+y^4", xy));  // D5
    REQUIRE(c);
    CHECK(c->values() == std::vector<Rational>{R(3, 8), R(1, 4)});
}

TEST_CASE("spectrum examples") {
    CHECK(spectrum_qh(P("x^2+y^3", xy)) == spectrum_of(2, {R(5, 6), R(7, 6)}));
    CHECK(spectrum_qh(P("x^2+y^2", xy)) == spectrum_of(2, {R(1)}));
    Spectrum cubic = spectrum_qh(P("x^3+y^3+z^3"));
    CHECK(to_string(cubic) == "{1, 4/3 x3, 5/3 x3, 2}");
    CHECK(spectrum_qh(P("x^3+y^3+z^3+x*y*z")) == cubic);
    CHECK_THROWS_AS(spectrum_qh(P("x^2+y^3+x*y", xy)), DomainError);
}

TEST_CASE("Brieskorn-Pham spectra match the enumerated multiset") {
    for (unsigned a = 2; a <= 6; ++a)
        for (unsigned b = a; b <= 6; ++b)
            for (unsigned c : {2u, 4u}) {
                std::vector<unsigned> ex{a, b, c};
                CHECK(spectrum_qh(brieskorn(ex)) == spectrum_of(3, oracle::brieskorn_spectrum(ex)));
            }
}

TEST_CASE("spectrum structure") {
    std::vector<const char*> polys = {"x^2*y+y^4+z^2", "x^3+y^3+z^3+x*y*z", "x^2+y^3+z^5", "x^2*y+y^3+z^3", "x^4+y^4+z^2+x^2*y^2"};
    for (const char* t : polys) {
        Poly f = P(t);
        Spectrum s = spectrum_qh(f);
        CHECK(s.total() == milnor_number(f).value());
        CHECK(s.is_symmetric());
        CHECK(s.min() > 0);
        CHECK(s.min() <= Rational(3, 2));
        auto w = find_qh_weights(f);
        REQUIRE(w);
        Rational sum = 0;
        for (const auto& x : w->values()) sum += x;
        CHECK(s.min() == sum);
        CHECK(s.multiplicity(sum) == 1);
    }
}

TEST_CASE("Thom-Sebastiani") {
    auto blocks = ts_split(P("x^2+y^3+z^5"));
    CHECK(blocks.size() == 3);
    auto two = ts_split(P("x^2+x*y+y^3+z^2"));
    REQUIRE(two.size() == 2);
    CHECK(two[0].vars == std::vector<std::size_t>{0, 1});
    CHECK(two[1].vars == std::vector<std::size_t>{2});
    CHECK(ts_split(P("x*y*z")).size() == 1);

    Spectrum a = spectrum_of(1, {R(1, 2)});
    CHECK(ts_spectrum(a, spectrum_of(1, {R(1, 3), R(2, 3)})) == spectrum_of(2, {R(5, 6), R(7, 6)}));
    CHECK(ts_spectrum(spectrum_of(1, {R(1)}), spectrum_of(1, {R(1)})) == spectrum_of(2, {R(2)}));

    // Spectrum of a split sum is the join of the block spectra.
    Spectrum whole = spectrum_qh(P("x^2*y+y^4+z^3"));
    Spectrum left = spectrum_qh(P("x^2*y+y^4", xy));
    Spectrum right = spectrum_qh(parse_poly("z^3", VarSet::parse_list("z")));
    CHECK(ts_spectrum(left, right) == whole);
}

TEST_CASE("Morse and A_k route") {
    auto t3 = morse_ak_exponent(parse_poly("t^3", VarSet::parse_list("t")));
    REQUIRE(t3);
    CHECK(t3->value == ExtRat(R(1, 3)));
    auto a1 = morse_ak_exponent(P("x^2+y^2", xy));
    REQUIRE(a1);
    CHECK(a1->value == ExtRat(R(1)));
    auto a2 = morse_ak_exponent(P("x^2+y^3", xy));
    REQUIRE(a2);
    CHECK(a2->value == ExtRat(R(5, 6)));
    CHECK_FALSE(morse_ak_exponent(P("x^3+y^3+z^3")));
    CHECK(hessian_rank(P("x^2+2*x*y+y^2+z^3")) == 1);
    CHECK(hessian_rank(P("x*y+z^2")) == 3);
}

TEST_CASE("minimal exponent examples") {
    MinExp a = minimal_exponent(P("x^2+y^3+z^5"));
    CHECK(a.value == ExtRat(R(31, 30)));
    CHECK(a.exact);
    CHECK(a.method == ExponentMethod::thom_sebastiani);
    MinExp b = minimal_exponent(P("x+y^5", xy));
    CHECK(b.value.is_infinite());
    CHECK(b.method == ExponentMethod::smooth);
    MinExp c = minimal_exponent(P("x^3+y^3+z^3+x*y*z"));
    CHECK(c.value == ExtRat(R(1)));
    CHECK(c.method == ExponentMethod::quasi_homogeneous);
    MinExp d = minimal_exponent(P("x^2+x*y^2+y^5", xy));
    CHECK(d.exact);
    CHECK(d.value == ExtRat(R(1, 2) + R(1, 4)));
    MinExp e = minimal_exponent(P("x^3+y^4+x*y^3", xy));
    CHECK(e.exact);
    CHECK(e.method == ExponentMethod::semi_quasi_homogeneous);
    CHECK(e.value == ExtRat(R(7, 12)));
    MinExp f = minimal_exponent(P("x^4+y^5+x^2*y^2", xy));
    CHECK_FALSE(f.exact);
    CHECK(f.method == ExponentMethod::newton_estimate);
}

TEST_CASE("semi quasi-homogeneous principal parts") {
    auto a = semi_qh_weights(P("x^3+y^4+x*y^3", xy));
    REQUIRE(a);
    CHECK(a->values() == std::vector<Rational>{R(1, 3), R(1, 4)});
    // Both facets of this polyhedron have non-isolated principal parts.
    CHECK_FALSE(semi_qh_weights(P("x^4+y^5+x^2*y^2", xy)));
    // Tangent cone x^3 + y^3 is isolated.
    auto b = semi_qh_weights(P("x^3+y^3+x^4+2*x^2*y^2+y^4", xy));
    REQUIRE(b);
    CHECK(b->values() == std::vector<Rational>{R(1, 3), R(1, 3)});
    // Higher-order terms leave mu unchanged.
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        Poly principal = P("x^3+y^5", xy);
        Poly f = principal;
        const Poly extra = oracle::random_poly(rng, xy, 4, 6);
        for (const auto& [e, c] : extra.terms())
            if (5 * e[0] + 3 * e[1] > 15) f.add_term(e, c);
        CHECK(milnor_number(f) == milnor_number(principal));
        CHECK(minimal_exponent(f).value == ExtRat(R(8, 15)));
    }
}

TEST_CASE("adding z^d shifts the minimal exponent by 1/d") {
    for (unsigned d = 2; d <= 5; ++d) {
        Poly g = P("x^2*y+y^4", xy);
        Poly zd(xyz);
        Exponent e(3);
        e[2] = d;
        zd.add_term(e, Rational(1));
        MinExp base = minimal_exponent(g);
        MinExp shifted = minimal_exponent(embed(g, xyz) + zd);
        REQUIRE(base.exact);
        CHECK(shifted.exact);
        CHECK(shifted.value == base.value + ExtRat(R(1, d)));
    }
}
