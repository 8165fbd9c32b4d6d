#include "hypersing/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hypersing/linalg.hpp"

namespace hypersing {

namespace {

void require_vanishing(const Poly& f) {
    if (f.is_zero()) throw DomainError("zero polynomial");
    if (f.constant_term() != 0) throw DomainError("f(0) != 0: the origin is not on the hypersurface");
}

Poly generic_combination(const std::vector<Poly>& gens, const VarSet& vars, Sampler& sampler) {
    Poly h(vars);
    for (const auto& g : gens) h += g * Rational(sampler.next_coefficient());
    return h;
}

Poly generic_linear_form(const VarSet& vars, Sampler& sampler) {
    Poly l(vars);
    for (std::size_t i = 0; i < vars.size(); ++i)
        l += Poly::variable(vars, i) * Rational(sampler.next_coefficient());
    return l;
}

void require_m_primary(const Ideal& ideal, const Limits& limits) {
    if (colength(ideal, limits).is_infinite()) throw DomainError("ideal is not m-primary");
}

std::uint64_t finite_colength(const Ideal& ideal, const Limits& limits) {
    ExtNat c = colength(ideal, limits);
    // A degenerate draw can fail to be a system of parameters; report it as a
    // value no honest sample produces so the two-seed comparison catches it.
    return c.is_infinite() ? ~std::uint64_t{0} : c.value();
}

}  // namespace

Ideal jacobian_ideal(const Poly& f) {
    std::vector<Poly> partials;
    for (std::size_t i = 0; i < f.arity(); ++i) partials.push_back(partial_derivative(f, i));
    Ideal j(f.vars(), std::move(partials));
    if (j.generators().empty()) throw DomainError("constant polynomial has no Jacobian ideal");
    return j;
}

ExtNat multiplicity(const Poly& f) { return order_at_origin(f); }

ExtNat milnor_number(const Poly& f, const Limits& limits) {
    require_vanishing(f);
    return colength(jacobian_ideal(f), limits);
}

Stable<std::uint64_t> hilbert_samuel_multiplicity(const Ideal& ideal, const Sampler& sampler,
                                                  const Limits& limits) {
    require_m_primary(ideal, limits);
    const VarSet& vars = ideal.vars();
    std::function<std::uint64_t(Sampler)> run = [&](Sampler s) {
        std::vector<Poly> reduction;
        for (std::size_t k = 0; k < vars.size(); ++k)
            reduction.push_back(generic_combination(ideal.generators(), vars, s));
        return finite_colength(Ideal(vars, std::move(reduction)), limits);
    };
    auto out = two_seed_stable(sampler, run);
    if (out.value && *out.value == ~std::uint64_t{0}) out.value.reset();
    return out;
}

Stable<std::uint64_t> mixed_multiplicity_hyperplane(const Ideal& ideal, const Sampler& sampler,
                                                    const Limits& limits) {
    const VarSet& vars = ideal.vars();
    if (vars.size() < 2) throw DomainError("mixed multiplicity with a hyperplane needs n >= 2");
    require_m_primary(ideal, limits);
    std::function<std::uint64_t(Sampler)> run = [&](Sampler s) {
        std::vector<Poly> gens;
        for (std::size_t k = 0; k + 1 < vars.size(); ++k)
            gens.push_back(generic_combination(ideal.generators(), vars, s));
        gens.push_back(generic_linear_form(vars, s));
        return finite_colength(Ideal(vars, std::move(gens)), limits);
    };
    auto out = two_seed_stable(sampler, run);
    if (out.value && *out.value == ~std::uint64_t{0}) out.value.reset();
    return out;
}

ThetaVal theta(const Poly& f, const Limits& limits) {
    ExtNat mu = milnor_number(f, limits);
    if (mu.is_infinite()) throw DomainError("theta needs an isolated singularity (mu is infinite)");
    if (mu.value() == 0) throw DomainError("theta needs a singular point (f is smooth at the origin)");
    Ideal j = jacobian_ideal(f);
    ThetaVal t = theta_lp(newton_polyhedron(j));
    if (j.is_monomial() || f.arity() == 1) {
        t.status = ThetaStatus::exact_monomial;
        return t;
    }
    const std::uint64_t d = order_at_origin(f).value();
    if (homogeneous_part(f, d) == f) {
        // n forms of degree d-1 cutting out the origin generate a reduction of m^(d-1).
        return ThetaVal{Rational(static_cast<unsigned long>(d - 1)), ThetaStatus::exact_homogeneous,
                        std::vector<Rational>(f.arity(), Rational(1))};
    }
    if (d == 2 && hessian_rank(f) + 1 >= f.arity()) {
        // A_mu: right equivalent to x_1^2 + ... + x_{n-1}^2 + y^(mu+1).
        return ThetaVal{Rational(static_cast<unsigned long>(mu.value())), ThetaStatus::exact_ak, {}};
    }
    t.status = ThetaStatus::newton_lower_bound;
    return t;
}

std::optional<WeightVector> find_qh_weights(const Poly& f) {
    if (f.is_zero()) return std::nullopt;
    const std::size_t n = f.arity();
    linalg::Matrix a;
    linalg::Vector b;
    for (const auto& [e, c] : f.terms()) {
        linalg::Vector row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = e[i];
        a.push_back(std::move(row));
        b.push_back(1);
    }
    auto w = linalg::solve_unique(a, b, n);
    if (!w) return std::nullopt;
    for (const auto& x : *w)
        if (sgn(x) <= 0) return std::nullopt;
    return WeightVector(std::move(*w));
}

// --------------------------------------------------------------- Spectrum

void Spectrum::add(const Rational& value, std::uint64_t multiplicity) {
    if (multiplicity == 0) return;
    entries_[value] += multiplicity;
}

std::uint64_t Spectrum::total() const {
    std::uint64_t t = 0;
    for (const auto& [v, m] : entries_) t += m;
    return t;
}

std::uint64_t Spectrum::multiplicity(const Rational& value) const {
    auto it = entries_.find(value);
    return it == entries_.end() ? 0 : it->second;
}

const Rational& Spectrum::min() const {
    if (entries_.empty()) throw DomainError("empty spectrum has no minimum");
    return entries_.begin()->first;
}

bool Spectrum::is_symmetric() const {
    for (const auto& [v, m] : entries_)
        if (multiplicity(Rational(Rational(static_cast<unsigned long>(ambient_)) - v)) != m) return false;
    return true;
}

std::string to_string(const Spectrum& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [v, m] : s.entries()) {
        if (!first) out << ", ";
        first = false;
        out << to_string(v);
        if (m > 1) out << " x" << m;
    }
    out << '}';
    return out.str();
}

Spectrum spectrum_qh(const Poly& f, const Limits& limits) {
    require_vanishing(f);
    auto w = find_qh_weights(f);
    if (!w) throw DomainError("polynomial is not quasi-homogeneous");
    Ideal j = jacobian_ideal(f);
    auto sb = standard_basis(j, limits);
    if (!sb.staircase().cofinite()) throw DomainError("spectrum needs an isolated singularity (mu is infinite)");
    Spectrum sp(f.arity());
    for (const auto& e : sb.staircase().outside_monomials()) {
        Rational l = 0;
        for (std::size_t i = 0; i < e.size(); ++i) l += (*w)[i] * (e[i] + 1);
        sp.add(l);
    }
    if (sp.total() != sb.staircase().colength().value())
        throw Error("spectrum self-check failed: total multiplicity differs from mu");
    if (!sp.empty() && sp.multiplicity(sp.min()) != 1)
        throw Error("spectrum self-check failed: minimal entry is repeated");
    if (!sp.is_symmetric()) throw Error("spectrum self-check failed: not symmetric about n/2");
    return sp;
}

std::vector<TsBlock> ts_split(const Poly& f) {
    const std::size_t n = f.arity();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::vector<bool> used(n, false);
    for (const auto& [e, c] : f.terms()) {
        std::optional<std::size_t> first;
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            used[i] = true;
            if (!first) first = i;
            else parent[find(i)] = find(*first);
        }
    }
    std::vector<TsBlock> blocks;
    std::map<std::size_t, std::size_t> root_to_block;
    for (std::size_t i = 0; i < n; ++i) {
        if (!used[i]) continue;
        auto [it, inserted] = root_to_block.try_emplace(find(i), blocks.size());
        if (inserted) blocks.push_back(TsBlock{Poly(), {}});
        blocks[it->second].vars.push_back(i);
    }
    for (auto& b : blocks) b.part = Poly(f.vars().subset(b.vars));
    for (const auto& [e, c] : f.terms()) {
        if (e.is_zero()) {
            if (!blocks.empty()) blocks.front().part.add_term(Exponent(blocks.front().vars.size()), c);
            continue;
        }
        std::size_t lead = 0;
        while (e[lead] == 0) ++lead;
        std::size_t bi = root_to_block.at(find(lead));
        auto& b = blocks[bi];
        Exponent local(b.vars.size());
        for (std::size_t k = 0; k < b.vars.size(); ++k) local[k] = e[b.vars[k]];
        if (local.degree() != e.degree()) throw Error("internal: term spans two Thom-Sebastiani blocks");
        b.part.add_term(local, c);
    }
    return blocks;
}

Spectrum ts_spectrum(const Spectrum& a, const Spectrum& b) {
    Spectrum out(a.ambient() + b.ambient());
    for (const auto& [va, ma] : a.entries())
        for (const auto& [vb, mb] : b.entries()) out.add(Rational(va + vb), ma * mb);
    return out;
}

// -------------------------------------------------------- minimal exponent

std::string to_string(ExponentMethod m) {
    switch (m) {
        case ExponentMethod::smooth: return "smooth";
        case ExponentMethod::quasi_homogeneous: return "quasi_homogeneous";
        case ExponentMethod::thom_sebastiani: return "thom_sebastiani";
        case ExponentMethod::morse_ak: return "morse_ak";
        case ExponentMethod::semi_quasi_homogeneous: return "semi_quasi_homogeneous";
        case ExponentMethod::newton_estimate: return "newton_estimate";
    }
    return "unknown";
}

std::size_t hessian_rank(const Poly& f) {
    const std::size_t n = f.arity();
    linalg::Matrix h(n, linalg::Vector(n, Rational(0)));
    const Poly quadratic = homogeneous_part(f, 2);
    for (const auto& [e, c] : quadratic.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) idx.push_back(i);
        if (idx[0] == idx[1]) {
            h[idx[0]][idx[0]] += 2 * c;
        } else {
            h[idx[0]][idx[1]] += c;
            h[idx[1]][idx[0]] += c;
        }
    }
    return linalg::rank(std::move(h), n);
}

std::optional<MinExp> morse_ak_exponent(const Poly& f, const Limits& limits) {
    require_vanishing(f);
    ExtNat ord = order_at_origin(f);
    if (f.arity() == 1) {
        if (ord.value() < 2) return std::nullopt;
        return MinExp{ExtRat(Rational(1, static_cast<unsigned long>(ord.value()))), ExponentMethod::morse_ak, true};
    }
    if (ord.value() != 2) return std::nullopt;
    const std::size_t n = f.arity();
    if (hessian_rank(f) + 1 < n) return std::nullopt;
    ExtNat mu = milnor_number(f, limits);
    if (mu.is_infinite() || mu.value() == 0) return std::nullopt;
    Rational v = Rational(static_cast<unsigned long>(n - 1)) / 2 + Rational(1, static_cast<unsigned long>(mu.value() + 1));
    v.canonicalize();
    return MinExp{ExtRat(v), ExponentMethod::morse_ak, true};
}

namespace {

MinExp diagonal_estimate(const Poly& f) {
    if (f.arity() <= kMaxNewtonDim) {
        std::vector<Exponent> support;
        for (const auto& [e, c] : f.terms()) support.push_back(e);
        Rational l = lct_monomial(newton_polyhedron(std::span<const Exponent>(support)));
        return MinExp{ExtRat(l < 1 ? l : Rational(1)), ExponentMethod::newton_estimate, false};
    }
    return MinExp{ExtRat(Rational(1) / order_at_origin(f).value()), ExponentMethod::newton_estimate, false};
}

MinExp block_exponent(const Poly& g, const Limits& limits) {
    if (find_qh_weights(g)) {
        Spectrum sp = spectrum_qh(g, limits);
        if (!sp.empty()) return MinExp{ExtRat(sp.min()), ExponentMethod::quasi_homogeneous, true};
    }
    if (auto ak = morse_ak_exponent(g, limits)) return *ak;
    if (auto w = semi_qh_weights(g, limits)) {
        Rational sum = 0;
        for (const auto& x : w->values()) sum += x;
        return MinExp{ExtRat(sum), ExponentMethod::semi_quasi_homogeneous, true};
    }
    return diagonal_estimate(g);
}

}  // namespace

std::optional<WeightVector> semi_qh_weights(const Poly& f, const Limits& limits) {
    const std::size_t n = f.arity();
    if (n > kMaxNewtonDim || f.is_zero()) return std::nullopt;
    std::vector<Exponent> support;
    for (const auto& [e, c] : f.terms()) support.push_back(e);
    NewtonPoly np = newton_polyhedron(std::span<const Exponent>(support));
    for (const auto& facet : np.facets()) {
        if (sgn(facet.rhs) <= 0) continue;
        if (std::any_of(facet.normal.begin(), facet.normal.end(), [](const Rational& a) { return sgn(a) <= 0; }))
            continue;
        Poly principal(f.vars());
        for (const auto& [e, c] : f.terms()) {
            Rational s = 0;
            for (std::size_t i = 0; i < n; ++i) s += facet.normal[i] * e[i];
            if (s == facet.rhs) principal.add_term(e, c);
        }
        ExtNat mu = milnor_number(principal, limits);
        if (mu.is_finite() && mu.value() > 0) {
            std::vector<Rational> w;
            for (const auto& a : facet.normal) w.push_back(a / facet.rhs);
            return WeightVector(std::move(w));
        }
    }
    return std::nullopt;
}

MinExp minimal_exponent(const Poly& f, const Limits& limits) {
    require_vanishing(f);
    ExtNat mu = milnor_number(f, limits);
    if (mu == ExtNat(0)) return MinExp{ExtRat::infinity(), ExponentMethod::smooth, true};
    if (mu.is_infinite()) return diagonal_estimate(f);
    auto blocks = ts_split(f);
    if (blocks.size() > 1) {
        ExtRat sum(Rational(0));
        for (const auto& b : blocks) {
            MinExp part = block_exponent(b.part, limits);
            if (!part.exact) return diagonal_estimate(f);
            sum = sum + part.value;
        }
        return MinExp{sum, ExponentMethod::thom_sebastiani, true};
    }
    return block_exponent(f, limits);
}

}  // namespace hypersing
