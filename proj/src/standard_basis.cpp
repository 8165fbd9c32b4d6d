#include "hypersing/standard_basis.hpp"

#include <algorithm>
#include <optional>
#include <queue>

namespace hypersing {

// ----------------------------------------------------------------- Ideal

Ideal::Ideal(VarSet vars, std::vector<Poly> generators) : vars_(std::move(vars)) {
    for (auto& g : generators) {
        if (!(g.vars() == vars_)) throw DomainError("ideal generator over a different variable set");
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

Ideal Ideal::maximal(const VarSet& vars) {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < vars.size(); ++i) gens.push_back(Poly::variable(vars, i));
    return Ideal(vars, std::move(gens));
}

bool Ideal::is_monomial() const {
    return std::all_of(generators_.begin(), generators_.end(), [](const Poly& g) { return g.is_monomial(); });
}

// ------------------------------------------------------------ LocalOrder

bool LocalOrder::greater(const Exponent& a, const Exponent& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Exponent LocalOrder::leading_exponent(const Poly& f) {
    if (f.is_zero()) throw DomainError("zero polynomial has no leading exponent");
    const Exponent* best = nullptr;
    for (const auto& [e, c] : f.terms())
        if (!best || greater(e, *best)) best = &e;
    return *best;
}

// ------------------------------------------------------------- Staircase

namespace {

std::vector<Exponent> minimal_antichain(std::vector<Exponent> exps) {
    std::sort(exps.begin(), exps.end(), GrlexLess{});
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<Exponent> out;
    for (const auto& e : exps) {
        bool redundant = std::any_of(out.begin(), out.end(), [&](const Exponent& c) { return c.divides(e); });
        if (!redundant) out.push_back(e);
    }
    return out;
}

// Visits every cell of the box prod [0, bound_i) in odometer order.
template <typename Fn>
void walk_box(const std::vector<std::uint32_t>& bounds, Fn&& fn) {
    const std::size_t n = bounds.size();
    Exponent e(n);
    while (true) {
        fn(e);
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] < bounds[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) return;
    }
}

}  // namespace

Staircase::Staircase(std::size_t arity, std::vector<Exponent> corners, std::uint64_t max_cells)
    : arity_(arity), corners_(minimal_antichain(std::move(corners))), max_cells_(max_cells) {
    std::vector<std::uint32_t> bounds(arity, 0);
    cofinite_ = true;
    for (std::size_t i = 0; i < arity; ++i) {
        for (const auto& c : corners_) {
            if (c.degree() == c[i] && (bounds[i] == 0 || c[i] < bounds[i])) bounds[i] = c[i];
        }
        if (bounds[i] == 0 && !std::any_of(corners_.begin(), corners_.end(),
                                            [](const Exponent& c) { return c.is_zero(); }))
            cofinite_ = false;
    }
    if (std::any_of(corners_.begin(), corners_.end(), [](const Exponent& c) { return c.is_zero(); })) {
        cofinite_ = true;
        colength_ = 0;
        return;
    }
    if (!cofinite_) {
        colength_ = ExtNat::infinity();
        return;
    }
    std::uint64_t cells = 1;
    for (auto b : bounds) {
        if (cells > max_cells_ / b + 1) throw BudgetExceeded("staircase box exceeds the cell cap");
        cells *= b;
    }
    if (cells > max_cells_) throw BudgetExceeded("staircase box exceeds the cell cap");
    std::uint64_t count = 0;
    walk_box(bounds, [&](const Exponent& e) {
        if (!contains(e)) ++count;
    });
    colength_ = count;
}

bool Staircase::contains(const Exponent& e) const {
    return std::any_of(corners_.begin(), corners_.end(), [&](const Exponent& c) { return c.divides(e); });
}

std::vector<Exponent> Staircase::outside_monomials() const {
    if (!cofinite_) throw DomainError("quotient is infinite dimensional");
    std::vector<Exponent> out;
    if (colength_.value() == 0) return out;
    std::vector<std::uint32_t> bounds(arity_, 0);
    for (std::size_t i = 0; i < arity_; ++i)
        for (const auto& c : corners_)
            if (c.degree() == c[i] && (bounds[i] == 0 || c[i] < bounds[i])) bounds[i] = c[i];
    walk_box(bounds, [&](const Exponent& e) {
        if (!contains(e)) out.push_back(e);
    });
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

// ------------------------------------------------------ Mora engine

namespace {

struct Term {
    Exponent e;
    Rational c;
};

// Terms sorted with the leading term (largest in the local order) first.
using LPoly = std::vector<Term>;

struct Reducer {
    LPoly p;
    std::uint64_t ecart;
};

std::uint64_t ecart_of(const LPoly& p) {
    std::uint64_t top = 0;
    for (const auto& t : p) top = std::max(top, t.e.degree());
    return top - p.front().e.degree();
}

LPoly to_lpoly(const Poly& f) {
    LPoly p;
    p.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) p.push_back({e, c});
    std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return LocalOrder::greater(a.e, b.e); });
    return p;
}

Poly to_poly(const LPoly& p, const VarSet& vars) {
    Poly f(vars);
    for (const auto& t : p) f.add_term(t.e, t.c);
    return f;
}

class Engine {
public:
    Engine(std::size_t arity, const Limits& limits, std::optional<std::uint64_t> corner = std::nullopt)
        : arity_(arity), limits_(limits), corner_(corner) {}

    // h - (lc(h)/lc(g)) * x^(lm(h)-lm(g)) * g, truncated above the corner.
    LPoly reduce(const LPoly& h, const LPoly& g) {
        Rational factor = h.front().c / g.front().c;
        Exponent shift = h.front().e - g.front().e;
        LPoly out;
        out.reserve(h.size() + g.size());
        std::size_t i = 1, j = 1;  // leading terms cancel
        while (i < h.size() || j < g.size()) {
            if (j >= g.size()) {
                push(out, h[i].e, h[i].c);
                ++i;
                continue;
            }
            Exponent ge = g[j].e + shift;
            if (i >= h.size() || LocalOrder::greater(ge, h[i].e)) {
                push(out, ge, -factor * g[j].c);
                ++j;
            } else if (LocalOrder::greater(h[i].e, ge)) {
                push(out, h[i].e, h[i].c);
                ++i;
            } else {
                Rational c = h[i].c - factor * g[j].c;
                if (c != 0) push(out, ge, std::move(c));
                ++i;
                ++j;
            }
        }
        if (out.size() > limits_.max_terms)
            throw BudgetExceeded("intermediate polynomial exceeds " + std::to_string(limits_.max_terms) + " terms");
        return out;
    }

    void count_step() {
        if (++steps_ > limits_.max_steps)
            throw BudgetExceeded("standard basis exceeded " + std::to_string(limits_.max_steps) + " reduction steps");
    }

    // Mora weak normal form. base is never modified; reducers discovered
    // during the reduction live in a local extension.
    LPoly normal_form(LPoly h, const std::vector<Reducer>& base) {
        std::vector<Reducer> extra;
        truncate(h);
        while (!h.empty()) {
            const Exponent& lm = h.front().e;
            const Reducer* best = nullptr;
            for (const auto& r : base)
                if (r.p.front().e.divides(lm) && (!best || r.ecart < best->ecart)) best = &r;
            for (const auto& r : extra)
                if (r.p.front().e.divides(lm) && (!best || r.ecart < best->ecart)) best = &r;
            if (!best) break;
            std::uint64_t eh = ecart_of(h);
            LPoly reduced = reduce(h, best->p);
            if (best->ecart > eh) extra.push_back({std::move(h), eh});
            h = std::move(reduced);
            count_step();
        }
        return h;
    }

    LPoly spoly(const LPoly& f, const LPoly& g) {
        Exponent l = lcm(f.front().e, g.front().e);
        LPoly lifted;
        lifted.reserve(f.size());
        Exponent shift = l - f.front().e;
        for (const auto& t : f) push(lifted, t.e + shift, t.c);
        if (lifted.empty()) return lifted;  // lcm already beyond the corner
        return reduce(lifted, g);
    }

    void make_monic(LPoly& p) {
        Rational inv = 1 / p.front().c;
        for (auto& t : p) t.c *= inv;
    }

    // Once every monomial of degree >= corner lies in the leading ideal, the
    // ideal contains m^corner and all such terms can be dropped.
    void update_corner(const std::vector<Reducer>& basis) {
        std::vector<Exponent> lms;
        for (const auto& r : basis) lms.push_back(r.p.front().e);
        std::uint64_t bound = 0;
        for (std::size_t i = 0; i < arity_; ++i) {
            std::uint32_t b = 0;
            for (const auto& c : lms)
                if (c.degree() == c[i] && (b == 0 || c[i] < b)) b = c[i];
            bool unit = std::any_of(lms.begin(), lms.end(), [](const Exponent& c) { return c.is_zero(); });
            if (b == 0 && !unit) return;  // not cofinite yet
            bound += b == 0 ? 0 : b - 1;
        }
        auto in_leading = [&](const Exponent& x) {
            return std::any_of(lms.begin(), lms.end(), [&](const Exponent& c) { return c.divides(x); });
        };
        // Smallest degree d <= bound + 1 whose monomials all lie in the leading ideal.
        for (std::uint64_t d = 0; d <= bound + 1; ++d) {
            if (corner_ && d >= *corner_) return;
            Exponent e(arity_);
            bool ok = true;
            enumerate(e, 0, d, [&](const Exponent& x) {
                if (ok && !in_leading(x)) ok = false;
            });
            if (ok) {
                corner_ = d;
                return;
            }
        }
    }

    void truncate(LPoly& p) const {
        if (!corner_ || p.empty()) return;
        if (p.front().e.degree() >= *corner_) {
            p.clear();  // lies in m^corner, hence in the ideal
            return;
        }
        auto it = std::find_if(p.begin(), p.end(), [&](const Term& t) { return t.e.degree() >= *corner_; });
        // Terms are degree-ascending, so everything from `it` on is high degree.
        p.erase(it, p.end());
    }

    bool truncate_basis_element(LPoly& p) const {
        if (!corner_) return false;
        if (p.front().e.degree() >= *corner_) {
            p.resize(1);  // the leading monomial alone is in the ideal
            return true;
        }
        truncate(p);
        return true;
    }

    std::optional<std::uint64_t> corner() const { return corner_; }

private:
    void push(LPoly& out, const Exponent& e, Rational c) {
        if (corner_ && e.degree() >= *corner_) return;
        out.push_back({e, std::move(c)});
    }

    template <typename Fn>
    void enumerate(Exponent& e, std::size_t i, std::uint64_t left, Fn&& fn) const {
        if (i + 1 == arity_) {
            e[i] = static_cast<std::uint32_t>(left);
            fn(e);
            return;
        }
        for (std::uint64_t k = 0; k <= left; ++k) {
            e[i] = static_cast<std::uint32_t>(k);
            enumerate(e, i + 1, left - k, fn);
        }
    }

    std::size_t arity_;
    Limits limits_;
    std::size_t steps_ = 0;
    std::optional<std::uint64_t> corner_;
};

struct Pair {
    std::size_t i, j;
    Exponent lcm;
    std::uint64_t seq;
};

struct PairAfter {
    // priority_queue pops the "largest": largest lcm in the local order, then lowest seq.
    bool operator()(const Pair& a, const Pair& b) const {
        if (LocalOrder::greater(a.lcm, b.lcm)) return false;
        if (LocalOrder::greater(b.lcm, a.lcm)) return true;
        return a.seq > b.seq;
    }
};

bool coprime(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

std::vector<Reducer> compute_basis(const Ideal& ideal, const Limits& limits,
                                   std::optional<std::uint64_t>& corner) {
    const std::size_t n = ideal.vars().size();
    Engine engine(n, limits);
    std::vector<Reducer> basis;
    std::priority_queue<Pair, std::vector<Pair>, PairAfter> pairs;
    std::uint64_t seq = 0;

    auto insert = [&](LPoly h) {
        engine.make_monic(h);
        std::size_t k = basis.size();
        for (std::size_t i = 0; i < k; ++i) {
            const auto& lm_i = basis[i].p.front().e;
            if (coprime(lm_i, h.front().e)) continue;  // product criterion
            pairs.push({i, k, lcm(lm_i, h.front().e), seq++});
        }
        std::uint64_t e = ecart_of(h);
        basis.push_back({std::move(h), e});
        auto before = engine.corner();
        engine.update_corner(basis);
        if (engine.corner() != before) {
            for (auto& r : basis) {
                engine.truncate_basis_element(r.p);
                r.ecart = ecart_of(r.p);
            }
        }
    };

    for (const auto& g : ideal.generators()) {
        LPoly h = engine.normal_form(to_lpoly(g), basis);
        if (!h.empty()) insert(std::move(h));
    }
    while (!pairs.empty()) {
        Pair pr = pairs.top();
        pairs.pop();
        LPoly s = engine.spoly(basis[pr.i].p, basis[pr.j].p);
        LPoly h = engine.normal_form(std::move(s), basis);
        if (!h.empty()) insert(std::move(h));
    }
    corner = engine.corner();
    return basis;
}

}  // namespace

StandardBasis standard_basis(const Ideal& ideal, const Limits& limits) {
    std::optional<std::uint64_t> corner;
    auto reducers = compute_basis(ideal, limits, corner);
    // Keep one element per minimal leading exponent (earliest wins).
    std::vector<Poly> basis;
    std::vector<Exponent> lms;
    for (std::size_t i = 0; i < reducers.size(); ++i) {
        const auto& lm = reducers[i].p.front().e;
        bool redundant = false;
        for (std::size_t j = 0; j < reducers.size() && !redundant; ++j) {
            if (j == i) continue;
            const auto& other = reducers[j].p.front().e;
            if (other.divides(lm) && (!(other == lm) || j < i)) redundant = true;
        }
        if (redundant) continue;
        basis.push_back(to_poly(reducers[i].p, ideal.vars()));
        lms.push_back(lm);
    }
    Staircase st(ideal.vars().size(), std::move(lms), limits.max_cells);
    return StandardBasis(ideal, std::move(basis), std::move(st), corner);
}

Poly normal_form(const Poly& f, const StandardBasis& sb, const Limits& limits) {
    Engine engine(sb.ideal().vars().size(), limits, sb.corner());
    std::vector<Reducer> base;
    for (const auto& g : sb.basis()) {
        LPoly p = to_lpoly(g);
        std::uint64_t e = ecart_of(p);
        base.push_back({std::move(p), e});
    }
    if (f.is_zero()) return f;
    return to_poly(engine.normal_form(to_lpoly(f), base), f.vars());
}

ExtNat colength(const Ideal& ideal, const Limits& limits) {
    return standard_basis(ideal, limits).staircase().colength();
}

std::vector<Exponent> quotient_monomial_basis(const Ideal& ideal, const Limits& limits) {
    auto sb = standard_basis(ideal, limits);
    if (!sb.staircase().cofinite()) throw DomainError("quotient is infinite dimensional");
    return sb.staircase().outside_monomials();
}

}  // namespace hypersing
