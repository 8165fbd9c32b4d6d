#include "hypersing/newton.hpp"

#include <algorithm>
#include <functional>

#include "hypersing/linalg.hpp"

namespace hypersing {

namespace {

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& x, const Rational& y) { return x < y; });
}

// Scales (w, c) so that w is a primitive integer vector.
Facet normalize(std::vector<Rational> w, Rational c) {
    Integer den_lcm = 1;
    for (const auto& x : w) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    for (auto& x : w) {
        x *= den_lcm;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    c *= den_lcm;
    for (auto& x : w) x /= g;
    c /= g;
    return Facet{std::move(w), std::move(c)};
}

void require_dim(std::size_t n) {
    if (n == 0) throw DomainError("Newton polyhedron of an empty point set");
    if (n > kMaxNewtonDim)
        throw DomainError("Newton polyhedron dimension " + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(kMaxNewtonDim));
}

}  // namespace

std::string to_string(ThetaStatus s) {
    switch (s) {
        case ThetaStatus::exact_monomial: return "exact_monomial";
        case ThetaStatus::exact_homogeneous: return "exact_homogeneous";
        case ThetaStatus::exact_ak: return "exact_ak";
        case ThetaStatus::newton_lower_bound: return "newton_lower_bound";
    }
    return "unknown";
}

NewtonPoly::NewtonPoly(std::size_t dim, std::vector<Point> vertices, std::vector<Facet> facets)
    : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {
    std::sort(vertices_.begin(), vertices_.end(), lex_less);
    std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) {
        if (a.normal != b.normal) return lex_less(a.normal, b.normal);
        return a.rhs < b.rhs;
    });
}

bool NewtonPoly::meets_every_axis() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        bool hit = std::any_of(vertices_.begin(), vertices_.end(), [&](const Point& v) {
            for (std::size_t j = 0; j < dim_; ++j)
                if (j != i && v[j] != 0) return false;
            return true;
        });
        if (!hit) return false;
    }
    return true;
}

NewtonPoly NewtonPoly::scaled(const Rational& k) const {
    if (sgn(k) <= 0) throw DomainError("scale factor must be positive");
    std::vector<Point> vs = vertices_;
    for (auto& v : vs)
        for (auto& x : v) x *= k;
    std::vector<Facet> fs = facets_;
    for (auto& f : fs) f.rhs *= k;
    return NewtonPoly(dim_, std::move(vs), std::move(fs));
}

NewtonPoly newton_polyhedron(std::span<const Point> input) {
    if (input.empty()) throw DomainError("Newton polyhedron of an empty point set");
    const std::size_t n = input.front().size();
    require_dim(n);
    for (const auto& p : input) {
        if (p.size() != n) throw DomainError("points of differing dimension");
        for (const auto& x : p)
            if (sgn(x) < 0) throw DomainError("Newton polyhedron points must be nonnegative");
    }
    // Drop duplicates and points dominated by another point; the region is unchanged.
    std::vector<Point> pts(input.begin(), input.end());
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Point> keep;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
            if (i == j) continue;
            bool ge = true;
            for (std::size_t k = 0; k < n && ge; ++k) ge = pts[i][k] >= pts[j][k];
            dominated = ge;
        }
        if (!dominated) keep.push_back(pts[i]);
    }
    pts = std::move(keep);

    // Candidate facets through k points and n-k axis directions.
    std::vector<Facet> facets;
    for (std::size_t k = 1; k <= std::min(n, pts.size()); ++k) {
        for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& pi) {
            for_each_subset(n, n - k, [&](const std::vector<std::size_t>& di) {
                linalg::Matrix rows;
                for (std::size_t a = 1; a < k; ++a) {
                    linalg::Vector r(n);
                    for (std::size_t c = 0; c < n; ++c) r[c] = pts[pi[a]][c] - pts[pi[0]][c];
                    rows.push_back(std::move(r));
                }
                for (auto d : di) {
                    linalg::Vector r(n, Rational(0));
                    r[d] = 1;
                    rows.push_back(std::move(r));
                }
                auto ns = rows.empty() ? std::vector<linalg::Vector>{} : linalg::nullspace(rows, n);
                if (n == 1) ns = {linalg::Vector{Rational(1)}};
                if (ns.size() != 1) return;
                auto w = ns.front();
                bool nonneg = std::all_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) >= 0; });
                bool nonpos = std::all_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) <= 0; });
                if (!nonneg && !nonpos) return;
                if (!nonneg)
                    for (auto& x : w) x = -x;
                Rational c = linalg::dot(w, pts[pi[0]]);
                for (const auto& p : pts)
                    if (linalg::dot(w, p) < c) return;
                Facet f = normalize(std::move(w), std::move(c));
                if (std::find(facets.begin(), facets.end(), f) == facets.end()) facets.push_back(std::move(f));
            });
        });
    }

    // A point is a vertex iff the normals of its tight facets have full rank.
    std::vector<Point> vertices;
    for (const auto& p : pts) {
        linalg::Matrix tight;
        for (const auto& f : facets)
            if (linalg::dot(f.normal, p) == f.rhs) tight.push_back(f.normal);
        if (linalg::rank(tight, n) == n) vertices.push_back(p);
    }
    return NewtonPoly(n, std::move(vertices), std::move(facets));
}

NewtonPoly newton_polyhedron(std::span<const Exponent> points) {
    std::vector<Point> pts;
    for (const auto& e : points) {
        Point p(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) p[i] = e[i];
        pts.push_back(std::move(p));
    }
    return newton_polyhedron(std::span<const Point>(pts));
}

NewtonPoly newton_polyhedron(const Ideal& ideal) {
    std::vector<Exponent> support;
    for (const auto& g : ideal.generators())
        for (const auto& [e, c] : g.terms()) support.push_back(e);
    if (support.empty()) throw DomainError("Newton polyhedron of the zero ideal");
    return newton_polyhedron(std::span<const Exponent>(support));
}

bool closure_contains(const NewtonPoly& np, std::span<const Rational> a) {
    if (a.size() != np.dimension()) throw DomainError("point dimension differs from the polyhedron");
    for (const auto& x : a)
        if (sgn(x) < 0) return false;
    for (const auto& f : np.facets()) {
        Rational s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += f.normal[i] * a[i];
        if (s < f.rhs) return false;
    }
    return true;
}

bool closure_contains(const NewtonPoly& np, const Exponent& a) {
    std::vector<Rational> p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i];
    return closure_contains(np, std::span<const Rational>(p));
}

ThetaVal theta_lp(const NewtonPoly& np) {
    if (!np.meets_every_axis()) throw DomainError("theta undefined: ideal not m-primary");
    const std::size_t n = np.dimension();
    const auto& verts = np.vertices();
    std::optional<ThetaVal> best;

    for (std::size_t fixed = 0; fixed < n; ++fixed) {
        // Unknowns: w_j for j != fixed (in order), then t. All constraints read row . x >= rhs.
        std::vector<std::size_t> free_idx;
        for (std::size_t j = 0; j < n; ++j)
            if (j != fixed) free_idx.push_back(j);
        const std::size_t m = free_idx.size() + 1;
        linalg::Matrix rows;
        linalg::Vector rhs;
        for (std::size_t a = 0; a < free_idx.size(); ++a) {
            linalg::Vector r(m, Rational(0));
            r[a] = 1;
            rows.push_back(std::move(r));
            rhs.push_back(1);
        }
        for (const auto& v : verts) {
            linalg::Vector r(m, Rational(0));
            for (std::size_t a = 0; a < free_idx.size(); ++a) r[a] = v[free_idx[a]];
            r[m - 1] = -1;
            rows.push_back(std::move(r));
            rhs.push_back(-v[fixed]);
        }
        // The feasible region is pointed and t is bounded by an axis vertex,
        // so the optimum sits at a basic solution.
        for_each_subset(rows.size(), m, [&](const std::vector<std::size_t>& active) {
            linalg::Matrix a;
            linalg::Vector b;
            for (auto i : active) {
                a.push_back(rows[i]);
                b.push_back(rhs[i]);
            }
            auto x = linalg::solve_unique(a, b, m);
            if (!x) return;
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (linalg::dot(rows[i], *x) < rhs[i]) return;
            const Rational& t = (*x)[m - 1];
            if (best && t <= best->value) return;
            std::vector<Rational> w(n);
            w[fixed] = 1;
            for (std::size_t k = 0; k < free_idx.size(); ++k) w[free_idx[k]] = (*x)[k];
            best = ThetaVal{t, ThetaStatus::exact_monomial, std::move(w)};
        });
    }
    return *best;
}

Rational theta_oracle(const Ideal& monomial_ideal, unsigned qmax) {
    if (qmax == 0) throw DomainError("qmax must be positive");
    if (!monomial_ideal.is_monomial()) throw DomainError("theta oracle needs a monomial ideal");
    NewtonPoly np = newton_polyhedron(monomial_ideal);
    if (!np.meets_every_axis()) throw DomainError("theta undefined: ideal not m-primary");
    const std::size_t n = np.dimension();
    Rational max_intercept = 0;
    for (const auto& v : np.vertices())
        for (const auto& x : v) max_intercept = std::max(max_intercept, x);

    std::optional<Rational> best;
    for (unsigned q = 1; q <= qmax; ++q) {
        // Beyond this degree some coordinate reaches q*max_intercept.
        std::uint64_t p_limit = static_cast<std::uint64_t>(ceil_of(Rational(max_intercept * q * n)).get_ui()) + 1;
        for (std::uint64_t p = 0; p <= p_limit; ++p) {
            if (best && Rational(p) / q >= *best) break;
            // Every monomial of degree p must land in q*NP.
            bool all_in = true;
            std::vector<Rational> a(n);
            std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
                if (!all_in) return;
                if (i + 1 == n) {
                    a[i] = Rational(left) / q;
                    if (!closure_contains(np, std::span<const Rational>(a))) all_in = false;
                    return;
                }
                for (std::uint64_t k = 0; k <= left && all_in; ++k) {
                    a[i] = Rational(k) / q;
                    rec(i + 1, left - k);
                }
            };
            rec(0, p);
            if (all_in) {
                Rational r(p, q);
                r.canonicalize();
                if (!best || r < *best) best = r;
                break;
            }
        }
    }
    return *best;
}

Rational lct_monomial(const NewtonPoly& np) {
    std::optional<Rational> t0;
    for (const auto& f : np.facets()) {
        if (sgn(f.rhs) <= 0) continue;
        Rational s = 0;
        for (const auto& w : f.normal) s += w;
        Rational t = f.rhs / s;
        if (!t0 || t > *t0) t0 = t;
    }
    if (!t0) throw DomainError("diagonal threshold undefined: polyhedron contains the origin");
    return 1 / *t0;
}

std::uint64_t multiplier_order(std::uint64_t m, const Rational& beta) {
    if (m == 0) throw DomainError("multiplier order needs m >= 1");
    if (sgn(beta) <= 0 || beta > 1) throw DomainError("multiplier order needs 0 < beta <= 1");
    Rational prod = beta * m;
    if (is_integer(prod)) return prod.get_num().get_ui() - 1;
    return floor_of(prod).get_ui();
}

}  // namespace hypersing
