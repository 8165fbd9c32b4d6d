#pragma once

// Independent reference computations for the tests. Nothing here calls the
// standard basis engine or the Newton code.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "hypersing/poly.hpp"

namespace oracle {

using hypersing::Exponent;
using hypersing::Poly;
using hypersing::Rational;

inline void exponents_below(std::size_t n, std::uint64_t max_deg, std::vector<Exponent>& out) {
    Exponent e(n);
    // Odometer over the box [0, max_deg]^n, keeping degree <= max_deg.
    for (;;) {
        if (e.degree() <= max_deg) out.push_back(e);
        std::size_t i = 0;
        while (i < n) {
            if (e[i] < max_deg) {
                ++e[i];
                break;
            }
            e[i] = 0;
            ++i;
        }
        if (i == n) return;
    }
}

/// Rank of a dense rational matrix by plain elimination.
inline std::size_t rank_of(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// dim Q[x]/(I + m^N) by linear algebra on the truncated ideal.
inline std::uint64_t truncated_colength(const std::vector<Poly>& gens, std::size_t n, std::uint64_t N) {
    std::vector<Exponent> monos;
    exponents_below(n, N - 1, monos);
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i].to_vector()] = i;
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) {
        for (const auto& a : monos) {
            std::vector<Rational> row(monos.size(), Rational(0));
            bool any = false;
            for (const auto& [e, c] : g.terms()) {
                Exponent s = e + a;
                if (s.degree() >= N) continue;
                row[index.at(s.to_vector())] += c;
                any = true;
            }
            if (any) rows.push_back(std::move(row));
        }
    }
    return monos.size() - rank_of(std::move(rows));
}

/// Local colength via stabilization of the truncated dimensions; returns
/// nullopt when no stabilization happens up to max_n.
inline std::optional<std::uint64_t> colength(const std::vector<Poly>& gens, std::size_t n, std::uint64_t max_n) {
    std::uint64_t prev = truncated_colength(gens, n, 1);
    for (std::uint64_t N = 2; N <= max_n; ++N) {
        std::uint64_t cur = truncated_colength(gens, n, N);
        if (cur == prev) return cur;  // m^(N-1) lies in I + m^N, hence in I
        prev = cur;
    }
    return std::nullopt;
}

/// Number of lattice points outside the monomial ideal generated by corners,
/// counted in an explicit box.
inline std::uint64_t monomial_colength(const std::vector<Exponent>& corners, std::size_t n, std::uint32_t box) {
    std::vector<Exponent> pts;
    exponents_below(n, static_cast<std::uint64_t>(box) * n, pts);
    std::uint64_t count = 0;
    for (const auto& p : pts) {
        bool inside_box = true;
        for (std::size_t i = 0; i < n; ++i) inside_box = inside_box && p[i] < box;
        if (!inside_box) continue;
        bool in_ideal = std::any_of(corners.begin(), corners.end(), [&](const Exponent& c) {
            for (std::size_t i = 0; i < n; ++i)
                if (c[i] > p[i]) return false;
            return true;
        });
        if (!in_ideal) ++count;
    }
    return count;
}

/// {sum k_i / a_i : 1 <= k_i <= a_i - 1} as a sorted list.
inline std::vector<Rational> brieskorn_spectrum(const std::vector<unsigned>& a) {
    std::vector<Rational> out{Rational(0)};
    for (unsigned ai : a) {
        std::vector<Rational> next;
        for (const auto& v : out)
            for (unsigned k = 1; k < ai; ++k) {
                Rational s = v + Rational(k, ai);
                s.canonicalize();
                next.push_back(s);
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::uint64_t brieskorn_mu(const std::vector<unsigned>& a) {
    std::uint64_t p = 1;
    for (unsigned ai : a) p *= ai - 1;
    return p;
}

/// Random polynomial with at most `terms` terms, degrees <= max_deg and small
/// integer coefficients.
inline Poly random_poly(std::mt19937_64& rng, const hypersing::VarSet& vars, int terms, std::uint32_t max_deg,
                        bool allow_constant = true) {
    Poly f(vars);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
    for (int t = 0; t < terms; ++t) {
        Exponent e(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) e[i] = deg(rng);
        if (!allow_constant && e.is_zero()) continue;
        if (int c = coef(rng); c != 0) f.add_term(e, Rational(c));
    }
    return f;
}

}  // namespace oracle
