#include "hypersing/linalg.hpp"

namespace hypersing::linalg {

std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational inv = 1 / m[row][col];
        for (std::size_t j = col; j < m[row].size(); ++j) m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational factor = m[r][col];
            for (std::size_t j = col; j < m[r].size(); ++j) m[r][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m, std::size_t cols) { return row_reduce(m, cols).size(); }

std::optional<Vector> solve_unique(const Matrix& a, const Vector& b, std::size_t cols) {
    Matrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto pivots = row_reduce(aug, cols + 1);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
    if (pivots.size() != cols) return std::nullopt;                      // underdetermined
    Vector x(cols);
    for (std::size_t i = 0; i < cols; ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

std::vector<Vector> nullspace(const Matrix& a, std::size_t cols) {
    Matrix m = a;
    auto pivots = row_reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational dot(const Vector& a, const Vector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace hypersing::linalg
