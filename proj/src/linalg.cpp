#include "krstab/linalg.hpp"

#include <utility>

namespace krstab {

std::vector<int> rref(RatMatrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        const Rational inv = 1 / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

RatMatrix identity_matrix(int n) {
    RatMatrix m(n, RatRow(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMatrix invert(const RatMatrix& a) {
    const int n = static_cast<int>(a.size());
    RatMatrix aug(n, RatRow(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n)
            throw inconsistent_basis_error("invert: matrix is not square");
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n)
        throw inconsistent_basis_error("invert: singular matrix");
    for (int i = 0; i < n; ++i)
        if (pivots[i] != i) throw inconsistent_basis_error("invert: singular matrix");
    RatMatrix inv(n, RatRow(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::vector<Rational> mat_vec(const RatMatrix& a, const std::vector<Rational>& x) {
    std::vector<Rational> y(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0 && x[j] != 0) y[i] += a[i][j] * x[j];
    return y;
}

} // namespace krstab
