#include "qh/linalg.hpp"

#include <cassert>

namespace qh {

Mat identity_matrix(std::size_t n) {
    Mat m(n, Vec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    Mat out(r, Vec(c, Rational(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < c; ++l) out[i][l] += a[i][j] * b[j][l];
        }
    return out;
}

Vec mat_apply(const Mat& a, const Vec& v) {
    Vec out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

std::optional<Mat> mat_inverse(const Mat& a) {
    std::size_t n = a.size();
    Mat work = a;
    Mat inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = work[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            work[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || work[row][col] == 0) continue;
            Rational f = work[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                work[row][j] -= f * work[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

// Row echelon; returns pivot columns.
std::vector<std::size_t> echelon(Mat& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    std::size_t rows = a.size(), cols = a[0].size(), row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        Rational p = a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] /= p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t mat_rank(Mat a) { return echelon(a).size(); }

std::vector<Vec> mat_kernel(Mat a) {
    if (a.empty()) return {};
    std::size_t cols = a[0].size();
    auto pivots = echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> mat_solve(Mat a, Vec b) {
    std::size_t rows = a.size();
    if (rows == 0) return Vec{};
    std::size_t cols = a[0].size();
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = echelon(a);
    // inconsistent iff a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vec x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

} // namespace qh
