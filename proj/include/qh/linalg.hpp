#ifndef QH_LINALG_HPP
#define QH_LINALG_HPP

#include "qh/rational.hpp"

#include <optional>
#include <vector>

namespace qh {

// Dense exact-rational matrices, row major.  Sizes here are tiny (basis
// dimensions), so plain Gaussian elimination is fine.
using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

Mat identity_matrix(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& v);

// Inverse, or nullopt when singular.
std::optional<Mat> mat_inverse(const Mat& a);

std::size_t mat_rank(Mat a);

// Basis of the kernel {x : a x = 0}; a is m x n, results have length n.
std::vector<Vec> mat_kernel(Mat a);

// One solution of a x = b, or nullopt when inconsistent.
std::optional<Vec> mat_solve(Mat a, Vec b);

} // namespace qh

#endif
