#pragma once

#include <optional>
#include <vector>

#include "cayley/rational.hpp"

namespace cayley {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<size_t> rref(Mat& m);

size_t rank(Mat m);

/// Basis of the right nullspace of m (rows x cols), as cols-vectors.
std::vector<Vec> nullspace(const Mat& m, size_t cols);

/// Solves A x = b exactly (A may be rectangular). Returns nullopt if the
/// system is inconsistent; requires full column rank for a unique solution,
/// and reports rank deficiency through *rank_deficient when provided.
std::optional<Vec> solve(const Mat& a, const Vec& b, bool* rank_deficient = nullptr);

std::optional<Mat> invert(const Mat& m);

Mat mat_mul(const Mat& a, const Mat& b);

/// Row spans compared as subspaces (via identical RREF).
bool same_row_span(Mat a, Mat b);

}  // namespace cayley
