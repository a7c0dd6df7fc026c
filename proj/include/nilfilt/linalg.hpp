#ifndef NILFILT_LINALG_HPP
#define NILFILT_LINALG_HPP

#include <optional>
#include <vector>

#include "nilfilt/scalar.hpp"

namespace nilfilt {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row-major

Vector zero_vector(std::size_t n, Field f);
bool is_zero(const Vector& v);

/// Fully reduced row echelon form. With `high_pivots` the pivot of each row
/// is its last nonzero column instead of its first.
struct Echelon {
  std::size_t cols = 0;
  Matrix rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
  /// Coefficients expressing `v` in the rows, or nullopt if `v` is not in
  /// their span.
  std::optional<Vector> solve(const Vector& v) const;
  bool spans(const Vector& v) const { return solve(v).has_value(); }
};

Echelon echelonize(Matrix rows, std::size_t cols, Field f, bool high_pivots = false);

std::size_t rank(const Matrix& rows, std::size_t cols, Field f);

/// Basis of { x : row · x = 0 for every row }.
Matrix nullspace(const Matrix& rows, std::size_t cols, Field f);

Scalar dot(const Vector& a, const Vector& b);

}  // namespace nilfilt

#endif
