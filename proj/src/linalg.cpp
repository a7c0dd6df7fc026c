#include "nilfilt/linalg.hpp"

#include <algorithm>

namespace nilfilt {

Vector zero_vector(std::size_t n, Field f) { return Vector(n, Scalar(f)); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("dot: length mismatch");
  if (a.empty()) return Scalar();
  Scalar acc(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Echelon echelonize(Matrix rows, std::size_t cols, Field f, bool high_pivots) {
  Echelon e;
  e.cols = cols;
  std::vector<std::size_t> order(cols);
  for (std::size_t c = 0; c < cols; ++c) order[c] = high_pivots ? cols - 1 - c : c;

  std::size_t next = 0;
  for (std::size_t c : order) {
    std::size_t hit = next;
    while (hit < rows.size() && rows[hit][c].is_zero()) ++hit;
    if (hit == rows.size()) continue;
    std::swap(rows[next], rows[hit]);
    Scalar inv = rows[next][c].inverse();
    for (auto& x : rows[next]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][c].is_zero()) continue;
      Scalar factor = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= factor * rows[next][k];
    }
    e.pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  e.rows = std::move(rows);
  for (auto& row : e.rows)
    if (row.size() != cols) row.resize(cols, Scalar(f));
  return e;
}

std::optional<Vector> Echelon::solve(const Vector& v) const {
  if (v.size() != cols) throw Error("echelon solve: length mismatch");
  Vector rest = v;
  Vector coeffs;
  coeffs.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Scalar c = rest[pivots[r]];
    coeffs.push_back(c);
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < cols; ++k) rest[k] -= c * rows[r][k];
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeffs;
}

std::size_t rank(const Matrix& rows, std::size_t cols, Field f) {
  return echelonize(rows, cols, f).rank();
}

Matrix nullspace(const Matrix& rows, std::size_t cols, Field f) {
  Echelon e = echelonize(rows, cols, f);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(cols, f);
    v[free] = Scalar(1, f);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nilfilt
