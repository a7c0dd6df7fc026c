#ifndef NILFILT_QUOTIENT_HPP
#define NILFILT_QUOTIENT_HPP

#include <map>
#include <string>
#include <vector>

#include "nilfilt/ideal.hpp"
#include "nilfilt/linalg.hpp"

namespace nilfilt {

/// Standard-monomial basis of a zero-dimensional quotient R/I, sorted
/// ascending under the ring order.
class QuotientBasis {
public:
  /// Throws Error if R/I is not finite-dimensional.
  explicit QuotientBasis(Ideal ideal);

  const Ideal& ideal() const { return ideal_; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  std::size_t dim() const { return monos_.size(); }
  /// Position of a standard monomial, or -1.
  int index_of(const Monomial& m) const;

  /// Coordinates of the normal form of f.
  Vector coordinates(const Polynomial& f) const;
  Polynomial from_coordinates(const Vector& v) const;

private:
  Ideal ideal_;
  std::vector<Monomial> monos_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;
};

/// True iff every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const Ideal& ideal);

/// dim_k R/I.
std::size_t quotient_dim(const Ideal& ideal);

/// dim_k A/B. Throws Error unless B ⊆ A and both quotients are finite.
std::size_t subquotient_dim(const Ideal& a, const Ideal& b);

/// A basis of the finite-dimensional space A/B (B ⊆ A), in echelon form over
/// the standard monomials of R/B. Each basis vector is keyed by its largest
/// standard monomial; vectors are listed with keys descending.
class SubquotientBasis {
public:
  SubquotientBasis(const Ideal& a, const Ideal& b);

  const Ideal& numerator() const { return a_; }
  const Ideal& denominator() const { return ambient_.ideal(); }
  std::size_t dim() const { return echelon_.rank(); }
  const std::vector<Monomial>& keys() const { return keys_; }
  std::vector<std::string> key_strings() const;
  /// Index of the basis vector with this key, or -1.
  int index_of_key(const Monomial& key) const;
  const Polynomial& representative(std::size_t i) const { return reps_[i]; }
  const QuotientBasis& ambient() const { return ambient_; }

  /// Coordinates of the class of f ∈ A. Throws Error if f ∉ A.
  Vector coordinates(const Polynomial& f) const;
  /// Polynomial representing the combination v of basis vectors.
  Polynomial lift(const Vector& v) const;
  /// Echelon basis of the image of the ideal G in A/B (G ⊆ A required).
  Echelon image(const Ideal& g) const;

private:
  Ideal a_;
  QuotientBasis ambient_;
  Echelon echelon_;
  std::vector<Monomial> keys_;
  std::vector<Polynomial> reps_;
};

}  // namespace nilfilt

#endif
