#ifndef NILFILT_POLYNOMIAL_HPP
#define NILFILT_POLYNOMIAL_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nilfilt/ring.hpp"
#include "nilfilt/scalar.hpp"

namespace nilfilt {

struct Term {
  Monomial mono;
  Scalar coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in canonical form: terms strictly descending under the
/// ring order, no zero coefficients. The empty term list is zero.
class Polynomial {
public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts, merges and drops zero terms.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial monomial(RingPtr ring, Monomial m, Scalar c);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::uint64_t degree() const;

  /// Throws Error on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coefficient() const { return leading_term().coef; }

  /// Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  /// In place: this - c * m * g.
  void subtract_multiple(const Scalar& c, const Monomial& m, const Polynomial& g);
  /// Removes and returns the leading term.
  Term pop_leading();

  /// Same terms with exponent vectors remapped into `target`; each source
  /// variable i goes to target variable `index_map[i]`.
  Polynomial transport(const RingPtr& target, const std::vector<std::size_t>& index_map) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
  void canonicalize();
  Polynomial merge(const Polynomial& g, bool negate) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace nilfilt

#endif
