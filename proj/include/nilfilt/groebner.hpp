#ifndef NILFILT_GROEBNER_HPP
#define NILFILT_GROEBNER_HPP

#include <span>
#include <vector>

#include "nilfilt/polynomial.hpp"

namespace nilfilt {

/// Reduced Groebner basis: monic, inter-reduced, sorted by leading monomial
/// ascending. Canonical for the ideal and the ring's order, so ideal equality
/// is element-wise equality.
class GroebnerBasis {
public:
  explicit GroebnerBasis(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool is_zero_ideal() const { return elems_.empty(); }
  bool is_unit_ideal() const { return elems_.size() == 1 && elems_[0].is_constant(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool reduces_to_zero(const Polynomial& f) const { return normal_form(f).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

private:
  friend GroebnerBasis buchberger(std::span<const Polynomial>, const RingPtr&);

  RingPtr ring_;
  std::vector<Polynomial> elems_;
};

/// Remainder of `f` on division by `divisors`, taken in the given order.
/// The largest reducible term is always reduced first, by the first divisor
/// whose leading monomial divides it.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

/// Reduced Groebner basis of the ideal generated by `gens` in `ring`
/// (Buchberger with normal pair selection and the Gebauer-Moeller criteria).
GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring);

/// Drop zeros, make monic, sort ascending and remove duplicates; a purely
/// monomial list is also minimized. Generates the same ideal.
std::vector<Polynomial> tidy_generators(std::vector<Polynomial> gens);

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

}  // namespace nilfilt

#endif
