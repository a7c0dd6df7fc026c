#ifndef NILFILT_IDEAL_HPP
#define NILFILT_IDEAL_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "nilfilt/groebner.hpp"

namespace nilfilt {

/// Finitely generated ideal. The reduced Groebner basis is computed on first
/// use and shared between copies; concurrent first use is safe.
class Ideal {
public:
  explicit Ideal(RingPtr ring);
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
  /// Ideal generated by the given variables (by index).
  static Ideal variables(RingPtr ring, const std::vector<std::size_t>& indices);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerBasis& groebner() const;

  bool is_zero() const { return groebner().is_zero_ideal(); }
  bool is_unit() const { return groebner().is_unit_ideal(); }
  /// True iff the reduced basis consists of monomials.
  bool is_monomial() const;

  bool contains(const Polynomial& f) const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const Ideal& other) const;

  /// Canonical generator strings (reduced basis, monic, ascending).
  std::vector<std::string> canonical_strings() const;
  /// "(g1, g2, ...)" over the canonical generators.
  std::string to_string() const;

private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<GroebnerBasis> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool is_member(const Polynomial& f, const Ideal& ideal);
bool equals(const Ideal& a, const Ideal& b);
/// a contains b
bool contains(const Ideal& a, const Ideal& b);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, unsigned k);
Ideal intersect(const Ideal& a, const Ideal& b);
/// Ideal quotient a : b. Throws Error if b is the zero ideal.
Ideal colon(const Ideal& a, const Ideal& b);
/// a : b^infinity, iterating colons until stable. Throws Error past `max_iter`.
Ideal saturate(const Ideal& a, const Ideal& b, unsigned max_iter = 0);

/// Same ideal recomputed under a different monomial order.
Ideal reorder(const Ideal& a, MonomialOrder order);

/// Iteration cap used when none is given: NILFILT_MAX_ITER or 64.
unsigned default_max_iter();

/// Exact quotient f / g; throws Error if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace nilfilt

#endif
