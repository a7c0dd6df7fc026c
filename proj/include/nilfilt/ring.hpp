#ifndef NILFILT_RING_HPP
#define NILFILT_RING_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nilfilt/scalar.hpp"

namespace nilfilt {

/// Exponent vector. The arity is fixed by the ring it belongs to.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exp_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exp_(std::move(exps)) {}

  static Monomial variable(std::size_t arity, std::size_t index, std::uint32_t power = 1);

  std::size_t arity() const { return exp_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exp_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exp_; }

  std::uint64_t degree() const;
  bool is_one() const;
  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// Exact quotient; requires `d.divides(*this)`.
  Monomial operator/(const Monomial& d) const;
  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);
  bool coprime(const Monomial& o) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<std::uint32_t> exp_;
};

/// lex, degrevlex, or a block order whose first `block_size` variables are
/// compared first (by `outer`), ties broken on the remaining ones (by `inner`).
struct MonomialOrder {
  enum class Kind { Lex, DegRevLex, Block };

  Kind kind = Kind::DegRevLex;
  std::size_t block_size = 0;
  Kind outer = Kind::Lex;
  Kind inner = Kind::DegRevLex;

  static MonomialOrder lex() { return {Kind::Lex}; }
  static MonomialOrder degrevlex() { return {Kind::DegRevLex}; }
  static MonomialOrder block(std::size_t k, Kind outer, Kind inner);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Descriptor of k[v_1..v_n] with a fixed monomial order.
class Ring {
public:
  /// Throws Error on empty or duplicate variable names.
  Ring(std::vector<std::string> vars, Field field = {}, MonomialOrder order = {});

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  Field field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b);
  }

  std::string monomial_string(const Monomial& m) const;
  std::string describe() const;

  friend bool operator==(const Ring&, const Ring&) = default;

private:
  std::vector<std::string> vars_;
  Field field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, Field field = {}, MonomialOrder order = {});

/// Same variables and field, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Throws Error unless the two rings are equal.
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what);

}  // namespace nilfilt

#endif
