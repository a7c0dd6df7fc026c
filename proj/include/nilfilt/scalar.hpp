#ifndef NILFILT_SCALAR_HPP
#define NILFILT_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace nilfilt {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Coefficient field: characteristic 0 (the rationals) or a prime field.
struct Field {
  std::uint64_t prime = 0;  // 0 means QQ

  bool is_rational() const { return prime == 0; }
  std::string name() const;

  static Field rationals() { return Field{}; }
  /// Throws Error if `p` is not prime or does not fit in 32 bits.
  static Field prime_field(std::uint64_t p);

  friend bool operator==(const Field&, const Field&) = default;
};

/// An exact field element. Rationals are kept normalized by GMP (coprime,
/// positive denominator); prime-field residues live in [0, p).
class Scalar {
public:
  Scalar() = default;
  explicit Scalar(Field f) : field_(f) {}
  Scalar(long v, Field f = {});
  Scalar(const mpq_class& v, Field f = {});

  static Scalar parse(const std::string& text, Field f);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// Sign for rationals; residues are reported as positive.
  int sign() const;

  /// The rational value. For prime fields, the canonical representative.
  mpq_class to_rational() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
  void check_field(const Scalar& o) const;
  void reduce();

  Field field_{};
  mpq_class q_{0};
  std::uint64_t r_ = 0;
};

}  // namespace nilfilt

#endif
