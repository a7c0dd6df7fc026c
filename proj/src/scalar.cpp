#include "nilfilt/scalar.hpp"

#include <ostream>

namespace nilfilt {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t residue(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1;
  b %= p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return acc;
}

}  // namespace

std::string Field::name() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(prime) + ")";
}

Field Field::prime_field(std::uint64_t p) {
  if (!is_prime(p) || p >= (1ull << 32))
    throw Error("GF(" + std::to_string(p) + "): modulus must be a prime below 2^32");
  return Field{p};
}

Scalar::Scalar(long v, Field f) : field_(f), q_(v) { reduce(); }

Scalar::Scalar(const mpq_class& v, Field f) : field_(f), q_(v) {
  q_.canonicalize();
  reduce();
}

void Scalar::reduce() {
  if (field_.is_rational()) return;
  std::uint64_t p = field_.prime;
  std::uint64_t den = residue(q_.get_den(), p);
  if (den == 0) throw Error("denominator is not invertible in " + field_.name());
  r_ = residue(q_.get_num(), p) * pow_mod(den, p - 2, p) % p;
  q_ = 0;
}

Scalar Scalar::parse(const std::string& text, Field f) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw Error("malformed coefficient '" + text + "'");
  if (v.get_den() == 0) throw Error("zero denominator in '" + text + "'");
  return Scalar(v, f);
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

int Scalar::sign() const {
  if (field_.is_rational()) return sgn(q_);
  return r_ == 0 ? 0 : 1;
}

mpq_class Scalar::to_rational() const {
  if (field_.is_rational()) return q_;
  return mpq_class(static_cast<unsigned long>(r_));
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

void Scalar::check_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error("coefficient field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.prime - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = pow_mod(r_, field_.prime - 2, field_.prime);
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_field(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % field_.prime;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_field(o);
  if (field_.is_rational())
    q_ -= o.q_;
  else
    r_ = (r_ + field_.prime - o.r_) % field_.prime;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_field(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = r_ * o.r_ % field_.prime;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace nilfilt
