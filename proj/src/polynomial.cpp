#include "nilfilt/polynomial.hpp"

#include <algorithm>
#include <ostream>

namespace nilfilt {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.mono.arity() != ring_->arity()) throw Error("term arity does not match the ring");
  canonicalize();
}

void Polynomial::canonicalize() {
  const Ring& r = *ring_;
  std::sort(terms_.begin(), terms_.end(), [&r](const Term& a, const Term& b) {
    return r.compare(a.mono, b.mono) == std::strong_ordering::greater;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
    if (out.size() >= 2 && out[out.size() - 2].coef.is_zero())
      out.erase(out.end() - 2);
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  auto n = ring->arity();
  return monomial(std::move(ring), Monomial(n), c);
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Field f = ring->field();
  return constant(std::move(ring), Scalar(c, f));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  auto n = ring->arity();
  Field f = ring->field();
  return monomial(std::move(ring), Monomial::variable(n, index), Scalar(1, f));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coef.is_one()) return *this;
  return scaled(terms_.front().coef.inverse());
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return Scalar(ring_->field());
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial Polynomial::merge(const Polynomial& g, bool negate) const {
  require_same_ring(ring_, g.ring_, "polynomial addition");
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const Ring& r = *ring_;
  while (i < terms_.size() || j < g.terms_.size()) {
    std::strong_ordering c = std::strong_ordering::greater;
    if (i == terms_.size())
      c = std::strong_ordering::less;
    else if (j < g.terms_.size())
      c = r.compare(terms_[i].mono, g.terms_[j].mono);
    if (c == std::strong_ordering::greater) {
      out.terms_.push_back(terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      out.terms_.push_back(g.terms_[j++]);
      if (negate) out.terms_.back().coef = -out.terms_.back().coef;
    } else {
      Scalar s = negate ? terms_[i].coef - g.terms_[j].coef : terms_[i].coef + g.terms_[j].coef;
      if (!s.is_zero()) out.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& g) const { return merge(g, false); }
Polynomial Polynomial::operator-(const Polynomial& g) const { return merge(g, true); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_, "polynomial multiplication");
  Polynomial acc(ring_);
  for (const auto& t : g.terms_) acc += times_term(t.mono, t.coef);
  return acc;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  // Multiplication by a monomial preserves the order of the terms.
  Polynomial p = *this;
  for (auto& t : p.terms_) {
    t.mono *= m;
    t.coef *= c;
  }
  return p;
}

void Polynomial::subtract_multiple(const Scalar& c, const Monomial& m, const Polynomial& g) {
  *this = merge(g.times_term(m, c), true);
}

Term Polynomial::pop_leading() {
  Term t = leading_term();
  terms_.erase(terms_.begin());
  return t;
}

Polynomial Polynomial::transport(const RingPtr& target,
                                 const std::vector<std::size_t>& index_map) const {
  if (index_map.size() != ring_->arity()) throw Error("transport: index map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->arity());
    for (std::size_t i = 0; i < t.mono.arity(); ++i) m[index_map[i]] += t.mono[i];
    out.push_back({std::move(m), Scalar(t.coef.to_rational(), target->field())});
  }
  return Polynomial(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    std::string mono = ring_->monomial_string(t.mono);
    if (t.mono.is_one())
      s += c.to_string();
    else if (c.is_one())
      s += mono;
    else
      s += c.to_string() + "*" + mono;
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace nilfilt
