#include "nilfilt/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nilfilt {

Monomial Monomial::variable(std::size_t arity, std::size_t index, std::uint32_t power) {
  Monomial m(arity);
  m.exp_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exp_.begin(), exp_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial q = *this;
  for (std::size_t i = 0; i < exp_.size(); ++i) q.exp_[i] -= d.exp_[i];
  return q;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial p = *this;
  return p *= o;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (std::size_t i = 0; i < exp_.size(); ++i) exp_[i] += o.exp_[i];
  return *this;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] && o.exp_[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial l = a;
  for (std::size_t i = 0; i < a.exp_.size(); ++i) l.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
  return l;
}

namespace {

using Kind = MonomialOrder::Kind;

std::strong_ordering compare_range(Kind kind, const Monomial& a, const Monomial& b,
                                   std::size_t lo, std::size_t hi) {
  if (kind == Kind::Lex) {
    for (std::size_t i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  // Larger monomial has the smaller exponent at the last differing position.
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Lex: return "lex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Block: return "block";
  }
  return "?";
}

}  // namespace

MonomialOrder MonomialOrder::block(std::size_t k, Kind outer, Kind inner) {
  if (outer == Kind::Block || inner == Kind::Block)
    throw Error("block orders cannot be nested");
  return {Kind::Block, k, outer, inner};
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != b.arity())
    throw Error("monomial arity mismatch: " + std::to_string(a.arity()) + " vs " +
                std::to_string(b.arity()));
  const std::size_t n = a.arity();
  if (kind != Kind::Block) return compare_range(kind, a, b, 0, n);
  const std::size_t k = std::min(block_size, n);
  auto c = compare_range(outer, a, b, 0, k);
  if (c != std::strong_ordering::equal) return c;
  return compare_range(inner, a, b, k, n);
}

std::string MonomialOrder::name() const {
  if (kind != Kind::Block) return kind_name(kind);
  return std::string("block(") + std::to_string(block_size) + "," + kind_name(outer) + "," +
         kind_name(inner) + ")";
}

Ring::Ring(std::vector<std::string> vars, Field field, MonomialOrder order)
    : vars_(std::move(vars)), field_(field), order_(order) {
  if (vars_.empty()) throw Error("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars_)
    if (!seen.insert(v).second) throw Error("duplicate variable '" + v + "'");
}

int Ring::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

std::string Ring::monomial_string(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars_[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Ring::describe() const {
  std::string s = field_.name() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
  return s + "] order " + order_.name();
}

RingPtr make_ring(std::vector<std::string> vars, Field field, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(vars), field, order);
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return make_ring(ring->vars(), ring->field(), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
  if (!same_ring(a, b))
    throw Error(std::string(what) + ": ring mismatch (" + a->describe() + " vs " +
                b->describe() + ")");
}

}  // namespace nilfilt
