#include "nilfilt/ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>

namespace nilfilt {

Ideal::Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens) require_same_ring(ring_, g.ring(), "ideal generators");
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  gens_ = std::move(gens);
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::variables(RingPtr ring, const std::vector<std::size_t>& indices) {
  std::vector<Polynomial> gens;
  for (auto i : indices) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(gens));
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = std::make_unique<GroebnerBasis>(buchberger(gens_, ring_));
  });
  return *cache_->basis;
}

bool Ideal::is_monomial() const {
  const auto& el = groebner().elements();
  return std::all_of(el.begin(), el.end(), [](const Polynomial& p) { return p.is_monomial(); });
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "membership");
  return f.is_zero() || groebner().reduces_to_zero(f);
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "containment");
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const Polynomial& g) { return contains(g); });
}

std::vector<std::string> Ideal::canonical_strings() const {
  std::vector<std::string> out;
  for (const auto& g : groebner().elements()) out.push_back(g.to_string());
  return out;
}

std::string Ideal::to_string() const {
  auto gens = canonical_strings();
  if (gens.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i];
  return s + ")";
}

bool is_member(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

bool equals(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal equality");
  return a.groebner() == b.groebner();
}

bool contains(const Ideal& a, const Ideal& b) { return a.contains(b); }

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "sum");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), tidy_generators(std::move(gens)));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "product");
  std::vector<Polynomial> gens;
  for (const auto& f : a.groebner().elements())
    for (const auto& g : b.groebner().elements()) gens.push_back(f * g);
  return Ideal(a.ring(), tidy_generators(std::move(gens)));
}

Ideal power(const Ideal& a, unsigned k) {
  Ideal acc = Ideal::unit(a.ring());
  for (unsigned i = 0; i < k; ++i) acc = product(acc, a);
  return acc;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "intersect");
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;

  // Adjoin t in front and eliminate it: a ∩ b = (t·a + (1-t)·b) ∩ R.
  std::vector<std::string> vars{"__t"};
  vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
  auto base = ring->order().kind == MonomialOrder::Kind::Block ? MonomialOrder::Kind::DegRevLex
                                                              : ring->order().kind;
  RingPtr ext = make_ring(vars, ring->field(),
                          MonomialOrder::block(1, MonomialOrder::Kind::Lex, base));
  std::vector<std::size_t> shift(ring->arity());
  std::iota(shift.begin(), shift.end(), std::size_t{1});

  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.groebner().elements()) gens.push_back(t * g.transport(ext, shift));
  for (const auto& g : b.groebner().elements()) gens.push_back(one_minus_t * g.transport(ext, shift));

  GroebnerBasis gb = buchberger(gens, ext);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    if (g.leading_monomial()[0] != 0) continue;
    // Block order with t first: a t-free leading monomial means t-free.
    std::vector<Term> terms;
    for (const auto& term : g.terms()) {
      std::vector<std::uint32_t> e(term.mono.exponents().begin() + 1, term.mono.exponents().end());
      terms.push_back({Monomial(std::move(e)), Scalar(term.coef.to_rational(), ring->field())});
    }
    out.emplace_back(ring, std::move(terms));
  }
  return Ideal(ring, std::move(out));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "divide_exact");
  if (g.is_zero()) throw Error("division by the zero polynomial");
  Polynomial rem = f;
  std::vector<Term> quot;
  const Term& lg = g.leading_term();
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!lg.mono.divides(lt.mono)) throw Error("divide_exact: " + g.to_string() +
                                               " does not divide " + f.to_string());
    Term q{lt.mono / lg.mono, lt.coef / lg.coef};
    rem.subtract_multiple(q.coef, q.mono, g);
    quot.push_back(std::move(q));
  }
  return Polynomial(f.ring(), std::move(quot));
}

namespace {

Ideal colon_element(const Ideal& a, const Polynomial& g) {
  if (g.is_constant()) return a;
  Ideal meet = intersect(a, Ideal(a.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.groebner().elements()) gens.push_back(divide_exact(h, g));
  return Ideal(a.ring(), std::move(gens));
}

}  // namespace

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "colon");
  if (b.is_zero()) throw Error("colon by the zero ideal");
  if (b.is_unit()) return a;
  std::optional<Ideal> acc;
  for (const auto& g : b.groebner().elements()) {
    Ideal part = colon_element(a, g);
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

unsigned default_max_iter() {
  static const unsigned value = [] {
    if (const char* env = std::getenv("NILFILT_MAX_ITER")) {
      char* end = nullptr;
      unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 64u;
  }();
  return value;
}

Ideal saturate(const Ideal& a, const Ideal& b, unsigned max_iter) {
  if (max_iter == 0) max_iter = default_max_iter();
  Ideal current = a;
  for (unsigned i = 0; i < max_iter; ++i) {
    Ideal next = colon(current, b);
    if (equals(next, current)) return current;
    current = std::move(next);
  }
  throw Error("saturate: no stabilization after " + std::to_string(max_iter) + " colon steps");
}

Ideal reorder(const Ideal& a, MonomialOrder order) {
  RingPtr ring = with_order(a.ring(), order);
  std::vector<std::size_t> same(ring->arity());
  std::iota(same.begin(), same.end(), std::size_t{0});
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.transport(ring, same));
  return Ideal(ring, std::move(gens));
}

}  // namespace nilfilt
