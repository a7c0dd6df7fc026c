// Independent reference computations for the tests. Nothing here calls the
// Groebner or ideal code: monomial ideals are decided by divisibility over
// an exponent box, and bases by a plain S-polynomial fixpoint.
#ifndef NILFILT_TESTS_ORACLES_HPP
#define NILFILT_TESTS_ORACLES_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "nilfilt/polynomial.hpp"

namespace oracle {

using nilfilt::Monomial;
using nilfilt::Polynomial;
using nilfilt::RingPtr;
using nilfilt::Scalar;
using Exps = std::vector<std::uint32_t>;
using MonIdeal = std::vector<Exps>;

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exps mul(const Exps& a, const Exps& b, std::uint32_t k = 1) {
  Exps c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += k * b[i];
  return c;
}

inline bool member(const MonIdeal& a, const Exps& m) {
  return std::any_of(a.begin(), a.end(), [&](const Exps& g) { return divides(g, m); });
}

inline bool in_intersection(const MonIdeal& a, const MonIdeal& b, const Exps& m) {
  return member(a, m) && member(b, m);
}

// m ∈ a : b  iff  m·g ∈ a for every generator g of b
inline bool in_colon(const MonIdeal& a, const MonIdeal& b, const Exps& m) {
  return std::all_of(b.begin(), b.end(), [&](const Exps& g) { return member(a, mul(m, g)); });
}

// a : b^∞ is the intersection of the a : g^∞; exponents of a bound the k needed
inline bool in_saturation(const MonIdeal& a, const MonIdeal& b, const Exps& m, std::uint32_t kmax = 16) {
  return std::all_of(b.begin(), b.end(), [&](const Exps& g) {
    for (std::uint32_t k = 0; k <= kmax; ++k)
      if (member(a, mul(m, g, k))) return true;
    return false;
  });
}

/// All exponent vectors in [0, bound]^arity.
inline std::vector<Exps> box(std::size_t arity, std::uint32_t bound) {
  std::vector<Exps> out;
  Exps e(arity, 0);
  for (;;) {
    out.push_back(e);
    std::size_t i = 0;
    while (i < arity && e[i] == bound) e[i++] = 0;
    if (i == arity) return out;
    ++e[i];
  }
}

inline MonIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t arity, std::uint32_t max_deg,
                                      std::size_t max_gens) {
  std::uniform_int_distribution<std::size_t> ngens(1, max_gens);
  std::uniform_int_distribution<std::uint32_t> deg(1, max_deg);
  MonIdeal out;
  for (std::size_t k = ngens(rng); k > 0; --k) {
    Exps e(arity, 0);
    std::uint32_t d = deg(rng);
    std::uniform_int_distribution<std::size_t> var(0, arity - 1);
    for (std::uint32_t j = 0; j < d; ++j) ++e[var(rng)];
    out.push_back(e);
  }
  return out;
}

inline std::vector<Polynomial> polys(const RingPtr& ring, const MonIdeal& a) {
  std::vector<Polynomial> out;
  for (const auto& e : a) out.push_back(Polynomial::monomial(ring, Monomial(e), Scalar(1, ring->field())));
  return out;
}

/// Full remainder of f by the list g (any reducible term, first divisor).
inline Polynomial reduce(Polynomial f, const std::vector<Polynomial>& g) {
  Polynomial rest(f.ring());
  while (!f.is_zero()) {
    const auto lt = f.leading_term();
    bool hit = false;
    for (const auto& h : g) {
      if (h.leading_monomial().divides(lt.mono)) {
        f = f - h.times_term(lt.mono / h.leading_monomial(), lt.coef / h.leading_coefficient());
        hit = true;
        break;
      }
    }
    if (!hit) {
      rest = rest + Polynomial::monomial(f.ring(), lt.mono, lt.coef);
      f = f - Polynomial::monomial(f.ring(), lt.mono, lt.coef);
    }
  }
  return rest;
}

inline Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Exps l(f.leading_monomial().arity());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = std::max(f.leading_monomial()[i], g.leading_monomial()[i]);
  Monomial lm(l);
  return f.times_term(lm / f.leading_monomial(), f.leading_coefficient().inverse()) -
         g.times_term(lm / g.leading_monomial(), g.leading_coefficient().inverse());
}

/// Reduced Groebner basis by the plain fixpoint: add every nonzero reduced
/// S-polynomial until all pairs reduce to zero, then minimize, inter-reduce,
/// make monic and sort ascending.
inline std::vector<Polynomial> naive_groebner(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> g;
  for (const auto& p : gens)
    if (!p.is_zero()) g.push_back(p);
  if (g.empty()) return g;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < g.size() && !grew; ++i)
      for (std::size_t j = i + 1; j < g.size() && !grew; ++j) {
        Polynomial r = reduce(spoly(g[i], g[j]), g);
        if (!r.is_zero()) {
          g.push_back(r);
          grew = true;
        }
      }
  }
  const auto& ring = g.front().ring();
  std::vector<Polynomial> min;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < g.size() && !drop; ++j) {
      if (i == j) continue;
      const auto &a = g[j].leading_monomial(), &b = g[i].leading_monomial();
      drop = a.divides(b) && (!(a == b) || j < i);
    }
    if (!drop) min.push_back(g[i]);
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    out.push_back(reduce(min[i], others).monic());
  }
  std::sort(out.begin(), out.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) == std::strong_ordering::less;
  });
  return out;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, std::uint32_t max_deg,
                                    std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> var(0, ring->arity() - 1);
  Polynomial p(ring);
  for (std::size_t k = nterms(rng); k > 0; --k) {
    Exps e(ring->arity(), 0);
    for (std::uint32_t d = deg(rng); d > 0; --d) ++e[var(rng)];
    long c = coef(rng);
    if (c == 0) c = 1;
    p = p + Polynomial::monomial(ring, Monomial(e), Scalar(c, ring->field()));
  }
  return p;
}

}  // namespace oracle

#endif
