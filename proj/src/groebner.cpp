#include "nilfilt/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace nilfilt {

namespace {

void check_rings(const RingPtr& ring, std::span<const Polynomial> polys, const char* what) {
  for (const auto& p : polys) require_same_ring(ring, p.ring(), what);
}

bool ascending_by_lead(const Ring& r, const Polynomial& a, const Polynomial& b) {
  return r.compare(a.leading_monomial(), b.leading_monomial()) == std::strong_ordering::less;
}

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
};

// Basis under construction. Polynomials are never erased, so pair indices
// stay valid; `active` marks the current (minimal) reducers.
class Builder {
public:
  explicit Builder(RingPtr ring) : ring_(std::move(ring)) {}

  void run(std::span<const Polynomial> gens) {
    std::vector<Polynomial> input;
    for (const auto& g : gens)
      if (!g.is_zero()) input.push_back(g.monic());
    const Ring& r = *ring_;
    std::sort(input.begin(), input.end(),
              [&r](const Polynomial& a, const Polynomial& b) { return ascending_by_lead(r, a, b); });
    for (auto& g : input) {
      Polynomial h = reduce(g);
      if (!h.is_zero()) update(h.monic());
    }
    while (!pairs_.empty()) {
      auto best = select();
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Polynomial h = reduce(s_polynomial(polys_[p.i], polys_[p.j]));
      if (!h.is_zero()) update(h.monic());
    }
  }

  std::vector<Polynomial> reduced() const {
    std::vector<Polynomial> basis;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) basis.push_back(polys_[k]);
    for (const auto& b : basis)
      if (b.is_constant()) return {Polynomial::constant(ring_, 1)};
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (l != k) others.push_back(basis[l]);
      basis[k] = normal_form(basis[k], others).monic();
    }
    const Ring& r = *ring_;
    std::sort(basis.begin(), basis.end(),
              [&r](const Polynomial& a, const Polynomial& b) { return ascending_by_lead(r, a, b); });
    return basis;
  }

private:
  Polynomial reduce(const Polynomial& f) const {
    std::vector<Polynomial> reducers;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) reducers.push_back(polys_[k]);
    return normal_form(f, reducers);
  }

  // Normal strategy: smallest lcm degree, then smallest lcm in the order,
  // then the oldest pair.
  std::size_t select() const {
    const Ring& r = *ring_;
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      auto da = a.lcm.degree(), db = b.lcm.degree();
      if (da != db) {
        if (da < db) best = k;
        continue;
      }
      auto c = r.compare(a.lcm, b.lcm);
      if (c == std::strong_ordering::less ||
          (c == std::strong_ordering::equal && std::tie(a.j, a.i) < std::tie(b.j, b.i)))
        best = k;
    }
    return best;
  }

  // Gebauer-Moeller installation of a new element h.
  void update(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_monomial();

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) candidates.push_back({k, hi, lcm(polys_[k].leading_monomial(), lh)});

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto& p = candidates[c];
      bool coprime = polys_[p.i].leading_monomial().coprime(lh);
      bool dominated = false;
      for (std::size_t d = c + 1; d < candidates.size() && !dominated; ++d)
        dominated = candidates[d].lcm.divides(p.lcm);
      for (std::size_t d = 0; d < kept.size() && !dominated; ++d)
        dominated = kept[d].lcm.divides(p.lcm);
      if (coprime || !dominated) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (auto& p : kept)
      if (!polys_[p.i].leading_monomial().coprime(lh)) fresh.push_back(std::move(p));

    std::vector<Pair> old;
    for (auto& p : pairs_) {
      if (!lh.divides(p.lcm) || lcm(polys_[p.i].leading_monomial(), lh) == p.lcm ||
          lcm(polys_[p.j].leading_monomial(), lh) == p.lcm)
        old.push_back(std::move(p));
    }
    pairs_ = std::move(old);
    for (auto& p : fresh) pairs_.push_back(std::move(p));

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(polys_[k].leading_monomial())) active_[k] = false;
    polys_.push_back(std::move(h));
    active_.push_back(true);
  }

  RingPtr ring_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

std::vector<Polynomial> minimal_monomials(std::span<const Polynomial> gens, const RingPtr& ring) {
  std::vector<Monomial> monos;
  for (const auto& g : gens)
    if (!g.is_zero()) monos.push_back(g.leading_monomial());
  const Ring& r = *ring;
  std::sort(monos.begin(), monos.end(), [&r](const Monomial& a, const Monomial& b) {
    return r.compare(a, b) == std::strong_ordering::less;
  });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < monos.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < monos.size() && !redundant; ++l)
      redundant = l != k && monos[l].divides(monos[k]);
    if (!redundant) out.push_back(Polynomial::monomial(ring, monos[k], Scalar(1, ring->field())));
  }
  return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    require_same_ring(f.ring(), g.ring(), "normal_form");
    if (g.is_zero()) throw Error("normal_form: zero divisor polynomial");
  }
  Polynomial p = f;
  std::vector<Term> rest;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* hit = nullptr;
    for (const auto& g : divisors)
      if (g.leading_monomial().divides(lt.mono)) {
        hit = &g;
        break;
      }
    if (hit) {
      Scalar c = lt.coef / hit->leading_coefficient();
      Monomial m = lt.mono / hit->leading_monomial();
      p.subtract_multiple(c, m, *hit);
    } else {
      rest.push_back(p.pop_leading());
    }
  }
  return Polynomial(f.ring(), std::move(rest));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(l / f.leading_monomial(), f.leading_coefficient().inverse());
  Polynomial b = g.times_term(l / g.leading_monomial(), g.leading_coefficient().inverse());
  return a - b;
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring) {
  check_rings(ring, gens, "buchberger");
  GroebnerBasis gb(ring);
  bool all_monomial = std::all_of(gens.begin(), gens.end(),
                                  [](const Polynomial& g) { return g.size() <= 1; });
  if (all_monomial) {
    gb.elems_ = minimal_monomials(gens, ring);
    return gb;
  }
  Builder b(ring);
  b.run(gens);
  gb.elems_ = b.reduced();
  return gb;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  return nilfilt::normal_form(f, elems_);
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  return same_ring(a.ring_, b.ring_) && a.elems_ == b.elems_;
}

std::vector<Polynomial> tidy_generators(std::vector<Polynomial> gens) {
  if (gens.empty()) return gens;
  const RingPtr ring = gens.front().ring();
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  if (std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_monomial(); }))
    return minimal_monomials(gens, ring);
  for (auto& g : gens) g = g.monic();
  const Ring& r = *ring;
  std::sort(gens.begin(), gens.end(),
            [&r](const Polynomial& a, const Polynomial& b) { return ascending_by_lead(r, a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace nilfilt
