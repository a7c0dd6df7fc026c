#include "nilfilt/quotient.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace nilfilt {

bool is_zero_dimensional(const Ideal& ideal) {
  const auto& gb = ideal.groebner();
  if (gb.is_unit_ideal()) return true;
  const std::size_t n = ideal.ring()->arity();
  std::vector<bool> seen(n, false);
  for (const auto& g : gb.elements()) {
    const Monomial& m = g.leading_monomial();
    std::size_t nonzero = 0, last = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) {
        ++nonzero;
        last = i;
      }
    if (nonzero == 1) seen[last] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

QuotientBasis::QuotientBasis(Ideal ideal) : ideal_(std::move(ideal)) {
  if (!is_zero_dimensional(ideal_))
    throw Error("quotient by " + ideal_.to_string() + " is not finite-dimensional");
  const auto& gb = ideal_.groebner();
  if (gb.is_unit_ideal()) return;
  const std::size_t n = ideal_.ring()->arity();
  auto standard = [&gb](const Monomial& m) {
    for (const auto& g : gb.elements())
      if (g.leading_monomial().divides(m)) return false;
    return true;
  };
  // Standard monomials form an order ideal: grow it from 1.
  std::set<std::vector<std::uint32_t>> visited;
  std::deque<Monomial> queue{Monomial(n)};
  visited.insert(Monomial(n).exponents());
  while (!queue.empty()) {
    Monomial m = std::move(queue.front());
    queue.pop_front();
    monos_.push_back(m);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m;
      ++next[i];
      if (visited.count(next.exponents()) || !standard(next)) continue;
      visited.insert(next.exponents());
      queue.push_back(std::move(next));
    }
  }
  const Ring& r = *ideal_.ring();
  std::sort(monos_.begin(), monos_.end(), [&r](const Monomial& a, const Monomial& b) {
    return r.compare(a, b) == std::strong_ordering::less;
  });
  for (std::size_t i = 0; i < monos_.size(); ++i) index_[monos_[i].exponents()] = i;
}

int QuotientBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m.exponents());
  return it == index_.end() ? -1 : static_cast<int>(it->second);
}

Vector QuotientBasis::coordinates(const Polynomial& f) const {
  require_same_ring(ideal_.ring(), f.ring(), "coordinates");
  Vector v = zero_vector(dim(), ideal_.ring()->field());
  const Polynomial r = ideal_.groebner().normal_form(f);
  for (const auto& t : r.terms()) v[index_.at(t.mono.exponents())] = t.coef;
  return v;
}

Polynomial QuotientBasis::from_coordinates(const Vector& v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) terms.push_back({monos_[i], v[i]});
  return Polynomial(ideal_.ring(), std::move(terms));
}

std::size_t quotient_dim(const Ideal& ideal) { return QuotientBasis(ideal).dim(); }

std::size_t subquotient_dim(const Ideal& a, const Ideal& b) {
  if (!a.contains(b))
    throw Error("subquotient " + a.to_string() + " / " + b.to_string() +
                ": denominator is not contained in numerator");
  std::size_t da = quotient_dim(a), db = quotient_dim(b);
  return db - da;
}

SubquotientBasis::SubquotientBasis(const Ideal& a, const Ideal& b) : a_(a), ambient_(b) {
  if (!a.contains(b))
    throw Error("subquotient " + a.to_string() + " / " + b.to_string() +
                ": denominator is not contained in numerator");
  const Field f = a.ring()->field();
  Matrix rows;
  for (const auto& g : a.groebner().elements())
    for (const auto& m : ambient_.monomials()) {
      Vector v = ambient_.coordinates(g.times_term(m, Scalar(1, f)));
      if (!is_zero(v)) rows.push_back(std::move(v));
    }
  echelon_ = echelonize(std::move(rows), ambient_.dim(), f, /*high_pivots=*/true);
  for (std::size_t i = 0; i < echelon_.rank(); ++i) {
    keys_.push_back(ambient_.monomials()[echelon_.pivots[i]]);
    reps_.push_back(ambient_.from_coordinates(echelon_.rows[i]));
  }
}

std::vector<std::string> SubquotientBasis::key_strings() const {
  std::vector<std::string> out;
  for (const auto& k : keys_) out.push_back(a_.ring()->monomial_string(k));
  return out;
}

int SubquotientBasis::index_of_key(const Monomial& key) const {
  auto it = std::find(keys_.begin(), keys_.end(), key);
  return it == keys_.end() ? -1 : static_cast<int>(it - keys_.begin());
}

Vector SubquotientBasis::coordinates(const Polynomial& f) const {
  if (!a_.contains(f)) throw Error(f.to_string() + " is not in " + a_.to_string());
  auto c = echelon_.solve(ambient_.coordinates(f));
  if (!c) throw Error("internal: class of " + f.to_string() + " outside the subquotient span");
  return *c;
}

Polynomial SubquotientBasis::lift(const Vector& v) const {
  if (v.size() != dim()) throw Error("lift: coordinate vector has wrong length");
  Polynomial p(a_.ring());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) p += reps_[i].scaled(v[i]);
  return p;
}

Echelon SubquotientBasis::image(const Ideal& g) const {
  const Field f = a_.ring()->field();
  Matrix rows;
  for (const auto& gen : g.groebner().elements())
    for (const auto& m : ambient_.monomials()) {
      Vector v = coordinates(gen.times_term(m, Scalar(1, f)));
      if (!is_zero(v)) rows.push_back(std::move(v));
    }
  return echelonize(std::move(rows), dim(), f);
}

}  // namespace nilfilt
