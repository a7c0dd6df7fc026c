#include "nilfilt/filtration.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nilfilt/quotient.hpp"

namespace nilfilt {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

// "=" / "<" (a strictly inside b) / ">" / "incomparable"
std::string relation(const Ideal& a, const Ideal& b) {
  bool ab = b.contains(a), ba = a.contains(b);
  if (ab && ba) return "=";
  if (ab) return "<";
  if (ba) return ">";
  return "incomparable";
}

Check dim_check(std::string name, const Ideal& num, const Ideal& den, std::size_t expected) {
  Check c{std::move(name), false, {}};
  if (!num.contains(den)) {
    c.detail = "containment fails: " + den.to_string() + " not inside " + num.to_string();
    return c;
  }
  std::size_t d = subquotient_dim(num, den);
  c.pass = d == expected;
  c.detail = "dim " + std::to_string(d) + ", expected " + std::to_string(expected);
  return c;
}

Check equality_check(std::string name, const Ideal& computed, const Ideal& expected) {
  bool eq = equals(computed, expected);
  return {std::move(name), eq,
          eq ? computed.to_string()
             : "computed " + computed.to_string() + ", expected " + expected.to_string()};
}

Ideal sum_of(std::initializer_list<Ideal> parts) {
  auto it = parts.begin();
  Ideal acc = *it;
  for (++it; it != parts.end(); ++it) acc = sum(acc, *it);
  return acc;
}

Polynomial pow_var(const RingPtr& ring, std::size_t var, std::uint32_t e) {
  return Polynomial::monomial(ring, Monomial::variable(ring->arity(), var, e),
                              Scalar(1, ring->field()));
}

}  // namespace

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

LocalModel::LocalModel(Ideal support, Ideal structure)
    : support_(std::move(support)), structure_(std::move(structure)) {
  require_same_ring(support_.ring(), structure_.ring(), "local model");
  const auto& gb = support_.groebner();
  if (gb.is_zero_ideal() || gb.is_unit_ideal())
    throw Error("support ideal " + support_.to_string() + " must be a proper nonzero ideal");
  for (const auto& g : gb.elements())
    if (!g.is_monomial() || g.degree() != 1)
      throw Error("support ideal " + support_.to_string() + " is not generated by variables");
  if (!support_.contains(structure_))
    throw Error("structure ideal " + structure_.to_string() + " is not contained in " +
                support_.to_string());
  if (!is_zero_dimensional(structure_))
    throw Error("quotient by " + structure_.to_string() + " is not finite-dimensional");
}

unsigned compute_m(const LocalModel& model, unsigned max_iter) {
  if (max_iter == 0) max_iter = default_max_iter();
  const Ideal& I = model.support();
  const Ideal& J = model.structure();
  if (J.contains(I)) throw Error("structure ideal equals the support ideal: m = 0");
  Ideal b = sum(I, J);
  for (unsigned l = 2; l <= max_iter + 1; ++l) {
    b = sum(product(I, b), J);
    if (J.contains(b)) return l - 1;
  }
  throw Error("no power I^l with l <= " + std::to_string(max_iter + 1) + " lies in " +
              J.to_string());
}

std::vector<Ideal> bf_filtration(const LocalModel& model, unsigned m,
                                 const std::optional<Ideal>& unmix) {
  const Ideal& I = model.support();
  const Ideal& J = model.structure();
  std::vector<Ideal> out{Ideal::unit(model.ring())};
  Ideal b = Ideal::unit(model.ring());
  for (unsigned l = 1; l <= m + 1; ++l) {
    b = sum(product(I, b), J);
    out.push_back(unmix ? saturate(b, *unmix) : b);
  }
  return out;
}

namespace {

// C_k = J : I^k for k = 0..m+1
std::vector<Ideal> colon_chain(const LocalModel& model, unsigned m) {
  std::vector<Ideal> c{model.structure()};
  for (unsigned k = 1; k <= m + 1; ++k) c.push_back(colon(c.back(), model.support()));
  return c;
}

std::vector<Ideal> x_from(const std::vector<Ideal>& c, unsigned m) {
  std::vector<Ideal> xs;
  for (unsigned l = 0; l <= m + 1; ++l) xs.push_back(c[m + 1 - l]);
  return xs;
}

std::vector<Ideal> y_from(const LocalModel& model, const std::vector<Ideal>& c, unsigned m) {
  std::vector<Ideal> ys;
  for (unsigned l = 0; l <= m + 1; ++l) ys.push_back(colon(model.structure(), c[l]));
  return ys;
}

}  // namespace

std::vector<Ideal> x_filtration(const LocalModel& model, unsigned m) {
  return x_from(colon_chain(model, m), m);
}

std::vector<Ideal> y_filtration(const LocalModel& model, unsigned m) {
  return y_from(model, colon_chain(model, m), m);
}

Filtrations compute_filtrations(const LocalModel& model, const std::optional<Ideal>& unmix) {
  Filtrations f;
  f.m = compute_m(model);
  auto c = colon_chain(model, f.m);
  f.bf = bf_filtration(model, f.m, unmix);
  f.xs = x_from(c, f.m);
  f.ys = y_from(model, c, f.m);
  return f;
}

RankProfiles rank_profiles(const Filtrations& f) {
  auto profile = [&f](const std::vector<Ideal>& chain) {
    std::vector<std::size_t> r;
    for (unsigned l = 0; l <= f.m; ++l) r.push_back(subquotient_dim(chain[l], chain[l + 1]));
    return r;
  };
  return {profile(f.bf), profile(f.ys), profile(f.xs)};
}

Check duality_check(const Filtrations& f, const RankProfiles& ranks) {
  const unsigned m = f.m;
  std::vector<std::size_t> reversed(ranks.M.rbegin(), ranks.M.rend());
  bool mirrored = ranks.A == reversed;
  bool top = ranks.A[m] == 1 && ranks.M[m] == 1;
  bool eq = equals(f.ys[m], f.xs[m]);
  std::string detail = "rankA " + join(ranks.A) + ", reversed rankM " + join(reversed);
  if (!top) detail += "; top ranks not 1";
  detail += eq ? "; J_m = I_m" : "; J_m != I_m";
  return {"duality", mirrored && top && eq, detail};
}

std::pair<bool, bool> multiplication_nonzero(const Filtrations& f, unsigned l1, unsigned l2) {
  if (l1 + l2 > f.m)
    throw Error("multiplication indices " + std::to_string(l1) + "+" + std::to_string(l2) +
                " exceed m = " + std::to_string(f.m));
  const unsigned t = l1 + l2 + 1;
  bool aa = !f.ys[t].contains(product(f.ys[l1], f.ys[l2]));
  bool am = !f.xs[t].contains(product(f.ys[l1], f.xs[l2]));
  return {aa, am};
}

std::vector<Check> containment_report(const Filtrations& f) {
  std::vector<Check> out;
  for (unsigned l = 1; l <= f.m; ++l) {
    const Ideal& b = f.bf[l];
    const Ideal& y = f.ys[l];
    const Ideal& x = f.xs[l];
    bool pass = y.contains(b) && x.contains(y);
    std::string s = std::to_string(l);
    std::string detail = "I^(" + s + ") " + relation(b, y) + " J_" + s + ", J_" + s + " " +
                         relation(y, x) + " I_" + s + ", I^(" + s + ") " + relation(b, x) +
                         " I_" + s;
    out.push_back({"containment l=" + s, pass, detail});
  }
  return out;
}

std::vector<Check> structural_checks(const LocalModel& model, const Filtrations& f,
                                     const RankProfiles& ranks) {
  std::vector<Check> out;
  const unsigned m = f.m;
  auto chain_check = [&](const std::string& name, const std::vector<Ideal>& chain) {
    Check c{name + " chain", true, "descending from (1) to J"};
    if (!chain.front().is_unit() || !equals(chain.back(), model.structure())) {
      c.pass = false;
      c.detail = "endpoints are not (1) and J";
    }
    for (unsigned l = 0; l + 1 < chain.size() && c.pass; ++l)
      if (!chain[l].contains(chain[l + 1])) {
        c.pass = false;
        c.detail = "not descending at " + std::to_string(l);
      }
    out.push_back(c);
  };
  chain_check("bf", f.bf);
  chain_check("x", f.xs);
  chain_check("y", f.ys);
  out.push_back(equality_check("J_1 = I", f.ys[1], model.support()));

  const std::size_t total = quotient_dim(model.structure());
  auto total_of = [](const std::vector<std::size_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::size_t{0});
  };
  bool tele = total_of(ranks.A) == total && total_of(ranks.M) == total && total_of(ranks.B) == total;
  out.push_back({"telescoping", tele,
                 "dim R/J " + std::to_string(total) + ", sums B " + std::to_string(total_of(ranks.B)) +
                     " A " + std::to_string(total_of(ranks.A)) + " M " + std::to_string(total_of(ranks.M))});
  out.push_back({"unit ranks at 0", ranks.A[0] == 1 && ranks.M[0] == 1,
                 "rankA[0] " + std::to_string(ranks.A[0]) + ", rankM[0] " +
                     std::to_string(ranks.M[0])});

  bool canon = true;
  std::string canon_detail;
  for (unsigned l = 0; l <= m; ++l) {
    Ideal img = sum(f.bf[l], f.ys[l + 1]);
    if (!f.ys[l].contains(img) || ranks.B[l] < subquotient_dim(img, f.ys[l + 1])) {
      canon = false;
      canon_detail += " l=" + std::to_string(l);
    }
  }
  out.push_back({"canonical morphism ranks", canon,
                 canon ? "rankB[l] >= dim image in A_l for all l" : "fails at" + canon_detail});
  return out;
}

namespace {

std::vector<Check> multiplication_checks(const Filtrations& f) {
  std::vector<std::string> bad_aa, bad_am;
  std::size_t pairs = 0;
  for (unsigned l1 = 0; l1 <= f.m; ++l1)
    for (unsigned l2 = 0; l1 + l2 <= f.m; ++l2) {
      ++pairs;
      auto [aa, am] = multiplication_nonzero(f, l1, l2);
      std::string key = "(" + std::to_string(l1) + "," + std::to_string(l2) + ")";
      if (!aa) bad_aa.push_back(key);
      if (!am) bad_am.push_back(key);
    }
  auto make = [pairs](const char* name, const std::vector<std::string>& bad) {
    std::string d = bad.empty() ? "nonzero on all " + std::to_string(pairs) + " pairs" : "zero at";
    for (const auto& b : bad) d += " " + b;
    return Check{name, bad.empty(), d};
  };
  return {make("multiplication A*A", bad_aa), make("multiplication A*M", bad_am)};
}

}  // namespace

std::vector<Check> exactness_suite(const LocalModel& model, const Filtrations& f, CuspType type) {
  const Ideal& I = model.support();
  const auto& X = f.xs;
  const auto& Y = f.ys;
  const unsigned m = f.m;
  std::vector<Check> out;
  if (type == CuspType::C2) {
    if (m < 3) return {{"exactness (a)-(e)", false, "requires m >= 3, got " + std::to_string(m)}};
    Ideal IJ2 = product(I, Y[2]);
    Ideal I2capJ3 = intersect(power(I, 2), Y[3]);
    Ideal II2 = product(I, X[2]);
    bool a = I2capJ3.contains(IJ2);
    out.push_back({"(a) IJ_2 in I^2 cap J_3", a,
                   a ? "holds" : IJ2.to_string() + " not inside " + I2capJ3.to_string()});
    out.push_back(dim_check("(b) dim (I^2 cap J_3)/IJ_2 = 1", I2capJ3, IJ2, 1));
    out.push_back(dim_check("(c) dim II_2/IJ_2 = 2", II2, IJ2, 2));
    out.push_back(dim_check("(d) dim II_2/(I^2 cap J_3) = 1", II2, I2capJ3, 1));
    Ideal square = sum(IJ2, product(X[2], X[2]));
    out.push_back(dim_check("(b') dim (IJ_2+I_2^2)/IJ_2 = 1", square, IJ2, 1));
    out.push_back(dim_check("(d') dim II_2/(IJ_2+I_2^2) = 1", II2, square, 1));
    Ideal top = product(X[2], X[m - 1]);
    Ideal mixed = sum(product(X[2], Y[m - 1]), product(X[m - 1], Y[2]));
    out.push_back(dim_check("(e) dim I_2I_{m-1}/(I_2J_{m-1}+I_{m-1}J_2) = 1", top, mixed, 1));
    return out;
  }
  if (m < 4) return {{"exactness (f)-(j)", false, "requires m >= 4, got " + std::to_string(m)}};
  Ideal IJ2 = product(I, Y[2]);
  out.push_back(dim_check("(f) dim I^2/IJ_2 = 3", power(I, 2), IJ2, 3));
  Ideal I3capJ2 = intersect(X[3], Y[2]);
  out.push_back(dim_check("(g) dim J_2/J_3 = 2", Y[2], Y[3], 2));
  out.push_back(dim_check("(g) dim (I_3 cap J_2)/J_3 = 1", I3capJ2, Y[3], 1));
  out.push_back(dim_check("(g) dim J_2/(I_3 cap J_2) = 1", Y[2], I3capJ2, 1));
  for (unsigned k : {m - 2, m - 1}) {
    std::string s = k == m - 2 ? "m-2" : "m-1";
    std::string t = k == m - 2 ? "m-1" : "m";
    std::string tag = k == m - 2 ? "(h)" : "(i)";
    Ideal mid = sum(Y[k], X[k + 1]);
    out.push_back(dim_check(tag + " dim I_" + s + "/I_" + t + " = 2", X[k], X[k + 1], 2));
    out.push_back(
        dim_check(tag + " dim (J_" + s + "+I_" + t + ")/I_" + t + " = 1", mid, X[k + 1], 1));
    out.push_back(
        dim_check(tag + " dim I_" + s + "/(J_" + s + "+I_" + t + ") = 1", X[k], mid, 1));
  }
  Ideal I2sq = product(X[2], X[2]);
  Ideal num = product(I2sq, X[m - 2]);
  Ideal den = sum_of({product(product(X[2], Y[2]), X[m - 2]), product(I2sq, Y[m - 2]),
                      product(product(I, I2sq), X[m - 1])});
  out.push_back(dim_check(
      "(j) dim I_2^2I_{m-2}/(I_2J_2I_{m-2}+I_2^2J_{m-2}+II_2^2I_{m-1}) = 1", num, den, 1));
  return out;
}

RingPtr cuspidal_ring(unsigned r) {
  std::vector<std::string> vars{"x", "y"};
  for (unsigned i = 1; i <= r; ++i) vars.push_back("z" + std::to_string(i));
  return make_ring(std::move(vars));
}

CuspidalModel cuspidal_model(unsigned mtype, unsigned n, unsigned r) {
  if (mtype != 2 && mtype != 3) throw Error("cuspidal type must be 2 or 3");
  if (mtype == 2 && n < 3) throw Error("type C_{2,n} requires n >= 3");
  if (mtype == 3 && n < 4) throw Error("type C_{3,n} requires n >= 4");
  RingPtr R = cuspidal_ring(r);
  std::vector<std::size_t> all(R->arity());
  std::iota(all.begin(), all.end(), std::size_t{0});
  Ideal I = Ideal::variables(R, all);

  auto xp = [&R](std::uint32_t e) { return pow_var(R, 0, e); };
  auto yp = [&R](std::uint32_t e) { return pow_var(R, 1, e); };
  Polynomial xy = xp(1) * yp(1);
  auto with_z = [&R, r](std::vector<Polynomial> gens) {
    for (unsigned i = 0; i < r; ++i) gens.push_back(Polynomial::variable(R, 2 + i));
    return Ideal(R, std::move(gens));
  };
  Ideal J = with_z({yp(mtype) + xp(n), xy});

  CuspidalModel cm{LocalModel(I, J), mtype, n, {}, {}, {}, {}};
  auto& X = cm.expected_x;
  auto& Y = cm.expected_y;
  X.push_back(Ideal::unit(R));
  Y.push_back(Ideal::unit(R));
  if (mtype == 2) {
    for (unsigned l = 1; l + 1 <= n; ++l) X.push_back(with_z({xp(l), yp(1)}));
    X.push_back(with_z({xp(n), xy, yp(2)}));
    Y.push_back(I);
    for (unsigned l = 2; l <= n; ++l) Y.push_back(with_z({xp(l), xy, yp(2)}));
  } else {
    for (unsigned l = 1; l + 2 <= n; ++l) X.push_back(with_z({xp(l), yp(1)}));
    X.push_back(with_z({xp(n - 1), xy, yp(2)}));
    X.push_back(with_z({xp(n), xy, yp(3)}));
    Y.push_back(I);
    Y.push_back(with_z({xp(2), xy, yp(2)}));
    for (unsigned l = 3; l <= n; ++l) Y.push_back(with_z({xp(l), xy, yp(3)}));
  }
  X.push_back(J);
  Y.push_back(J);

  cm.expected_rank_a.assign(n + 1, 1);
  cm.expected_rank_m.assign(n + 1, 1);
  cm.expected_rank_a[1] = 2;
  cm.expected_rank_m[n - 1] = 2;
  if (mtype == 3) {
    cm.expected_rank_a[2] = 2;
    cm.expected_rank_m[n - 2] = 2;
  }
  return cm;
}

Fingerprint fingerprint(const Filtrations& f, const RankProfiles& ranks) {
  Fingerprint fp;
  fp.m = f.m;
  fp.rank_a = ranks.A;
  fp.rank_m = ranks.M;
  fp.top_equal = equals(f.ys[f.m], f.xs[f.m]);
  fp.duality = duality_check(f, ranks).pass;
  return fp;
}

Fingerprint fingerprint(const LocalModel& model) {
  Filtrations f = compute_filtrations(model);
  return fingerprint(f, rank_profiles(f));
}

std::string classify(const LocalModel& model, const Fingerprint& fp) {
  const RingPtr& R = model.ring();
  const std::size_t v = R->arity();
  const std::size_t d = quotient_dim(model.structure());
  std::vector<std::size_t> all(v);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const Ideal I = Ideal::variables(R, all);
  auto build = [&](std::uint32_t xe, std::uint32_t ye, const Polynomial* extra) {
    std::vector<Polynomial> gens;
    if (extra) {
      gens.push_back(*extra);
      gens.push_back(pow_var(R, 0, 1) * pow_var(R, 1, 1));
    } else {
      gens.push_back(pow_var(R, 0, xe));
      if (v > 1) gens.push_back(pow_var(R, 1, ye));
    }
    for (std::size_t i = 2; i < v; ++i) gens.push_back(Polynomial::variable(R, i));
    return Ideal(R, std::move(gens));
  };

  std::vector<std::pair<std::string, Ideal>> candidates;
  if (d >= 2) candidates.emplace_back("primitive(" + std::to_string(d) + ")", build(d, 1, nullptr));
  if (v >= 2) {
    if (d % 2 == 0 && d >= 4)
      candidates.emplace_back("M4(" + std::to_string(d / 2) + ")", build(d / 2, 2, nullptr));
    for (std::uint32_t t : {2u, 3u}) {
      if (d < t + (t == 2 ? 3 : 4)) continue;
      std::uint32_t n = static_cast<std::uint32_t>(d) - t;
      Polynomial cusp = pow_var(R, 1, t) + pow_var(R, 0, n);
      candidates.emplace_back("C_{" + std::to_string(t) + "," + std::to_string(n) + "}",
                              build(0, 0, &cusp));
    }
  }
  std::vector<std::string> hits;
  for (const auto& [label, J] : candidates) {
    try {
      if (fingerprint(LocalModel(I, J)) == fp) hits.push_back(label);
    } catch (const Error&) {
    }
  }
  return hits.size() == 1 ? hits.front() : "unknown";
}

FiltrationReport analyze(const LocalModel& model, const std::optional<Ideal>& unmix) {
  Filtrations f = compute_filtrations(model, unmix);
  RankProfiles ranks = rank_profiles(f);
  FiltrationReport rep{model, f, ranks, {}, {}, {}, {}};
  rep.checks = structural_checks(model, f, ranks);
  rep.checks.push_back(duality_check(f, ranks));
  for (auto& c : containment_report(f)) rep.checks.push_back(std::move(c));
  for (auto& c : multiplication_checks(f)) rep.checks.push_back(std::move(c));
  rep.fingerprint = fingerprint(f, ranks);
  rep.label = classify(model, rep.fingerprint);
  if (unmix) rep.notes.push_back("bf chain saturated with respect to " + unmix->to_string());
  rep.notes.push_back("J_1 = J:(J:I) is the support ideal I");
  return rep;
}

std::vector<Check> table_checks(const FiltrationReport& report, const CuspidalModel& expected) {
  std::vector<Check> out;
  const unsigned n = expected.n;
  const auto& f = report.chains;
  out.push_back({"m = n", f.m == n,
                 "m " + std::to_string(f.m) + ", n " + std::to_string(n)});
  if (f.m != n) return out;
  for (unsigned l = 0; l <= n + 1; ++l) {
    std::string s = std::to_string(l);
    std::string k = std::to_string(n + 1 - l);
    out.push_back(equality_check("I_" + s + " = J:I^" + k, f.xs[l], expected.expected_x[l]));
  }
  for (unsigned l = 0; l <= n + 1; ++l) {
    std::string s = std::to_string(l);
    out.push_back(
        equality_check("J_" + s + " = J:(J:I^" + s + ")", f.ys[l], expected.expected_y[l]));
  }
  std::size_t mult = quotient_dim(report.model.structure());
  std::size_t want = n + expected.mtype;
  out.push_back({"multiplicity", mult == want,
                 "dim R/J " + std::to_string(mult) + ", expected " + std::to_string(want)});
  out.push_back({"rankA profile", report.ranks.A == expected.expected_rank_a,
                 "computed " + join(report.ranks.A) + ", expected " +
                     join(expected.expected_rank_a)});
  out.push_back({"rankM profile", report.ranks.M == expected.expected_rank_m,
                 "computed " + join(report.ranks.M) + ", expected " +
                     join(expected.expected_rank_m)});
  return out;
}

FiltrationReport verify_against_tables(const LocalModel& model, const CuspidalModel& expected) {
  FiltrationReport rep = analyze(model);
  for (auto& c : table_checks(rep, expected)) rep.checks.push_back(std::move(c));
  CuspType type = expected.mtype == 2 ? CuspType::C2 : CuspType::C3;
  if (rep.chains.m == expected.n)
    for (auto& c : exactness_suite(model, rep.chains, type)) rep.checks.push_back(std::move(c));
  std::string want = "C_{" + std::to_string(expected.mtype) + "," + std::to_string(expected.n) + "}";
  rep.checks.push_back({"catalog label", rep.label == want, rep.label + ", expected " + want});
  if (expected.mtype == 3)
    rep.notes.push_back("construction steps n-1 and n target the chain forms I_{n-1} = "
                        "(x^{n-1}, xy, y^2, z) and J_n = (x^n, xy, y^3, z)");
  return rep;
}

FiltrationReport verify_cuspidal(unsigned mtype, unsigned n, unsigned r) {
  CuspidalModel cm = cuspidal_model(mtype, n, r);
  return verify_against_tables(cm.model, cm);
}

}  // namespace nilfilt
