// One PASS/FAIL line per acceptance criterion. Exits 0 once every criterion
// has been evaluated; --strict makes any FAIL exit 1.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "nilfilt/cli.hpp"
#include "nilfilt/construct.hpp"
#include "nilfilt/filtration.hpp"
#include "nilfilt/quotient.hpp"
#include "nilfilt/session.hpp"
#include "oracles.hpp"

using namespace nilfilt;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string pw(const char* v, unsigned e) { return e == 1 ? v : std::string(v) + "^" + std::to_string(e); }

Ideal ideal_of(const RingPtr& r, std::vector<std::string> gens, unsigned nz) {
  for (unsigned i = 1; i <= nz; ++i) gens.push_back("z" + std::to_string(i));
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(r, g));
  return Ideal(r, std::move(ps));
}

struct Table {
  RingPtr ring;
  Ideal I{RingPtr{}}, J{RingPtr{}};
  std::vector<Ideal> x, y;  // indices 0..n+1
};

// Closed forms of the two filtration columns, with J_1 = I.
Table closed_form(unsigned t, unsigned n, unsigned r) {
  std::vector<std::string> vars{"x", "y"};
  for (unsigned i = 1; i <= r; ++i) vars.push_back("z" + std::to_string(i));
  Table tb;
  tb.ring = make_ring(vars);
  auto id = [&](std::vector<std::string> g) { return ideal_of(tb.ring, std::move(g), r); };
  tb.I = id({"x", "y"});
  tb.J = id({pw("y", t) + " + " + pw("x", n), "x*y"});
  tb.x.push_back(id({"1"}));
  tb.y.push_back(id({"1"}));
  tb.y.push_back(tb.I);
  if (t == 2) {
    for (unsigned l = 1; l < n; ++l) tb.x.push_back(id({pw("x", l), "y"}));
    tb.x.push_back(id({pw("x", n), "x*y", "y^2"}));
    for (unsigned l = 2; l <= n; ++l) tb.y.push_back(id({pw("x", l), "x*y", "y^2"}));
  } else {
    for (unsigned l = 1; l + 2 <= n; ++l) tb.x.push_back(id({pw("x", l), "y"}));
    tb.x.push_back(id({pw("x", n - 1), "x*y", "y^2"}));
    tb.x.push_back(id({pw("x", n), "x*y", "y^3"}));
    tb.y.push_back(id({"x^2", "x*y", "y^2"}));
    for (unsigned l = 3; l <= n; ++l) tb.y.push_back(id({pw("x", l), "x*y", "y^3"}));
  }
  tb.x.push_back(tb.J);
  tb.y.push_back(tb.J);
  return tb;
}

std::vector<std::tuple<unsigned, unsigned, unsigned>> cases(unsigned t) {
  std::vector<std::tuple<unsigned, unsigned, unsigned>> out;
  for (unsigned n = t == 2 ? 3 : 4; n <= 8; ++n)
    for (unsigned r = 0; r <= 2; ++r) out.emplace_back(t, n, r);
  return out;
}

std::string case_name(unsigned t, unsigned n, unsigned r) {
  return "C_{" + std::to_string(t) + "," + std::to_string(n) + "} r=" + std::to_string(r);
}

double secs(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Verdict tables(unsigned t) {
  Verdict v;
  const auto t0 = Clock::now();
  std::size_t rows = 0;
  for (auto [tt, n, r] : cases(t)) {
    Table tb = closed_form(tt, n, r);
    Filtrations f = compute_filtrations(LocalModel(tb.I, tb.J));
    if (f.m != n) {
      v.fail(case_name(tt, n, r) + ": m = " + std::to_string(f.m));
      continue;
    }
    for (unsigned l = 0; l <= n + 1; ++l) {
      rows += 2;
      if (!equals(f.xs[l], tb.x[l])) v.fail(case_name(tt, n, r) + ": I_" + std::to_string(l) + " = " + f.xs[l].to_string());
      if (!equals(f.ys[l], tb.y[l])) v.fail(case_name(tt, n, r) + ": J_" + std::to_string(l) + " = " + f.ys[l].to_string());
    }
  }
  const double s = secs(t0);
  if (s >= 10) v.fail("runtime " + std::to_string(s) + " s");
  if (v.pass) {
    std::ostringstream d;
    d << rows << " table entries equal, J_1 = I, " << s << " s";
    v.detail = d.str();
  }
  return v;
}

Verdict multiplicity() {
  Verdict v;
  std::size_t k = 0;
  for (unsigned t : {2u, 3u})
    for (auto [tt, n, r] : cases(t)) {
      Table tb = closed_form(tt, n, r);
      LocalModel model(tb.I, tb.J);
      Filtrations f = compute_filtrations(model);
      RankProfiles p = rank_profiles(f);
      std::size_t sum = 0;
      for (auto x : p.M) sum += x;
      const std::size_t d = quotient_dim(tb.J);
      if (compute_m(model) != n) v.fail(case_name(tt, n, r) + ": m != n");
      if (d != n + tt) v.fail(case_name(tt, n, r) + ": dim R/J = " + std::to_string(d));
      if (sum != d) v.fail(case_name(tt, n, r) + ": sum rankM = " + std::to_string(sum));
      ++k;
    }
  if (v.pass) v.detail = std::to_string(k) + " cases: m = n, dim R/J = n+2 (C2) / n+3 (C3) = sum of rankM";
  return v;
}

Verdict ranks_and_duality() {
  Verdict v;
  for (unsigned t : {2u, 3u})
    for (auto [tt, n, r] : cases(t)) {
      Table tb = closed_form(tt, n, r);
      Filtrations f = compute_filtrations(LocalModel(tb.I, tb.J));
      RankProfiles p = rank_profiles(f);
      std::vector<std::size_t> a(n + 1, 1), m(n + 1, 1);
      a[1] = 2;
      m[n - 1] = 2;
      if (tt == 3) {
        a[2] = 2;
        m[n - 2] = 2;
      }
      if (p.A != a || p.M != m) v.fail(case_name(tt, n, r) + ": rank profile");
      if (!duality_check(f, p).pass) v.fail(case_name(tt, n, r) + ": duality");
    }
  auto r = make_ring({"x", "y"});
  Filtrations g = compute_filtrations(
      LocalModel(ideal_of(r, {"x", "y"}, 0), ideal_of(r, {"x^3", "x*y", "y^4"}, 0)));
  if (duality_check(g, rank_profiles(g)).pass) v.fail("duality passes on (x^3, xy, y^4)");
  if (v.pass) v.detail = "profiles match on 33 cases, duality passes there and fails on (x^3, xy, y^4)";
  return v;
}

Verdict counterexample() {
  Verdict v;
  auto r = make_ring({"x", "y"});
  auto id = [&](std::vector<std::string> g) { return ideal_of(r, std::move(g), 0); };
  LocalModel model(id({"x", "y"}), id({"x^3", "x*y", "y^4"}));
  Filtrations f = compute_filtrations(model);
  if (f.m != 3) v.fail("m = " + std::to_string(f.m));
  const oracle::MonIdeal j{{3, 0}, {1, 1}, {0, 4}};
  // oracle chains: members of J : I^k and J : (J : I^k) among box monomials
  auto box = oracle::box(2, 6);
  auto colon_power = [&](unsigned k) {
    oracle::MonIdeal ik;
    for (const auto& e : oracle::box(2, k))
      if (e[0] + e[1] == k) ik.push_back(e);
    oracle::MonIdeal out;
    for (const auto& e : box)
      if (oracle::in_colon(j, ik, e)) out.push_back(e);
    return out;
  };
  auto colon_set = [&](const oracle::MonIdeal& s) {
    oracle::MonIdeal out;
    for (const auto& e : box)
      if (oracle::in_colon(j, s, e)) out.push_back(e);
    return out;
  };
  auto agrees = [&](const Ideal& a, const oracle::MonIdeal& members) {
    for (const auto& e : box) {
      const bool want = std::find(members.begin(), members.end(), e) != members.end();
      if (a.contains(Polynomial::monomial(r, Monomial(e), Scalar(1))) != want) return false;
    }
    return true;
  };
  if (!agrees(f.xs[2], colon_power(2))) v.fail("I_2 disagrees with the oracle");
  if (!agrees(f.xs[3], colon_power(1))) v.fail("I_3 disagrees with the oracle");
  if (!agrees(f.ys[2], colon_set(colon_power(2)))) v.fail("J_2 disagrees with the oracle");
  if (!agrees(f.ys[3], colon_set(colon_power(3)))) v.fail("J_3 disagrees with the oracle");
  if (!equals(f.xs[2], id({"x", "y^2"}))) v.fail("I_2 = " + f.xs[2].to_string());
  if (!equals(f.ys[2], id({"x^2", "x*y", "y^2"})) || !equals(f.ys[2], f.bf[2])) v.fail("J_2 != I^(2)");
  if (!equals(f.ys[3], id({"x^2", "x*y", "y^3"})) || !equals(f.ys[3], f.xs[3])) v.fail("J_3 != I_3");
  if (!equals(f.bf[3], id({"x^3", "x*y", "y^3"}))) v.fail("I^(3) = " + f.bf[3].to_string());
  if (!contains(f.ys[3], f.bf[3]) || equals(f.ys[3], f.bf[3])) v.fail("J_3 does not strictly contain I^(3)");
  // each pair of chains differs at some index
  bool bx = false, by = false, xy = false;
  for (unsigned l = 0; l <= f.m + 1; ++l) {
    bx = bx || !equals(f.bf[l], f.xs[l]);
    by = by || !equals(f.bf[l], f.ys[l]);
    xy = xy || !equals(f.xs[l], f.ys[l]);
  }
  if (!(bx && by && xy)) v.fail("two of the filtrations coincide");
  if (v.pass)
    v.detail = "m = 3, I_2 = (x, y^2), J_2 = I^(2), J_3 = I_3 strictly contains I^(3), chains pairwise distinct";
  return v;
}

Verdict exactness() {
  Verdict v;
  std::size_t total = 0, failed = 0;
  std::string first;
  std::set<std::string> which;
  for (unsigned t : {2u, 3u})
    for (auto [tt, n, r] : cases(t)) {
      Table tb = closed_form(tt, n, r);
      LocalModel model(tb.I, tb.J);
      for (const auto& c : exactness_suite(model, compute_filtrations(model), tt == 2 ? CuspType::C2 : CuspType::C3)) {
        // (b') and (d') are extra diagnostics, not part of the criterion
        if (c.name.size() > 2 && c.name[2] == '\'') continue;
        ++total;
        if (!c.pass) {
          ++failed;
          which.insert(std::string(tt == 2 ? "C2 " : "C3 ") + c.name.substr(0, 3));
          if (first.empty()) first = case_name(tt, n, r) + " " + c.name + ": " + c.detail;
        }
      }
    }
  std::string names;
  for (const auto& w : which) names += (names.empty() ? "" : ", ") + w;
  if (failed)
    v.fail(std::to_string(failed) + "/" + std::to_string(total) + " checks fail (" + names + "), first " + first);
  else v.detail = std::to_string(total) + " checks pass";
  return v;
}

Verdict multiplications() {
  Verdict v;
  std::size_t pairs = 0;
  for (unsigned t : {2u, 3u})
    for (auto [tt, n, r] : cases(t)) {
      Table tb = closed_form(tt, n, r);
      Filtrations f = compute_filtrations(LocalModel(tb.I, tb.J));
      for (unsigned a = 0; a <= f.m; ++a)
        for (unsigned b = 0; a + b <= f.m; ++b) {
          auto [aa, am] = multiplication_nonzero(f, a, b);
          ++pairs;
          if (!aa || !am)
            v.fail(case_name(tt, n, r) + " (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
  if (v.pass) v.detail = std::to_string(pairs) + " index pairs, both products nonzero";
  return v;
}

Verdict construction() {
  Verdict v;
  const auto t0 = Clock::now();
  std::size_t runs = 0;
  for (unsigned t : {2u, 3u})
    for (unsigned n = t == 2 ? 3 : 4; n <= 8; ++n)
      for (unsigned r = 0; r <= 1; ++r) {
        Table tb = closed_form(t, n, r);
        auto res = construct_run(t, n, r);
        ++runs;
        const auto& st = res.state;
        for (unsigned l = 2; l <= n + 1; ++l)
          if (!equals(st.J_chain[l], tb.y[l])) v.fail(case_name(t, n, r) + ": constructed J_" + std::to_string(l));
        for (unsigned l = 2; l <= n && l < st.I_chain.size(); ++l)
          if (!equals(st.I_chain[l], tb.x[l])) v.fail(case_name(t, n, r) + ": constructed I_" + std::to_string(l));
        if (!equals(res.final_ideal, tb.J) || res.final_ideal.to_string() != tb.J.to_string())
          v.fail(case_name(t, n, r) + ": final " + res.final_ideal.to_string());
      }
  for (auto [t, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {2, 5}, {3, 5}}) {
    Table tb = closed_form(t, n, 0);
    const Fingerprint want = fingerprint(LocalModel(tb.I, tb.J));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      ConstructOptions o;
      o.mode = ChoiceMode::Random;
      o.seed = seed;
      auto res = construct_run(t, n, 0, o);
      ++runs;
      if (!(fingerprint(LocalModel(res.state.I, res.final_ideal)) == want))
        v.fail("random " + case_name(t, n, 0) + " seed " + std::to_string(seed) + ": " + res.final_ideal.to_string());
    }
  }
  const double s = secs(t0);
  if (s >= 30) v.fail("runtime " + std::to_string(s) + " s");
  if (v.pass) {
    std::ostringstream d;
    d << runs << " runs: defaults follow the chains and end in the model ideal, 60 random runs keep the fingerprint, "
      << s << " s";
    v.detail = d.str();
  }
  return v;
}

Verdict kernel() {
  Verdict v;
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t nv = 1 + trial % 3;
    std::vector<std::string> vars{"x", "y", "z"};
    vars.resize(nv);
    auto r = make_ring(vars);
    auto a = oracle::random_monomial_ideal(rng, nv, 4, 4), b = oracle::random_monomial_ideal(rng, nv, 4, 3);
    Ideal A(r, oracle::polys(r, a)), B(r, oracle::polys(r, b));
    Ideal meet = intersect(A, B), quo = colon(A, B), sat = saturate(A, B);
    for (const auto& e : oracle::box(nv, 5)) {
      Polynomial m = Polynomial::monomial(r, Monomial(e), Scalar(1));
      if (A.contains(m) != oracle::member(a, e) || meet.contains(m) != oracle::in_intersection(a, b, e) ||
          quo.contains(m) != oracle::in_colon(a, b, e) || sat.contains(m) != oracle::in_saturation(a, b, e)) {
        v.fail("monomial trial " + std::to_string(trial));
        break;
      }
    }
  }
  int same = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto r = make_ring({"x", "y", "z"});
    std::vector<Polynomial> g;
    for (int k = 0; k < 3; ++k) g.push_back(oracle::random_polynomial(rng, r, 3, 3));
    auto gb = buchberger(g, r);
    if (gb.elements() != oracle::naive_groebner(g)) v.fail("basis differs from the fixpoint oracle, trial " + std::to_string(trial));
    auto h = g;
    std::shuffle(h.begin(), h.end(), rng);
    for (auto& p : h) p = p.scaled(Scalar(5) / Scalar(-3));
    if (!(buchberger(h, r) == gb)) v.fail("permutation/scaling changes the basis, trial " + std::to_string(trial));
    // a second ideal: equal half of the time (mixed generators), else perturbed
    std::vector<Polynomial> k2{h[0] + h[1], h[1], h[2] + h[0] * parse_polynomial(r, "x")};
    if (trial % 2) k2.push_back(oracle::random_polynomial(rng, r, 2, 2));
    Ideal I(r, g), K(r, k2);
    const bool d = equals(I, K);
    const bool l = equals(reorder(I, MonomialOrder::lex()), reorder(K, MonomialOrder::lex()));
    if (d != l) v.fail("lex and degrevlex disagree, trial " + std::to_string(trial));
    same += d;
  }
  if (v.pass)
    v.detail = "200 monomial ideals match divisibility; 100 polynomial ideals invariant, lex/degrevlex verdicts agree (" +
               std::to_string(same) + " equal pairs)";
  return v;
}

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

Verdict cli_contract() {
  Verdict v;
  std::string json;
  const int code = run_cli({"cuspidal", "--type", "2", "--n", "5", "--r", "1", "--json"}, &json);
  if (code != 0) v.fail("exit " + std::to_string(code) + ", expected 0");
  const std::filesystem::path src = std::filesystem::path(NILFILT_FIXTURES).parent_path().parent_path();
  const auto tmp = std::filesystem::temp_directory_path() / "nilfilt_acceptance_report.json";
  std::ofstream(tmp) << json;
  const std::string cmd = "python3 '" + (src / "tools/check_report.py").string() + "' --schema '" +
                          (src / "schemas/report.schema.json").string() + "' --exit 0 -- cat '" + tmp.string() +
                          "' > /dev/null 2>&1";
  const bool schema_ok = std::system(cmd.c_str()) == 0;
  std::filesystem::remove(tmp);
  if (!schema_ok) v.fail("schema validation failed");
  const std::string fx = NILFILT_FIXTURES;
  const int good = run_cli({"cuspidal", "--type", "2", "--n", "5", "--r", "1", "--expected", fx + "/cuspidal_2_5_1.json"});
  const int bad = run_cli({"cuspidal", "--type", "2", "--n", "5", "--r", "1", "--expected", fx + "/cuspidal_2_5_1_corrupt.json"});
  if (!(good == 0 && bad == 1)) v.fail("corrupting the fixture does not flip 0 to 1");
  const int g3 = run_cli({"cuspidal", "--type", "3", "--n", "4", "--expected", fx + "/cuspidal_3_4_0.json"});
  const int b3 = run_cli({"cuspidal", "--type", "3", "--n", "4", "--expected", fx + "/cuspidal_3_4_0_corrupt.json"});
  std::string extra = std::string("; schema ") + (schema_ok ? "valid" : "invalid") + "; fixture exits " +
                      std::to_string(good) + " -> " + std::to_string(bad) + " (C_{3,4}: " + std::to_string(g3) +
                      " -> " + std::to_string(b3) + ")";
  if (v.pass) v.detail = "exit 0" + extra;
  else v.detail += extra;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::string(argv[1]) == "--strict";
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"C_{2,n} table reproduction", [] { return tables(2); }},
      {"C_{3,n} table reproduction", [] { return tables(3); }},
      {"multiplicity m = n and dim R/J", multiplicity},
      {"rank profiles and duality", ranks_and_duality},
      {"three filtrations on (x^3, xy, y^4)", counterexample},
      {"exactness suite", exactness},
      {"multiplications never vanish", multiplications},
      {"construction engines", construction},
      {"kernel oracle equivalence", kernel},
      {"CLI contract", cli_contract},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    failed += !v.pass;
    std::cout << "criterion " << k + 1 << ": " << (v.pass ? "PASS" : "FAIL") << "  " << criteria[k].first << ": "
              << v.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass" << std::endl;
  return strict && failed ? 1 : 0;
}
