#include <doctest.h>

#include "nilfilt/construct.hpp"
#include "nilfilt/quotient.hpp"
#include "nilfilt/session.hpp"

using namespace nilfilt;

namespace {

Ideal id(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (auto* t : gens) g.push_back(parse_polynomial(r, t));
  return Ideal(r, std::move(g));
}

ConstructOptions with(const std::string& text) {
  ConstructOptions o;
  o.user = parse_functionals(text);
  return o;
}

bool mentions(const Error& e, const std::string& s) { return std::string(e.what()).find(s) != std::string::npos; }

}  // namespace

TEST_CASE("initial states") {
  CHECK(construct_init(2, 5, 0).ring->arity() == 2);
  auto st = construct_init(3, 4, 2);
  CHECK(st.ring->arity() == 4);
  CHECK(equals(st.I, id(st.ring, {"x", "y", "z1", "z2"})));
  CHECK(st.next_step == 2);
  CHECK_THROWS_AS(construct_init(2, 2, 0), Error);
  CHECK_THROWS_AS(construct_init(3, 3, 0), Error);
}

TEST_CASE("step 2 defaults") {
  auto st = construct_init(2, 5, 1);
  step2(st);
  const auto& r = st.ring;
  CHECK(equals(st.J_chain[2], id(r, {"x^2", "x*y", "y^2", "z1"})));
  CHECK(equals(st.I_chain[2], id(r, {"x^2", "y", "z1"})));
}

TEST_CASE("step 2 with the roles of x and y swapped") {
  auto st = construct_init(2, 4, 1, with("2 p x = 0 1\n2 p y = 1 0\n"));
  step2(st);
  const auto& r = st.ring;
  CHECK(equals(st.J_chain[2], id(r, {"x^2", "x*y", "y^2", "z1"})));
  CHECK(equals(st.I_chain[2], id(r, {"x", "y^2", "z1"})));
  auto res = construct_run(2, 4, 0, with("2 p x = 0 1\n2 p y = 1 0\n"));
  auto model = cuspidal_model(2, 4, 0);
  CHECK(res.report->fingerprint == fingerprint(model.model));
}

TEST_CASE("incompatible q at step 2") {
  auto st = construct_init(2, 4, 0, with("2 q x = 0\n2 q y = 1\n"));
  try {
    step2(st);
    FAIL("accepted");
  } catch (const StepError& e) {
    CHECK(mentions(e, "Step 2"));
  }
}

TEST_CASE("middle steps") {
  auto c2 = construct_init(2, 5, 1);
  step2(c2);
  step_middle(c2);
  CHECK(equals(c2.J_chain[3], id(c2.ring, {"x^3", "x*y", "y^2", "z1"})));
  auto c3 = construct_init(3, 6, 1);
  step2(c3);
  step_middle(c3);
  CHECK(equals(c3.J_chain[3], id(c3.ring, {"x^3", "x*y", "y^3", "z1"})));
  step_middle(c3);
  CHECK(equals(c3.J_chain[4], id(c3.ring, {"x^4", "x*y", "y^3", "z1"})));
}

TEST_CASE("final step defaults") {
  auto a = construct_run(2, 4, 0);
  CHECK(equals(a.final_ideal, id(a.state.ring, {"y^2 + x^4", "x*y"})));
  auto b = construct_run(3, 5, 0);
  CHECK(equals(b.final_ideal, id(b.state.ring, {"y^3 + x^5", "x*y"})));
  CHECK(b.pass());
}

TEST_CASE("phi vanishing on the y^2 class is rejected") {
  try {
    construct_run(2, 5, 0, with("6 phi x^5 = 1\n6 phi y^2 = 0\n"));
    FAIL("accepted");
  } catch (const StepError& e) {
    CHECK(mentions(e, "Step n+1"));
  }
}

TEST_CASE("end-to-end runs with defaults") {
  auto a = construct_run(2, 3, 1);
  CHECK(equals(a.final_ideal, id(a.state.ring, {"y^2 + x^3", "x*y", "z1"})));
  CHECK(a.normal_form);
  REQUIRE(a.c);
  CHECK(a.c->is_one());
  CHECK(all_pass(a.checks));
  auto b = construct_run(3, 6, 0);
  CHECK(equals(b.final_ideal, id(b.state.ring, {"y^3 + x^6", "x*y"})));
  CHECK(b.pass());
  CHECK(construct_run(3, 6, 0).final_ideal.to_string() == b.final_ideal.to_string());
}

TEST_CASE("C_{2,3} run reports all-pass" * doctest::should_fail()) {
  CHECK(construct_run(2, 3, 1).pass());
}

TEST_CASE("dimension ledger and monotone chain") {
  for (auto [t, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {2, 5}, {3, 4}, {3, 6}}) {
    auto res = construct_run(t, n, 1);
    const auto& J = res.state.J_chain;
    REQUIRE(J.size() == n + 2);
    const Ideal& I = res.state.I;
    for (unsigned l = 2; l <= n + 1; ++l) {
      const std::size_t rank = (l == 2 || (t == 3 && l == 3)) ? 2 : 1;
      CHECK(quotient_dim(J[l]) - quotient_dim(J[l - 1]) == rank);
      CHECK(contains(J[l - 1], J[l]));
      CHECK(contains(J[l], product(I, J[l - 1])));
    }
    CHECK(equals(J[n + 1], cuspidal_model(t, n, 1).model.structure()));
  }
}

TEST_CASE("random unit functionals keep the model fingerprint") {
  for (auto [t, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {2, 5}, {3, 5}}) {
    const Fingerprint want = fingerprint(cuspidal_model(t, n, 0).model);
    int good = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      ConstructOptions o;
      o.mode = ChoiceMode::Random;
      o.seed = seed;
      auto res = construct_run(t, n, 0, o);
      CHECK(fingerprint(LocalModel(res.state.I, res.final_ideal)) == want);
      CHECK(quotient_dim(res.final_ideal) == n + t);
      if (res.normal_form && res.c && !res.c->is_zero()) ++good;
    }
    CHECK(good == 20);
  }
}

TEST_CASE("functional files") {
  auto f = parse_functionals("# comment\n2 p x = 1 0\n2 p y = 0 1 # trailing\n5 phi x^5 = 1/2\n");
  REQUIRE(f.find(2, "p"));
  CHECK(f.find(2, "p")->at("y").size() == 2);
  CHECK(f.find(5, "phi")->at("x^5").front() == Scalar(1, {}) / Scalar(2, {}));
  CHECK(f.find(3, "p") == nullptr);
  CHECK_THROWS_AS(parse_functionals("2 p x 1 0\n"), Error);
  CHECK_THROWS_AS(parse_functionals("two p x = 1\n"), Error);
  CHECK_THROWS_AS(parse_functionals("2 p x =\n"), Error);
  CHECK_THROWS_AS(construct_init(2, 4, 0, with("9 p x = 1 0\n")), Error);
  CHECK_THROWS_AS(construct_init(2, 4, 0, with("2 phi x = 1\n")), Error);
  CHECK_THROWS_AS(construct_init(2, 4, 0, with("1 sigma LL = 1 0\n")), Error);
}

TEST_CASE("unknown basis keys are reported with the basis") {
  try {
    construct_run(2, 4, 0, with("3 p w^7 = 1\n"));
    FAIL("accepted");
  } catch (const StepError& e) {
    CHECK(mentions(e, "w^7"));
  }
}
