#include <doctest.h>

#include "nilfilt/session.hpp"

using namespace nilfilt;

namespace {

const char* kC23 = "ring QQ[x,y,z]\nideal J = y^2 + x^3, x*y, z\nideal I = x, y, z\n";
const char* kCounter = "ring QQ[x,y]\nideal I = x, y\nideal J = x^3, x*y, y^4\n";

SourcePos where(const std::string& text) {
  try {
    parse_session(text);
  } catch (const ParseError& e) {
    return e.pos;
  }
  FAIL("no error");
  return {};
}

Ideal id(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (auto* t : gens) g.push_back(parse_polynomial(r, t));
  return Ideal(r, std::move(g));
}

}  // namespace

TEST_CASE("session files") {
  Session s = parse_session(kC23);
  CHECK(s.ring->arity() == 3);
  CHECK(s.ideals.size() == 2);
  CHECK(s.has("J"));
  CHECK_FALSE(s.has("K"));
  CHECK(s.ring->describe() == "QQ[x,y,z] order degrevlex");
  Session g = parse_session("ring GF(7)[a,b] order lex  # comment\nideal A = 8*a, b^2 - 1/2\n");
  CHECK(g.ring->describe() == "GF(7)[a,b] order lex");
  CHECK(g.get("A").to_string() == "(b^2 + 3, a)");
}

TEST_CASE("syntax and name errors carry positions") {
  auto p = where("ring QQ[x]\nideal J = x +");
  CHECK(p.line == 2);
  CHECK(p.column == 13);
  CHECK_THROWS_AS(parse_session("ideal J = x +"), ParseError);
  auto q = where("ring QQ[x]\nideal J = y");
  CHECK(q.line == 2);
  CHECK(q.column == 11);
  CHECK_THROWS_WITH_AS(parse_session("ring QQ[x]\nideal J = y"), doctest::Contains("unknown variable"), ParseError);
  CHECK_THROWS_WITH_AS(parse_session("ring QQ[x]\nideal J = x\nideal J = x^2"), doctest::Contains("J"), ParseError);
  CHECK_THROWS_AS(parse_session("ring QQ[x]\nideal x = x"), ParseError);
  CHECK_THROWS_AS(parse_session("ring QQ[x]\nideal J = x^"), ParseError);
  CHECK_THROWS_AS(parse_session("ring GF(6)[x]\n"), Error);
  CHECK_THROWS_AS(parse_session("ring QQ[x,x]\n"), Error);
  CHECK_THROWS_AS(parse_session("ring QQ[x]\nlet K = colon(J, J)\nideal J = x"), ParseError);
}

TEST_CASE("expressions") {
  Session s = parse_session(kC23);
  CHECK(equals(eval_expr(s, "colon(J, I)"), id(s.ring, {"x^3", "x*y", "y^2", "z"})));
  CHECK(eval_expr(s, "power(I, 0)").is_unit());
  CHECK(eval_expr(s, "power(I, 0)").to_string() == "(1)");
  Session c = parse_session(kCounter);
  CHECK(eval_expr(c, "colon(J, power(I, 2))").to_string() == "(x, y^2)");
  CHECK(equals(eval_expr(c, "sum(J, ideal(x^2))"), id(c.ring, {"x^2", "x*y", "y^4"})));
  CHECK(equals(eval_expr(c, "intersect(I, ideal(y))"), id(c.ring, {"y"})));
  CHECK(eval_expr(c, "saturate(J, I)").is_unit());
  CHECK_THROWS_AS(eval_expr(c, "colon(J, K)"), ParseError);
  CHECK_THROWS_AS(eval_expr(c, "power(I, J)"), ParseError);
  CHECK_THROWS_AS(eval_expr(c, "frobnicate(I)"), ParseError);
  CHECK_THROWS_AS(eval_expr(c, "colon(J, ideal(0))"), ParseError);
  for (const char* t : {"colon(J, power(I, 2))", "intersect(sum(I, J), ideal(x^2 - 1/3*y, y^5))"})
    CHECK(print_expr(parse_expr(c, print_expr(parse_expr(c, t)))) == print_expr(parse_expr(c, t)));
}

TEST_CASE("let statements") {
  Session s = parse_session(std::string(kCounter) + "let I2 = colon(J, power(I, 2))\nlet I3 = colon(J, I)\n");
  CHECK(s.get("I2").to_string() == "(x, y^2)");
  CHECK(equals(s.get("I3"), id(s.ring, {"x^2", "x*y", "y^3"})));
  CHECK(eval_expr(s, "intersect(I2, I3)").to_string() == s.get("I3").to_string());
}

TEST_CASE("printing round trip") {
  for (const char* t : {kC23, kCounter, "ring GF(5)[u,v] order lex\nideal A = u^2 - v, 3*v^3\nlet B = saturate(A, ideal(v))\n",
                        "ring QQ[x]\nideal Z = 0\n"}) {
    Session s = parse_session(t);
    const std::string once = print_session(s);
    CHECK(print_session(parse_session(once)) == once);
    Session back = parse_session(once);
    for (const auto& d : s.ideals) CHECK(back.get(d.name).to_string() == s.get(d.name).to_string());
  }
}
