#ifndef NILFILT_SESSION_HPP
#define NILFILT_SESSION_HPP

#include <memory>
#include <string>
#include <vector>

#include "nilfilt/ideal.hpp"

namespace nilfilt {

struct SourcePos {
  std::size_t line = 1, column = 1;
};

/// Syntax or name-resolution error; the message carries "line L, column C".
class ParseError : public Error {
public:
  ParseError(SourcePos pos, const std::string& msg);
  SourcePos pos;
};

/// Ideal expression over named ideals:
///   expr := name | fn "(" expr ("," expr)* ")" | "power" "(" expr "," nat ")"
///         | "ideal" "(" poly ("," poly)* ")"
/// with fn one of sum, product, intersect, colon, saturate.
struct Expr {
  enum class Kind { Name, Call, Number, Literal };
  Kind kind = Kind::Name;
  std::string name;  // identifier or function name
  unsigned number = 0;
  std::vector<Expr> args;
  std::vector<Polynomial> gens;  // Literal
  SourcePos pos;
};

struct IdealDecl {
  std::string name;
  std::vector<Polynomial> gens;
  SourcePos pos;
};

struct LetDecl {
  std::string name;
  Expr expr;
  SourcePos pos;
};

/// One ring, then `ideal` and `let` statements in file order.
struct Session {
  RingPtr ring;
  std::vector<IdealDecl> ideals;
  std::vector<LetDecl> lets;

  bool has(const std::string& name) const;
  /// Named ideal or evaluated `let`; throws Error for unknown names.
  Ideal get(const std::string& name) const;
};

Session parse_session(const std::string& text);
Expr parse_expr(const Session& session, const std::string& text);
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

Ideal eval(const Session& session, const Expr& expr);
Ideal eval_expr(const Session& session, const std::string& text);

std::string print_expr(const Expr& expr);
/// Canonical text: ideals as their reduced generators, lets re-printed.
std::string print_session(const Session& session);

}  // namespace nilfilt

#endif
