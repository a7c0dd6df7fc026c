#include "nilfilt/session.hpp"

#include <cctype>
#include <map>
#include <set>

namespace nilfilt {

ParseError::ParseError(SourcePos p, const std::string& msg)
    : Error("line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": " + msg),
      pos(p) {}

namespace {

struct Token {
  enum Kind { Ident, Int, Sym, End } kind = End;
  std::string text;
  SourcePos pos;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (; k > 0; --k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Token::Ident, text.substr(i, j - i), pos});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Int, text.substr(i, j - i), pos});
      advance(j - i);
    } else if (std::string("+-*/^,=()[]").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Sym, std::string(1, static_cast<char>(c)), pos});
      advance(1);
    } else {
      throw ParseError(pos, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::End, "", pos});
  return out;
}

const std::set<std::string> kKeywords{"ring", "ideal", "let", "order"};
const std::set<std::string> kFunctions{"sum", "product", "power", "intersect", "colon", "saturate", "ideal"};

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[at_]; }
  const Token& next() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }
  bool is_sym(const std::string& s) const { return peek().kind == Token::Sym && peek().text == s; }
  bool is_word(const std::string& s) const { return peek().kind == Token::Ident && peek().text == s; }

  std::string describe(const Token& t) const {
    if (t.kind == Token::End) return "end of input";
    return "'" + t.text + "'";
  }

  const Token& expect_sym(const std::string& s) {
    if (!is_sym(s)) throw ParseError(peek().pos, "expected '" + s + "', found " + describe(peek()));
    return next();
  }

  const Token& expect_ident(const std::string& what) {
    if (peek().kind != Token::Ident) throw ParseError(peek().pos, "expected " + what + ", found " + describe(peek()));
    return next();
  }

  unsigned expect_nat(const std::string& what) {
    if (peek().kind != Token::Int) throw ParseError(peek().pos, "expected " + what + ", found " + describe(peek()));
    const Token& t = next();
    try {
      unsigned long v = std::stoul(t.text);
      if (v > 1u << 20) throw std::out_of_range(t.text);
      return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw ParseError(t.pos, "number " + t.text + " is too large");
    }
  }

  RingPtr ring_decl() {
    if (!is_word("ring")) throw ParseError(peek().pos, "expected 'ring' declaration, found " + describe(peek()));
    next();
    Field field;
    const Token& f = expect_ident("QQ or GF(p)");
    if (f.text == "GF") {
      expect_sym("(");
      SourcePos ppos = peek().pos;
      unsigned p = expect_nat("a prime");
      expect_sym(")");
      try {
        field = Field::prime_field(p);
      } catch (const Error& e) {
        throw ParseError(ppos, e.what());
      }
    } else if (f.text != "QQ") {
      throw ParseError(f.pos, "unknown field '" + f.text + "' (QQ or GF(p))");
    }
    expect_sym("[");
    std::vector<std::string> vars;
    std::set<std::string> seen;
    for (;;) {
      const Token& v = expect_ident("a variable name");
      if (kKeywords.count(v.text) || kFunctions.count(v.text))
        throw ParseError(v.pos, "'" + v.text + "' is reserved");
      if (!seen.insert(v.text).second) throw ParseError(v.pos, "duplicate variable '" + v.text + "'");
      vars.push_back(v.text);
      if (is_sym("]")) break;
      expect_sym(",");
    }
    next();
    MonomialOrder order = MonomialOrder::degrevlex();
    if (is_word("order")) {
      next();
      const Token& o = expect_ident("lex or degrevlex");
      if (o.text == "lex")
        order = MonomialOrder::lex();
      else if (o.text != "degrevlex")
        throw ParseError(o.pos, "unknown order '" + o.text + "' (lex or degrevlex)");
    }
    return make_ring(std::move(vars), field, order);
  }

  // factor := integer ["/" integer] | var ["^" nat]
  Polynomial factor(const RingPtr& ring) {
    const Token& t = peek();
    if (t.kind == Token::Int) {
      std::string num = next().text;
      if (is_sym("/")) {
        next();
        if (peek().kind != Token::Int) throw ParseError(peek().pos, "expected a denominator, found " + describe(peek()));
        num += "/" + next().text;
      }
      try {
        return Polynomial::constant(ring, Scalar::parse(num, ring->field()));
      } catch (const Error& e) {
        throw ParseError(t.pos, e.what());
      }
    }
    if (t.kind == Token::Ident) {
      int idx = ring->index_of(t.text);
      if (idx < 0) throw ParseError(t.pos, "unknown variable '" + t.text + "'");
      next();
      unsigned e = 1;
      if (is_sym("^")) {
        next();
        e = expect_nat("an exponent");
      }
      return Polynomial::monomial(ring, Monomial::variable(ring->arity(), static_cast<std::size_t>(idx), e),
                                  Scalar(1, ring->field()));
    }
    throw ParseError(t.pos, "expected a coefficient or variable, found " + describe(t));
  }

  Polynomial term(const RingPtr& ring) {
    Polynomial p = factor(ring);
    while (is_sym("*")) {
      next();
      p *= factor(ring);
    }
    return p;
  }

  Polynomial poly(const RingPtr& ring) {
    Polynomial p(ring);
    bool negate = false;
    if (is_sym("-") || is_sym("+")) negate = next().text == "-";
    for (;;) {
      Polynomial t = term(ring);
      p = negate ? p - t : p + t;
      if (!is_sym("+") && !is_sym("-")) break;
      const Token& op = next();
      negate = op.text == "-";
      if (peek().kind != Token::Int && peek().kind != Token::Ident)
        throw ParseError(op.pos, "dangling '" + op.text + "', found " + describe(peek()) + " after it");
    }
    return p;
  }

  std::vector<Polynomial> poly_list(const RingPtr& ring) {
    std::vector<Polynomial> gens{poly(ring)};
    while (is_sym(",")) {
      next();
      gens.push_back(poly(ring));
    }
    return gens;
  }

  Expr expr(const RingPtr& ring) {
    const Token& t = expect_ident("an ideal name or function");
    Expr e;
    e.pos = t.pos;
    e.name = t.text;
    if (!is_sym("(")) {
      e.kind = Expr::Kind::Name;
      return e;
    }
    if (!kFunctions.count(t.text)) throw ParseError(t.pos, "unknown function '" + t.text + "'");
    next();
    if (t.text == "ideal") {
      e.kind = Expr::Kind::Literal;
      e.gens = poly_list(ring);
    } else {
      e.kind = Expr::Kind::Call;
      e.args.push_back(expr(ring));
      while (is_sym(",")) {
        next();
        if (t.text == "power") {
          Expr k;
          k.kind = Expr::Kind::Number;
          k.pos = peek().pos;
          k.number = expect_nat("an exponent");
          e.args.push_back(std::move(k));
        } else {
          e.args.push_back(expr(ring));
        }
      }
    }
    expect_sym(")");
    check_arity(e);
    return e;
  }

  static void check_arity(const Expr& e) {
    if (e.kind != Expr::Kind::Call) return;
    const std::size_t k = e.args.size();
    if ((e.name == "power" || e.name == "colon" || e.name == "saturate") && k != 2)
      throw ParseError(e.pos, e.name + " takes two arguments");
    if (e.name == "power" && e.args[1].kind != Expr::Kind::Number)
      throw ParseError(e.args[1].pos, "power needs an exponent");
    if (k < 1) throw ParseError(e.pos, e.name + " needs arguments");
  }

  void expect_end() {
    if (peek().kind != Token::End) throw ParseError(peek().pos, "unexpected " + describe(peek()));
  }

private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

void check_names(const Expr& e, const std::set<std::string>& known) {
  if (e.kind == Expr::Kind::Name && !known.count(e.name))
    throw ParseError(e.pos, "unknown ideal '" + e.name + "'");
  for (const auto& a : e.args) check_names(a, known);
}

Ideal eval_at(const Session& s, const Expr& e, std::map<std::string, Ideal>& memo);

Ideal lookup(const Session& s, const std::string& name, std::map<std::string, Ideal>& memo) {
  if (auto it = memo.find(name); it != memo.end()) return it->second;
  for (const auto& d : s.ideals)
    if (d.name == name) return memo.emplace(name, Ideal(s.ring, d.gens)).first->second;
  for (const auto& l : s.lets)
    if (l.name == name) {
      Ideal v = eval_at(s, l.expr, memo);
      return memo.emplace(name, v).first->second;
    }
  throw Error("unknown ideal '" + name + "'");
}

Ideal eval_at(const Session& s, const Expr& e, std::map<std::string, Ideal>& memo) {
  switch (e.kind) {
    case Expr::Kind::Name:
      return lookup(s, e.name, memo);
    case Expr::Kind::Literal:
      return Ideal(s.ring, e.gens);
    case Expr::Kind::Number:
      throw ParseError(e.pos, "a number is not an ideal");
    case Expr::Kind::Call:
      break;
  }
  try {
    if (e.name == "power") return power(eval_at(s, e.args[0], memo), e.args[1].number);
    std::vector<Ideal> v;
    for (const auto& a : e.args) v.push_back(eval_at(s, a, memo));
    if (e.name == "colon") return colon(v[0], v[1]);
    if (e.name == "saturate") return saturate(v[0], v[1]);
    Ideal acc = v[0];
    for (std::size_t k = 1; k < v.size(); ++k) {
      if (e.name == "sum")
        acc = sum(acc, v[k]);
      else if (e.name == "product")
        acc = product(acc, v[k]);
      else
        acc = intersect(acc, v[k]);
    }
    return acc;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(e.pos, e.name + ": " + err.what());
  }
}

}  // namespace

bool Session::has(const std::string& name) const {
  for (const auto& d : ideals)
    if (d.name == name) return true;
  for (const auto& l : lets)
    if (l.name == name) return true;
  return false;
}

Ideal Session::get(const std::string& name) const {
  std::map<std::string, Ideal> memo;
  return lookup(*this, name, memo);
}

Session parse_session(const std::string& text) {
  Parser p(tokenize(text));
  Session s;
  s.ring = p.ring_decl();
  std::set<std::string> names;
  while (p.peek().kind != Token::End) {
    const Token& kw = p.peek();
    if (kw.kind != Token::Ident || (kw.text != "ideal" && kw.text != "let"))
      throw ParseError(kw.pos, "expected 'ideal' or 'let', found " + p.describe(kw));
    const bool is_let = p.next().text == "let";
    const Token& name = p.expect_ident("a name");
    if (kKeywords.count(name.text) || kFunctions.count(name.text) || s.ring->index_of(name.text) >= 0)
      throw ParseError(name.pos, "'" + name.text + "' cannot be used as a name");
    if (!names.insert(name.text).second) throw ParseError(name.pos, "duplicate name '" + name.text + "'");
    const std::string nm = name.text;
    const SourcePos npos = name.pos;
    p.expect_sym("=");
    if (is_let) {
      Expr e = p.expr(s.ring);
      std::set<std::string> known = names;
      known.erase(nm);
      check_names(e, known);
      s.lets.push_back({nm, std::move(e), npos});
    } else {
      s.ideals.push_back({nm, p.poly_list(s.ring), npos});
    }
  }
  return s;
}

Expr parse_expr(const Session& session, const std::string& text) {
  Parser p(tokenize(text));
  Expr e = p.expr(session.ring);
  p.expect_end();
  std::set<std::string> known;
  for (const auto& d : session.ideals) known.insert(d.name);
  for (const auto& l : session.lets) known.insert(l.name);
  check_names(e, known);
  return e;
}

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  Parser p(tokenize(text));
  Polynomial f = p.poly(ring);
  p.expect_end();
  return f;
}

Ideal eval(const Session& session, const Expr& expr) {
  std::map<std::string, Ideal> memo;
  return eval_at(session, expr, memo);
}

Ideal eval_expr(const Session& session, const std::string& text) {
  return eval(session, parse_expr(session, text));
}

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Name: return e.name;
    case Expr::Kind::Number: return std::to_string(e.number);
    case Expr::Kind::Literal: {
      std::string s = "ideal(";
      for (std::size_t k = 0; k < e.gens.size(); ++k) s += (k ? ", " : "") + e.gens[k].to_string();
      return s + ")";
    }
    case Expr::Kind::Call: break;
  }
  std::string s = e.name + "(";
  for (std::size_t k = 0; k < e.args.size(); ++k) s += (k ? ", " : "") + print_expr(e.args[k]);
  return s + ")";
}

std::string print_session(const Session& session) {
  std::string out = "ring " + session.ring->describe() + "\n";
  for (const auto& d : session.ideals) {
    out += "ideal " + d.name + " = ";
    const auto gens = Ideal(session.ring, d.gens).canonical_strings();
    if (gens.empty()) out += "0";
    for (std::size_t k = 0; k < gens.size(); ++k) out += (k ? ", " : "") + gens[k];
    out += "\n";
  }
  for (const auto& l : session.lets) out += "let " + l.name + " = " + print_expr(l.expr) + "\n";
  return out;
}

}  // namespace nilfilt
