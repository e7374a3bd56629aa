#include "rvl/syntax.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace rvl {

namespace {

enum class Tok {
  integer,
  ident,
  le,     // <=
  meet,   // /\ .
  join,   // \/
  plus,
  minus,
  star,
  slash,
  lparen,
  rparen,
  comma,
  eq,
  eof,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(ParseError::Kind::syntax, t.span, msg);
}

class Lexer {
 public:
  Lexer(const std::string& src, int base_line = 1) : s_(src), line_(base_line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_ws();
      if (i_ >= s_.size()) break;
      SourceSpan sp{line_, col_, 1};
      char c = s_[i_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
          num += s_[i_];
          advance();
        }
        sp.length = static_cast<int>(num.size());
        out.push_back({Tok::integer, num, sp});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string id;
        while (i_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
          id += s_[i_];
          advance();
        }
        sp.length = static_cast<int>(id.size());
        out.push_back({Tok::ident, id, sp});
        continue;
      }
      switch (c) {
        case '<':
          if (i_ + 1 < s_.size() && s_[i_ + 1] == '=') {
            advance();
            advance();
            sp.length = 2;
            out.push_back({Tok::le, "<=", sp});
            continue;
          }
          throw ParseError(ParseError::Kind::syntax, sp, "stray '<'");
        case '/':
          if (i_ + 1 < s_.size() && s_[i_ + 1] == '\\') {
            advance();
            advance();
            sp.length = 2;
            out.push_back({Tok::meet, "/\\", sp});
            continue;
          }
          advance();
          out.push_back({Tok::slash, "/", sp});
          continue;
        case '\\':
          if (i_ + 1 < s_.size() && s_[i_ + 1] == '/') {
            advance();
            advance();
            sp.length = 2;
            out.push_back({Tok::join, "\\/", sp});
            continue;
          }
          throw ParseError(ParseError::Kind::syntax, sp, "stray '\\'");
        case '+': advance(); out.push_back({Tok::plus, "+", sp}); continue;
        case '-': advance(); out.push_back({Tok::minus, "-", sp}); continue;
        case '*': advance(); out.push_back({Tok::star, "*", sp}); continue;
        case '(': advance(); out.push_back({Tok::lparen, "(", sp}); continue;
        case ')': advance(); out.push_back({Tok::rparen, ")", sp}); continue;
        case ',': advance(); out.push_back({Tok::comma, ",", sp}); continue;
        case '=': advance(); out.push_back({Tok::eq, "=", sp}); continue;
        default:
          throw ParseError(ParseError::Kind::syntax, sp,
                           std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back({Tok::eof, "", SourceSpan{line_, col_, 0}});
    return out;
  }

 private:
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void skip_ws() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }
  const std::string& s_;
  std::size_t i_ = 0;
  int line_;
  int col_ = 1;
};

bool is_sugar_fn(const std::string& id) {
  return id == "min" || id == "max" || id == "abs" || id == "pos" || id == "neg";
}

class Parser {
 public:
  Parser(std::vector<Token> toks, Mode mode) : t_(std::move(toks)), mode_(mode) {}

  Formula formula_all() {
    Formula f = formula();
    expect(Tok::eof, "trailing input after formula");
    return f;
  }

  Inequality inequality_all() {
    Formula a = formula();
    if (peek().kind == Tok::le) {
      next();
      Formula b = formula();
      expect(Tok::eof, "trailing input after inequality");
      return Inequality{std::move(a), std::move(b)};
    }
    expect(Tok::eof, "trailing input after formula");
    return Inequality{Formula::zero(), std::move(a)};
  }

 private:
  const Token& peek() const { return t_[p_]; }
  const Token& next() { return t_[p_++]; }
  void expect(Tok k, const std::string& msg) {
    if (peek().kind != k) fail(peek(), msg);
    next();
  }

  bool starts_prim(Tok k) const {
    return k == Tok::integer || k == Tok::ident || k == Tok::lparen;
  }

  Formula formula() {
    Formula f = sum();
    for (;;) {
      if (peek().kind == Tok::meet) {
        next();
        f = Formula::meet(std::move(f), sum());
      } else if (peek().kind == Tok::join) {
        next();
        f = sugar::join(std::move(f), sum());
      } else {
        return f;
      }
    }
  }

  Formula sum() {
    Formula f = signed_term(false);
    for (;;) {
      if (peek().kind == Tok::plus) {
        next();
        Formula g = signed_term(false);
        f = Formula::add(std::move(f), std::move(g));
      } else if (peek().kind == Tok::minus) {
        next();
        Formula g = signed_term(true);
        f = Formula::add(std::move(f), std::move(g));
      } else {
        return f;
      }
    }
  }

  /// scaled, with an optional leading minus already consumed by the caller.
  /// The minus folds into an explicit rational scalar when one follows;
  /// otherwise it becomes a (-1) scale.
  Formula signed_term(bool negated) {
    if (!negated && peek().kind == Tok::minus) {
      next();
      negated = true;
    }
    if (peek().kind == Tok::integer) {
      Token num = next();
      Rat q = rational_tail(num);
      if (negated) q = -q;
      if (peek().kind == Tok::star) {
        next();
        return Formula::scale(q, prim());
      }
      if (starts_prim(peek().kind)) return Formula::scale(q, prim());
      return literal(q, num.span);
    }
    Formula f = prim();
    if (negated) return sugar::neg(std::move(f));
    return f;
  }

  /// Parses the optional "/ positive-integer" after an integer token.
  Rat rational_tail(const Token& num) {
    if (peek().kind == Tok::slash) {
      next();
      if (peek().kind != Tok::integer) fail(peek(), "expected denominator");
      Token den = next();
      Rat d = Rat::from_string(den.text);
      if (d.is_zero()) throw ParseError(ParseError::Kind::syntax, den.span, "zero denominator");
      return Rat::from_string(num.text) / d;
    }
    return Rat::from_string(num.text);
  }

  Formula literal(const Rat& q, SourceSpan span) {
    if (q.is_zero()) return Formula::zero();
    if (mode_ == Mode::basic)
      throw ParseError(ParseError::Kind::mode, span,
                       "numeric literal '" + q.str() + "' requires extended mode");
    if (q == Rat(1)) return Formula::one();
    return Formula::scale(q, Formula::one());
  }

  Formula prim() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::integer: {
        Token num = next();
        Rat q = rational_tail(num);
        if (peek().kind == Tok::star) {
          next();
          return Formula::scale(q, prim());
        }
        if (starts_prim(peek().kind)) return Formula::scale(q, prim());
        return literal(q, num.span);
      }
      case Tok::ident: {
        Token id = next();
        if (is_sugar_fn(id.text)) return sugar_call(id);
        return Formula::letter(id.text);
      }
      case Tok::lparen: {
        next();
        Formula f = formula();
        expect(Tok::rparen, "expected ')'");
        return f;
      }
      default:
        fail(t, "expected a formula");
    }
  }

  Formula sugar_call(const Token& fn) {
    expect(Tok::lparen, "expected '(' after '" + fn.text + "'");
    Formula a = formula();
    if (fn.text == "min" || fn.text == "max") {
      expect(Tok::comma, "expected ','");
      Formula b = formula();
      expect(Tok::rparen, "expected ')'");
      if (fn.text == "min") return Formula::meet(std::move(a), std::move(b));
      return sugar::join(std::move(a), std::move(b));
    }
    expect(Tok::rparen, "expected ')'");
    if (fn.text == "abs") return sugar::abs(std::move(a));
    if (fn.text == "pos") return sugar::pos(std::move(a));
    return sugar::negp(std::move(a));
  }

  std::vector<Token> t_;
  std::size_t p_ = 0;
  Mode mode_;
};

Rat parse_signed_rational(const std::string& text, int line) {
  Lexer lex(text, line);
  auto toks = lex.run();
  std::size_t p = 0;
  bool neg = false;
  if (toks[p].kind == Tok::minus) {
    neg = true;
    ++p;
  }
  if (toks[p].kind != Tok::integer) fail(toks[p], "expected rational");
  Rat q = Rat::from_string(toks[p].text);
  ++p;
  if (toks[p].kind == Tok::slash) {
    ++p;
    if (toks[p].kind != Tok::integer) fail(toks[p], "expected denominator");
    Rat d = Rat::from_string(toks[p].text);
    if (d.is_zero()) fail(toks[p], "zero denominator");
    q = q / d;
    ++p;
  }
  if (toks[p].kind != Tok::eof) fail(toks[p], "trailing input after rational");
  return neg ? -q : q;
}

}  // namespace

Formula parse_formula(const std::string& text, Mode mode) {
  Parser p(Lexer(text).run(), mode);
  return p.formula_all();
}

Inequality parse_inequality(const std::string& text, Mode mode) {
  Parser p(Lexer(text).run(), mode);
  return p.inequality_all();
}

Theory parse_theory(const std::string& text, Mode mode) {
  Theory out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto hash = raw.find('#');
    std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
    if (body.find_first_not_of(" \t") == std::string::npos) continue;
    Parser p(Lexer(body, line).run(), mode);
    out.push_back(p.inequality_all());
  }
  return out;
}

Rat parse_rational(const std::string& text) { return parse_signed_rational(text, 1); }

std::map<std::string, Rat> parse_model_file(const std::string& text) {
  std::map<std::string, Rat> out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto hash = raw.find('#');
    std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
    if (body.find_first_not_of(" \t") == std::string::npos) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ParseError(ParseError::Kind::syntax, SourceSpan{line, 1, 1},
                       "expected 'letter = rational'");
    Lexer lhs_lex(body.substr(0, eq), line);
    auto lhs = lhs_lex.run();
    if (lhs.size() != 2 || lhs[0].kind != Tok::ident || is_sugar_fn(lhs[0].text))
      throw ParseError(ParseError::Kind::syntax, SourceSpan{line, 1, 1},
                       "expected a letter before '='");
    Rat value = parse_signed_rational(body.substr(eq + 1), line);
    if (out.count(lhs[0].text))
      throw ParseError(ParseError::Kind::syntax, lhs[0].span,
                       "duplicate letter '" + lhs[0].text + "'");
    out.emplace(lhs[0].text, value);
  }
  return out;
}

namespace {

// Precedence levels for printing: 0 meet, 1 sum, 2 scaled/prim.

void print_at(const Formula& f, int level, std::string& out);

void print_paren(const Formula& f, std::string& out) {
  out += '(';
  print_at(f, 0, out);
  out += ')';
}

/// Prints a scale node given its (already sign-adjusted) scalar.
void print_scale_body(const Rat& q, const Formula& inner, std::string& out) {
  if (inner.is(Formula::Kind::one)) {
    if (q.is_zero()) {
      out += "0(1)";
    } else if (q == Rat(1)) {
      // Scale(1, One) is distinct from the constant 1; keep the node.
      out += "1(1)";
    } else {
      out += q.str();
    }
    return;
  }
  out += q.str();
  if (inner.is(Formula::Kind::letter)) {
    out += inner.name();
  } else {
    print_paren(inner, out);
  }
}

void print_at(const Formula& f, int level, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::zero:
      out += '0';
      return;
    case Formula::Kind::one:
      out += '1';
      return;
    case Formula::Kind::letter:
      out += f.name();
      return;
    case Formula::Kind::meet: {
      if (level > 0) {
        print_paren(f, out);
        return;
      }
      print_at(f.left(), 0, out);
      out += " /\\ ";
      // Right operand binds tighter: a nested right meet needs parens.
      if (f.right().is(Formula::Kind::meet)) {
        print_paren(f.right(), out);
      } else {
        print_at(f.right(), 1, out);
      }
      return;
    }
    case Formula::Kind::add: {
      if (level > 1) {
        print_paren(f, out);
        return;
      }
      print_at(f.left(), 1, out);
      const Formula& r = f.right();
      if (r.is(Formula::Kind::scale) && r.scalar().sign() < 0) {
        out += " - ";
        Rat q = -r.scalar();
        if (q == Rat(1) && !r.inner().is(Formula::Kind::one)) {
          // "x - P" reparses to Add(x, Scale(-1, P)).
          if (r.inner().is(Formula::Kind::letter)) {
            out += r.inner().name();
          } else {
            print_paren(r.inner(), out);
          }
        } else {
          print_scale_body(q, r.inner(), out);
        }
      } else {
        out += " + ";
        if (r.is(Formula::Kind::add) || r.is(Formula::Kind::meet)) {
          print_paren(r, out);
        } else {
          print_at(r, 2, out);
        }
      }
      return;
    }
    case Formula::Kind::scale: {
      print_scale_body(f.scalar(), f.inner(), out);
      return;
    }
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print_at(f, 0, out);
  return out;
}

std::string print_inequality(const Inequality& ineq) {
  return print_formula(ineq.lhs) + " <= " + print_formula(ineq.rhs);
}

}  // namespace rvl
