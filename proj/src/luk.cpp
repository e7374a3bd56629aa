#include "rvl/luk.hpp"

#include <algorithm>
#include <cctype>

namespace rvl {

LukFormula LukFormula::letter(std::string name) {
  auto n = std::make_shared<Node>(Kind::letter);
  n->name = std::move(name);
  return LukFormula(std::move(n));
}

LukFormula LukFormula::neg(LukFormula f) {
  auto n = std::make_shared<Node>(Kind::neg);
  n->a = std::move(f);
  return LukFormula(std::move(n));
}

LukFormula LukFormula::minus(LukFormula f, LukFormula g) {
  auto n = std::make_shared<Node>(Kind::minus);
  n->a = std::move(f);
  n->b = std::move(g);
  return LukFormula(std::move(n));
}

LukFormula LukFormula::half(LukFormula f) {
  auto n = std::make_shared<Node>(Kind::half);
  n->a = std::move(f);
  return LukFormula(std::move(n));
}

LukFormula LukFormula::implies(LukFormula f, LukFormula g) {
  return neg(minus(std::move(f), std::move(g)));
}

LukFormula LukFormula::oplus(LukFormula f, LukFormula g) {
  return neg(minus(neg(std::move(f)), std::move(g)));
}

namespace {

class LukParser {
 public:
  LukParser(const std::string& s) : s_(s) {}

  LukFormula run() {
    LukFormula f = imp();
    skip();
    if (i_ < s_.size()) err("trailing input");
    return f;
  }

 private:
  [[noreturn]] void err(const std::string& msg) {
    throw ParseError(ParseError::Kind::syntax, SourceSpan{1, static_cast<int>(i_) + 1, 1}, msg);
  }
  void skip() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
  }
  bool eat(const std::string& tok) {
    skip();
    if (s_.compare(i_, tok.size(), tok) == 0) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  bool peek(const std::string& tok) {
    skip();
    return s_.compare(i_, tok.size(), tok) == 0;
  }

  LukFormula imp() {
    LukFormula f = sum();
    if (eat("->")) return LukFormula::implies(std::move(f), imp());
    return f;
  }

  LukFormula sum() {
    LukFormula f = unary();
    for (;;) {
      if (eat("-.")) {
        f = LukFormula::minus(std::move(f), unary());
      } else if (eat("(+)")) {
        f = LukFormula::oplus(std::move(f), unary());
      } else {
        return f;
      }
    }
  }

  LukFormula unary() {
    if (eat("~")) return LukFormula::neg(unary());
    if (eat("1/2")) return LukFormula::half(unary());
    skip();
    if (i_ < s_.size() && s_[i_] == '(') {
      if (peek("(+)")) err("expected a formula");
      ++i_;
      LukFormula f = imp();
      skip();
      if (i_ >= s_.size() || s_[i_] != ')') err("expected ')'");
      ++i_;
      return f;
    }
    if (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) {
      std::string name;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
        name += s_[i_];
        ++i_;
      }
      return LukFormula::letter(std::move(name));
    }
    err("expected a formula");
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

LukFormula parse_luk(const std::string& text) { return LukParser(text).run(); }

std::string print_luk(const LukFormula& f) {
  switch (f.kind()) {
    case LukFormula::Kind::letter:
      return f.name();
    case LukFormula::Kind::neg:
      return "~(" + print_luk(f.inner()) + ")";
    case LukFormula::Kind::minus:
      return "(" + print_luk(f.left()) + " -. " + print_luk(f.right()) + ")";
    case LukFormula::Kind::half:
      return "1/2(" + print_luk(f.inner()) + ")";
  }
  return "";
}

Formula translate(const LukFormula& f) {
  switch (f.kind()) {
    case LukFormula::Kind::letter:
      return Formula::letter(f.name());
    case LukFormula::Kind::neg:
      return Formula::add(Formula::one(), Formula::scale(Rat(-1), translate(f.inner())));
    case LukFormula::Kind::minus:
      return sugar::join(sugar::sub(translate(f.left()), translate(f.right())),
                         Formula::zero());
    case LukFormula::Kind::half:
      return Formula::scale(Rat(1, 2), translate(f.inner()));
  }
  throw std::logic_error("unreachable");
}

namespace {

std::vector<std::string> luk_letters(const LukFormula& f) {
  switch (f.kind()) {
    case LukFormula::Kind::letter:
      return {f.name()};
    case LukFormula::Kind::neg:
    case LukFormula::Kind::half:
      return luk_letters(f.inner());
    case LukFormula::Kind::minus: {
      auto l = luk_letters(f.left());
      auto r = luk_letters(f.right());
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
  }
  return {};
}

}  // namespace

Verdict luk_valid(const LukFormula& f, LukConvention convention, DecideOptions opts) {
  Formula t = translate(f);
  Theory side;
  {
    auto names = luk_letters(f);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    for (const auto& name : names)
      side.push_back(Inequality{Formula::zero(), Formula::letter(name)});
  }
  Formula truth = convention == LukConvention::luk ? Formula::one() : Formula::zero();
  Verdict le = decide(side, Inequality{t, truth}, Mode::extended, opts);
  if (le.kind == Verdict::Kind::refutes) return le;
  Verdict ge = decide(side, Inequality{truth, t}, Mode::extended, opts);
  if (ge.kind == Verdict::Kind::refutes) return ge;
  Verdict out;
  out.kind = Verdict::Kind::entails;
  out.branches = std::move(le.branches);
  for (auto& br : ge.branches) out.branches.push_back(std::move(br));
  return out;
}

}  // namespace rvl
