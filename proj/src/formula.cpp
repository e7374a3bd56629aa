#include "rvl/formula.hpp"

#include <algorithm>
#include <set>

namespace rvl {

Formula Formula::zero() {
  static const Formula z{std::make_shared<const Node>(Kind::zero)};
  return z;
}

Formula Formula::one() {
  static const Formula o{std::make_shared<const Node>(Kind::one)};
  return o;
}

Formula Formula::letter(std::string name) {
  if (name.empty()) throw std::invalid_argument("letter: empty name");
  auto n = std::make_shared<Node>(Kind::letter);
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::add(Formula l, Formula r) {
  auto n = std::make_shared<Node>(Kind::add);
  n->a = std::move(l);
  n->b = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::meet(Formula l, Formula r) {
  auto n = std::make_shared<Node>(Kind::meet);
  n->a = std::move(l);
  n->b = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::scale(Rat q, Formula inner) {
  auto n = std::make_shared<Node>(Kind::scale);
  n->scalar = std::move(q);
  n->a = std::move(inner);
  return Formula(std::move(n));
}

bool Formula::equal(const Formula& x, const Formula& y) {
  if (x.n_ == y.n_) return true;
  if (x.n_->kind != y.n_->kind) return false;
  switch (x.n_->kind) {
    case Kind::zero:
    case Kind::one:
      return true;
    case Kind::letter:
      return x.n_->name == y.n_->name;
    case Kind::scale:
      return x.n_->scalar == y.n_->scalar && equal(x.n_->a, y.n_->a);
    case Kind::add:
    case Kind::meet:
      return equal(x.n_->a, y.n_->a) && equal(x.n_->b, y.n_->b);
  }
  return false;
}

int Formula::compare(const Formula& x, const Formula& y) {
  if (x.n_ == y.n_) return 0;
  if (x.n_->kind != y.n_->kind)
    return static_cast<int>(x.n_->kind) < static_cast<int>(y.n_->kind) ? -1 : 1;
  switch (x.n_->kind) {
    case Kind::zero:
    case Kind::one:
      return 0;
    case Kind::letter:
      return x.n_->name.compare(y.n_->name) < 0 ? -1 : (x.n_->name == y.n_->name ? 0 : 1);
    case Kind::scale: {
      if (x.n_->scalar != y.n_->scalar) return x.n_->scalar < y.n_->scalar ? -1 : 1;
      return compare(x.n_->a, y.n_->a);
    }
    case Kind::add:
    case Kind::meet: {
      int c = compare(x.n_->a, y.n_->a);
      if (c != 0) return c;
      return compare(x.n_->b, y.n_->b);
    }
  }
  return 0;
}

namespace sugar {

Formula neg(Formula f) { return Formula::scale(Rat(-1), std::move(f)); }

Formula sub(Formula f, Formula g) { return Formula::add(std::move(f), neg(std::move(g))); }

Formula join(Formula f, Formula g) {
  return neg(Formula::meet(neg(std::move(f)), neg(std::move(g))));
}

Formula pos(Formula f) { return join(Formula::zero(), std::move(f)); }

Formula negp(Formula f) { return join(Formula::zero(), neg(std::move(f))); }

Formula abs(Formula f) {
  Formula n = neg(f);
  return join(std::move(f), std::move(n));
}

Formula lit(const Rat& q, Mode mode) {
  if (q.is_zero()) return Formula::zero();
  if (mode == Mode::basic)
    throw ModeError("numeric literal '" + q.str() + "' requires extended mode");
  return Formula::scale(q, Formula::one());
}

}  // namespace sugar

namespace {

void collect_letters(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::zero:
    case Formula::Kind::one:
      return;
    case Formula::Kind::letter:
      out.insert(f.name());
      return;
    case Formula::Kind::scale:
      collect_letters(f.inner(), out);
      return;
    case Formula::Kind::add:
    case Formula::Kind::meet:
      collect_letters(f.left(), out);
      collect_letters(f.right(), out);
      return;
  }
}

}  // namespace

std::vector<std::string> letters_of(const Formula& f) {
  std::set<std::string> s;
  collect_letters(f, s);
  return {s.begin(), s.end()};
}

std::vector<std::string> letters_of(const Theory& t) {
  std::set<std::string> s;
  for (const auto& ineq : t) {
    collect_letters(ineq.lhs, s);
    collect_letters(ineq.rhs, s);
  }
  return {s.begin(), s.end()};
}

std::vector<std::string> letters_of(const Theory& t, const Inequality& goal) {
  std::set<std::string> s;
  for (const auto& ineq : t) {
    collect_letters(ineq.lhs, s);
    collect_letters(ineq.rhs, s);
  }
  collect_letters(goal.lhs, s);
  collect_letters(goal.rhs, s);
  return {s.begin(), s.end()};
}

bool uses_one(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::one:
      return true;
    case Formula::Kind::zero:
    case Formula::Kind::letter:
      return false;
    case Formula::Kind::scale:
      return uses_one(f.inner());
    case Formula::Kind::add:
    case Formula::Kind::meet:
      return uses_one(f.left()) || uses_one(f.right());
  }
  return false;
}

std::size_t meet_count(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::zero:
    case Formula::Kind::one:
    case Formula::Kind::letter:
      return 0;
    case Formula::Kind::scale:
      return meet_count(f.inner());
    case Formula::Kind::add:
    case Formula::Kind::meet:
      return meet_count(f.left()) + meet_count(f.right()) +
             (f.kind() == Formula::Kind::meet ? 1 : 0);
  }
  return 0;
}

void require_mode(const Formula& f, Mode mode) {
  if (mode == Mode::basic && uses_one(f))
    throw ModeError("constant 1 is not available in basic mode");
}

}  // namespace rvl
