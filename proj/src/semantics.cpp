#include "rvl/semantics.hpp"

namespace rvl {

Model::Model(std::map<std::string, Rat> assignment, Mode mode)
    : map_(std::move(assignment)), mode_(mode) {
  if (mode_ == Mode::extended) {
    for (const auto& [name, v] : map_) {
      if (v < Rat(-1) || v > Rat(1))
        throw EvalError("extended-mode value out of [-1,1]: " + name + " = " + v.str());
    }
  }
}

const Rat& Model::value(const std::string& letter) const {
  auto it = map_.find(letter);
  if (it == map_.end()) throw EvalError("unassigned letter '" + letter + "'");
  return it->second;
}

Rat eval(const Formula& f, const Model& m) {
  switch (f.kind()) {
    case Formula::Kind::zero:
      return Rat(0);
    case Formula::Kind::one:
      if (m.mode() == Mode::basic) throw ModeError("constant 1 evaluated in basic mode");
      return Rat(1);
    case Formula::Kind::letter:
      return m.value(f.name());
    case Formula::Kind::add:
      return eval(f.left(), m) + eval(f.right(), m);
    case Formula::Kind::meet: {
      Rat a = eval(f.left(), m);
      Rat b = eval(f.right(), m);
      return a <= b ? a : b;
    }
    case Formula::Kind::scale:
      return f.scalar() * eval(f.inner(), m);
  }
  throw EvalError("unreachable");
}

bool satisfies(const Model& m, const Inequality& ineq) {
  return eval(ineq.lhs, m) <= eval(ineq.rhs, m);
}

bool satisfies_theory(const Model& m, const Theory& t) {
  for (const auto& ineq : t)
    if (!satisfies(m, ineq)) return false;
  return true;
}

PolyValue::PolyValue(Rat constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

PolyValue PolyValue::monomial(const Rat& coeff, std::size_t degree) {
  PolyValue p;
  if (coeff.is_zero()) return p;
  p.c_.assign(degree + 1, Rat(0));
  p.c_[degree] = coeff;
  return p;
}

void PolyValue::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyValue operator+(const PolyValue& a, const PolyValue& b) {
  PolyValue out;
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out.c_[i] += b.c_[i];
  out.trim();
  return out;
}

PolyValue operator-(const PolyValue& a, const PolyValue& b) {
  return a + b.scaled(Rat(-1));
}

PolyValue PolyValue::scaled(const Rat& q) const {
  PolyValue out;
  if (q.is_zero()) return out;
  out.c_ = c_;
  for (auto& x : out.c_) x *= q;
  return out;
}

bool poly_leq(const PolyValue& p, const PolyValue& q) {
  PolyValue d = q - p;
  if (d.is_zero()) return true;
  return d.coefficients().back() > Rat(0);
}

PolyValue poly_eval(const Formula& f, const PolyModel& m) {
  switch (f.kind()) {
    case Formula::Kind::zero:
      return PolyValue();
    case Formula::Kind::one:
      throw ModeError("generalized Q[x] semantics is basic-mode only");
    case Formula::Kind::letter: {
      auto it = m.assignment.find(f.name());
      if (it == m.assignment.end()) throw EvalError("unassigned letter '" + f.name() + "'");
      return it->second;
    }
    case Formula::Kind::add:
      return poly_eval(f.left(), m) + poly_eval(f.right(), m);
    case Formula::Kind::meet: {
      PolyValue a = poly_eval(f.left(), m);
      PolyValue b = poly_eval(f.right(), m);
      return poly_leq(a, b) ? a : b;
    }
    case Formula::Kind::scale:
      return poly_eval(f.inner(), m).scaled(f.scalar());
  }
  throw EvalError("unreachable");
}

}  // namespace rvl
