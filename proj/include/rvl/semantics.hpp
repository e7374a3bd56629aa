#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvl/formula.hpp"

namespace rvl {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rational-valued structure. Extended-mode values must lie in [-1, 1];
/// out-of-range values are rejected, not clamped.
class Model {
 public:
  Model(std::map<std::string, Rat> assignment, Mode mode);

  Mode mode() const { return mode_; }
  const std::map<std::string, Rat>& assignment() const { return map_; }
  bool has(const std::string& letter) const { return map_.count(letter) != 0; }
  const Rat& value(const std::string& letter) const;

 private:
  std::map<std::string, Rat> map_;
  Mode mode_;
};

Rat eval(const Formula& f, const Model& m);
bool satisfies(const Model& m, const Inequality& ineq);
bool satisfies_theory(const Model& m, const Theory& t);

/// Element of Q[x]: coefficients[i] is the coefficient of x^i, no trailing
/// zeros, empty = 0. Ordered by the order generated by r < x for all
/// rational r, i.e. by the sign of the leading coefficient.
class PolyValue {
 public:
  PolyValue() = default;
  explicit PolyValue(Rat constant);
  static PolyValue monomial(const Rat& coeff, std::size_t degree);

  const std::vector<Rat>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  friend PolyValue operator+(const PolyValue& a, const PolyValue& b);
  friend PolyValue operator-(const PolyValue& a, const PolyValue& b);
  PolyValue scaled(const Rat& q) const;
  friend bool operator==(const PolyValue& a, const PolyValue& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

/// p <= q in the order induced by r < x.
bool poly_leq(const PolyValue& p, const PolyValue& q);

struct PolyModel {
  std::map<std::string, PolyValue> assignment;
};

/// Basic mode only (the generalized structure has no distinguished unit
/// interval for the constant 1).
PolyValue poly_eval(const Formula& f, const PolyModel& m);

}  // namespace rvl
