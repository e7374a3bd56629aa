#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvl/formula.hpp"

namespace rvl {

struct NotLinearError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Normal form of a meet-free formula: rational coefficients over distinct
/// letters plus an affine component (contributed by the constant 1, so
/// always 0 in basic mode). No zero entries are stored.
struct LinearForm {
  std::map<std::string, Rat> coeffs;
  Rat affine;

  bool is_zero() const { return coeffs.empty() && affine.is_zero(); }
  Rat coeff(const std::string& letter) const {
    auto it = coeffs.find(letter);
    return it == coeffs.end() ? Rat(0) : it->second;
  }
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.affine == b.affine && a.coeffs == b.coeffs;
  }
};

/// Normal form of a meet-free formula; throws NotLinearError on a meet node.
LinearForm linearize(const Formula& f);

LinearForm lf_add(const LinearForm& a, const LinearForm& b);
LinearForm lf_sub(const LinearForm& a, const LinearForm& b);
LinearForm lf_scale(const Rat& q, const LinearForm& a);
LinearForm lf_neg(const LinearForm& a);

/// Evaluates the form at an assignment (letters default to nothing: all
/// letters of the form must be present).
Rat lf_eval(const LinearForm& a, const std::map<std::string, Rat>& assignment);

/// Emits sum(a_i P_i) (+ a*1 when the affine part is nonzero), letters in
/// the given order; letters of the form not listed are an error.
/// linearize(lf_to_formula(a, order)) == a.
Formula lf_to_formula(const LinearForm& a, const std::vector<std::string>& letter_order);

/// Convenience: letters in lexicographic order.
Formula lf_to_formula(const LinearForm& a);

}  // namespace rvl
