#pragma once

#include <map>
#include <string>
#include <vector>

#include "rvl/linear.hpp"

namespace rvl {

/// Hypotheses are rows 0 <= v_i . x + r_i over the letters in letter_order.
struct LinearSystem {
  std::vector<LinearForm> hypotheses;
  std::vector<std::string> letter_order;
};

/// Nonnegative multipliers with sum(q_i v_i) = u and sum(q_i r_i) <= s for
/// the target 0 <= u . x + s they certify.
struct FarkasCertificate {
  std::vector<Rat> multipliers;
};

/// Nonnegative multipliers with sum(q_i v_i) = 0 and sum(q_i r_i) < 0.
struct InfeasibilityCertificate {
  std::vector<Rat> multipliers;
};

struct LinearVerdict {
  enum class Kind { entailed, infeasible, refuted };
  Kind kind;
  FarkasCertificate certificate;            // kind == entailed
  InfeasibilityCertificate infeasibility;   // kind == infeasible
  std::map<std::string, Rat> witness;       // kind == refuted
};

/// Decides whether every rational point of the system satisfies
/// 0 <= target. Entailed and Infeasible verdicts carry certificates that
/// are re-verified by exact arithmetic before being returned; a Refuted
/// verdict carries an exact witness (all letters of letter_order assigned).
/// Fourier-Motzkin elimination in letter_order order; deterministic.
LinearVerdict entails_linear(const LinearSystem& sys, const LinearForm& target);

/// Exact check of the defining identities. Throws std::invalid_argument on
/// a multiplier-count mismatch.
bool verify_certificate(const LinearSystem& sys, const LinearForm& target,
                        const FarkasCertificate& cert);
bool verify_certificate(const LinearSystem& sys, const InfeasibilityCertificate& cert);

/// True iff the hypothesis rows have a common rational solution.
bool is_feasible(const LinearSystem& sys);

/// "CERT q1 q2 ... qn" (reduced rationals, hypothesis order).
std::string print_certificate(const std::vector<Rat>& multipliers);

/// Raw row over an index space fixed by the caller: 0 <= c . x + aff, or
/// 0 < c . x + aff when strict.
struct FmRow {
  std::vector<Rat> c;
  Rat aff;
  bool strict = false;
};

/// Projects out the listed variables (eliminated columns end up zero in the
/// surviving rows). No certificate tracking.
std::vector<FmRow> fm_project(std::vector<FmRow> rows, const std::vector<std::size_t>& eliminate);

}  // namespace rvl
