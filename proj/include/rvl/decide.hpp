#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rvl/farkas.hpp"
#include "rvl/regions.hpp"
#include "rvl/semantics.hpp"

namespace rvl {

/// One sign branch of the joint decomposition, with the linear system it
/// produced and the per-branch verdict (entailed or infeasible when the
/// overall verdict is Entails).
struct BranchOutcome {
  std::string signs;
  LinearSystem system;
  LinearForm target;
  LinearVerdict verdict;
};

struct Verdict {
  enum class Kind { entails, refutes };
  Kind kind;
  std::vector<BranchOutcome> branches;  // kind == entails: every branch
  std::optional<Model> countermodel;    // kind == refutes
  std::string refuting_signs;
};

struct DecideOptions {
  /// Solve branches concurrently (OpenMP). The result is identical to the
  /// serial reference: all branches are collected and the first refuting
  /// branch in sign order wins.
  bool parallel = false;
};

/// Finite-theory entailment: rewrites goal and hypotheses as 0 <= rhs-lhs,
/// splits every meet node into sign branches, and runs the certificate
/// Farkas engine per branch (extended mode adds the rows -1 <= P <= 1 for
/// every occurring letter). Deterministic.
Verdict decide(const Theory& t, const Inequality& goal, Mode mode, DecideOptions opts = {});

struct ConsistencyReport {
  Mode mode;
  bool consistent;
  std::optional<Model> witness;                          // extended, consistent
  std::vector<BranchOutcome> branches;                   // extended, inconsistent
  std::vector<std::pair<std::string, bool>> forced_zero; // basic: letter -> forced to 0
};

/// Extended mode: T is consistent iff it does not entail 0 <= -1
/// (equivalently, iff it has a model). Basic mode: every theory holds in
/// the constant-0 model; the report instead says, per letter, whether the
/// theory forces that letter to 0.
ConsistencyReport consistent(const Theory& t, Mode mode);

/// Rational interval, possibly unbounded or empty.
struct QInterval {
  bool empty = false;
  std::optional<Rat> lo, hi;
  bool lo_strict = false, hi_strict = false;

  bool contains(const Rat& r) const;
};

/// The exact set { r in Q : T |= 0 <= c + r*d } (an interval). Computed per
/// branch by dualizing the entailment through the Farkas identities into a
/// linear system over the multipliers and r, then projecting out the
/// multipliers.
QInterval parametric_interval(const Theory& t, const Formula& c, const Formula& d, Mode mode);

/// Some r in Q+ with T |= phi <= r*xi, or nothing if no rational r works.
std::optional<Rat> bound_by_unit(const Theory& t, const Formula& phi, const Formula& xi,
                                 Mode mode);

struct ArchimedeanReport {
  bool forall_r;         // T |= r*phi <= psi for every r >= 0
  bool r_zero_instance;  // the r = 0 instance T |= 0 <= psi
  bool neg_phi;          // T |= 0 <= -phi
};

/// Checks the Archimedean implication data for (phi, psi): whether every
/// nonnegative rational instance r*phi <= psi is entailed, and whether -phi
/// is. For finite theories forall_r implies neg_phi.
ArchimedeanReport archimedean_pair(const Theory& t, const Formula& phi, const Formula& psi,
                                   Mode mode);

}  // namespace rvl
