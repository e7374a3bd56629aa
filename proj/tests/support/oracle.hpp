#pragma once

#include <map>
#include <string>
#include <vector>

#include "rvl/farkas.hpp"
#include "rvl/semantics.hpp"

namespace testsup {

/// Independent brute-force oracles. Candidate points are the minimal-face
/// representatives of every subset of the relevant hyperplanes (Gaussian
/// elimination, free coordinates zeroed), so finite optima and emptiness
/// questions are decided exactly; piecewise structure is handled by
/// collecting all linear pieces of every formula by a direct recursion
/// that never touches the engine's decomposition or elimination code.

/// Oracle-side linear expression.
struct OLin {
  std::map<std::string, rvl::Rat> c;
  rvl::Rat aff;
};

/// All linear pieces of a formula (values only); appends every meet
/// child-piece difference to hyperplanes.
std::vector<OLin> oracle_pieces(const rvl::Formula& f, std::vector<OLin>& hyperplanes);

/// Minimal-face candidate points of the hyperplane family.
std::vector<std::map<std::string, rvl::Rat>> candidate_points(
    const std::vector<OLin>& hyperplanes, const std::vector<std::string>& letters);

/// Entailment oracle at the decide level: region-vertex candidates plus a
/// denominator-bounded grid, all checked by direct evaluation.
bool oracle_entails(const rvl::Theory& t, const rvl::Inequality& goal, rvl::Mode mode);

enum class OracleKind { entailed, infeasible, refuted };

/// Verdict-kind oracle for a linear system and target.
OracleKind oracle_linear(const rvl::LinearSystem& sys, const rvl::LinearForm& target);

}  // namespace testsup
