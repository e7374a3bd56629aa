#pragma once

#include <random>
#include <vector>

#include "rvl/proofs.hpp"
#include "rvl/semantics.hpp"

namespace testsup {

/// Deterministic random generators for formulas, theories, models and
/// checked derivations.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int pick(int lo, int hi);  // inclusive
  rvl::Rat rat(int max_num = 3, int max_den = 3);
  rvl::Rat nonneg_rat(int max_num = 3, int max_den = 3);
  std::string letter(int count = 3);

  /// Random core formula; honors the mode (no constant 1 in basic).
  rvl::Formula formula(int depth, rvl::Mode mode, int letters = 3);
  /// Random formula with at most the given number of meet nodes.
  rvl::Formula formula_bounded_meets(int depth, rvl::Mode mode, int max_meets, int letters = 3);

  /// Model over the given letters (extended: values in [-1,1]).
  rvl::Model model(const std::vector<std::string>& letters, rvl::Mode mode);

  /// Theory with every inequality oriented to hold at the base model, so
  /// the result is satisfiable by construction.
  rvl::Theory satisfiable_theory(const rvl::Model& base, int size, int depth, rvl::Mode mode,
                                 int max_meets = 2);

  /// Random checked derivation; theory generated alongside. Statement
  /// depth stays small; steps <= max_steps.
  rvl::Derivation derivation(rvl::Mode mode, int max_steps, int formula_depth = 3);

 private:
  std::mt19937_64 rng_;
};

}  // namespace testsup
