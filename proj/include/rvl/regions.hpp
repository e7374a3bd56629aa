#pragma once

#include <string>
#include <vector>

#include "rvl/linear.hpp"

namespace rvl {

/// One sign branch: inside the region where every guard is >= 0, the source
/// formula equals the linear value. `signs` records the branch choice at
/// each meet node ('+' = right operand is the smaller, '-' = left), in
/// left-to-right meet order.
struct GuardedPiece {
  std::vector<LinearForm> guards;
  LinearForm value;
  std::string signs;
};

struct RegionDecomposition {
  std::vector<GuardedPiece> pieces;
  Formula source;
};

/// Sign case split at every meet node. Branch order is deterministic:
/// positive sign first, depth-first, so pieces are lexicographic in their
/// sign strings. The two sign branches of every guard are both emitted, so
/// the guard regions cover every rational assignment. With prune set,
/// pieces whose guard system has no rational solution are dropped.
RegionDecomposition decompose(const Formula& f, bool prune = false);

/// 2^(number of meet nodes); decompose emits at most this many pieces.
mpz_class piece_count_bound(const Formula& f);

}  // namespace rvl
