#pragma once

#include "rvl/proofs.hpp"

namespace rvl::detail {

struct EqRefs {
  DerivationBuilder::Ref le, ge;
};

/// phi + psi = phi /\ psi + phi \/ psi, emitted into the given builder.
EqRefs b_sum_meet_join(DerivationBuilder& b, const Formula& phi, const Formula& psi);

/// phi = phi+ - phi-.
EqRefs b_pos_neg_split(DerivationBuilder& b, const Formula& phi);

/// phi+ /\ phi- = 0.
EqRefs b_pos_meet_neg_zero(DerivationBuilder& b, const Formula& phi);

}  // namespace rvl::detail
