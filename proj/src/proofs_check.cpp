#include "rvl/proofs.hpp"

namespace rvl {

namespace {

struct StepFailure {
  std::string reason;
};

void verify_step(const Derivation& d, std::size_t k) {
  const ProofStep& step = d.steps[k];
  auto fail = [](std::string reason) { throw StepFailure{std::move(reason)}; };

  if (std::holds_alternative<HypStep>(step.rule)) {
    const auto& h = std::get<HypStep>(step.rule);
    if (h.index >= d.theory.size()) fail("hypothesis index out of range");
    if (!(step.conclusion == d.theory[h.index]))
      fail("conclusion differs from the cited hypothesis");
    return;
  }
  if (std::holds_alternative<AxiomStep>(step.rule)) {
    const auto& a = std::get<AxiomStep>(step.rule);
    Inequality expected{Formula::zero(), Formula::zero()};
    try {
      expected = instantiate_axiom(a.id, a.subst, d.mode);
    } catch (const std::invalid_argument& e) {
      fail(std::string("bad axiom instance: ") + e.what());
    }
    if (!(step.conclusion == expected))
      fail("conclusion differs from the instantiated axiom " + axiom_id_str(a.id));
    return;
  }
  if (std::holds_alternative<R1Step>(step.rule)) {
    const auto& r = std::get<R1Step>(step.rule);
    if (r.i >= k || r.j >= k) fail("r1 reference is not backward");
    const Inequality& a = d.steps[r.i].conclusion;
    const Inequality& b = d.steps[r.j].conclusion;
    if (!(a.rhs == b.lhs)) fail("r1 premises do not chain");
    if (!(step.conclusion.lhs == a.lhs && step.conclusion.rhs == b.rhs))
      fail("r1 conclusion is not the chained inequality");
    return;
  }
  if (std::holds_alternative<R2Step>(step.rule)) {
    if (d.fragment == Fragment::mp) fail("fragment mp admits rule r1 only");
    const auto& r = std::get<R2Step>(step.rule);
    if (r.i >= k) fail("r2 reference is not backward");
    if (r.r < Rat(0)) fail("r2 side condition: r must be a nonnegative rational");
    const Inequality& p = d.steps[r.i].conclusion;
    Inequality expected{Formula::add(Formula::scale(r.r, p.lhs), r.xi),
                        Formula::add(Formula::scale(r.r, p.rhs), r.xi)};
    if (!(step.conclusion == expected)) fail("r2 conclusion shape mismatch");
    return;
  }
  const auto& r = std::get<R3Step>(step.rule);
  if (d.fragment != Fragment::full) fail("rule r3 requires the full fragment");
  if (r.i >= k) fail("r3 reference is not backward");
  const Inequality& p = d.steps[r.i].conclusion;
  Inequality expected{Formula::meet(p.lhs, Formula::zero()),
                      Formula::meet(p.rhs, Formula::zero())};
  if (!(step.conclusion == expected)) fail("r3 conclusion shape mismatch");
}

}  // namespace

CheckResult check(const Derivation& d) {
  CheckResult res;
  if (d.steps.empty()) {
    res.ok = false;
    res.reason = "derivation has no steps";
    return res;
  }
  for (const auto& ineq : d.theory) {
    if (d.mode == Mode::basic && (uses_one(ineq.lhs) || uses_one(ineq.rhs))) {
      res.ok = false;
      res.reason = "theory uses the constant 1 in basic mode";
      return res;
    }
  }
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    try {
      if (d.mode == Mode::basic &&
          (uses_one(d.steps[k].conclusion.lhs) || uses_one(d.steps[k].conclusion.rhs)))
        throw StepFailure{"conclusion uses the constant 1 in basic mode"};
      verify_step(d, k);
    } catch (const StepFailure& f) {
      res.ok = false;
      res.step = k;
      res.reason = f.reason;
      return res;
    }
  }
  return res;
}

}  // namespace rvl
