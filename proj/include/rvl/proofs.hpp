#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rvl/formula.hpp"
#include "rvl/syntax.hpp"

namespace rvl {

/// Axiom schemas of the calculus. a1-a15 are the vector-space and lattice
/// axioms (a15 extended-mode only, per proposition letter). nf is the
/// normal-form schema: phi = psi whenever the two trees have identical
/// recursive linear normal forms (scale/sum skeletons canonicalized, meets
/// kept as atoms with canonicalized children). a5 is carried as a full
/// equality 0*phi = 0.
enum class AxiomName {
  a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12, a13, a14, a15, nf
};
enum class AxiomDir { le, ge };

struct AxiomId {
  AxiomName name;
  AxiomDir dir;
};

std::string axiom_id_str(const AxiomId& id);
std::optional<AxiomName> parse_axiom_name(const std::string& s);

/// Formula metavariables: "phi", "psi", "xi" (and "P" for a15, which must
/// be bound to a letter). Scalar metavariables: "r", "s".
struct Substitution {
  std::map<std::string, Formula> formulas;
  std::map<std::string, Rat> scalars;
};

/// Instantiates the schema at the substitution and returns the resulting
/// inequality. Throws std::invalid_argument on missing or extraneous
/// bindings and on side-condition violations (a13 needs r >= 0, a15 needs
/// a letter and extended mode, nf needs equal normal forms).
Inequality instantiate_axiom(const AxiomId& id, const Substitution& subst, Mode mode);

/// The normal-form functor behind the nf schema.
Formula nf_canon(const Formula& f);

enum class Fragment { mp, lin, full };
std::string fragment_str(Fragment f);

struct HypStep {
  std::size_t index;  // 0-based into the theory
};
struct AxiomStep {
  AxiomId id;
  Substitution subst;
};
struct R1Step {
  std::size_t i, j;  // 0-based backward refs: i concludes a<=b, j b<=c
};
struct R2Step {
  std::size_t i;
  Rat r;  // must be >= 0
  Formula xi;
};
struct R3Step {
  std::size_t i;
};

struct ProofStep {
  std::variant<HypStep, AxiomStep, R1Step, R2Step, R3Step> rule;
  Inequality conclusion;
};

struct Derivation {
  Theory theory;
  Mode mode = Mode::basic;
  Fragment fragment = Fragment::full;
  std::vector<ProofStep> steps;
  const Inequality& conclusion() const { return steps.back().conclusion; }
};

struct CheckResult {
  bool ok = true;
  std::size_t step = 0;  // failing step (0-based) when not ok
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Verifies every step: axiom instantiations by tree comparison, rule
/// conclusions recomputed syntactically, fragment restrictions (mp: r1
/// only; lin: r1 and r2), backward references, mode discipline.
CheckResult check(const Derivation& d);

/// Line-oriented proof files:
///   mode extended|basic
///   fragment mp|lin|full
///   hyp <k>: <inequality>
///   <n>: hyp <k> ==> <inequality>
///   <n>: axiom <id>.<le|ge> [phi := <formula>; r := <rational>; ...] ==> <inequality>
///   <n>: r1 <i> <j> ==> <inequality>
///   <n>: r2 <i> r=<rational> xi=<formula> ==> <inequality>
///   <n>: r3 <i> ==> <inequality>
Derivation parse_proof_file(const std::string& text);
std::string print_proof_file(const Derivation& d);

/// Appends steps with their conclusions computed from the rule shapes, so
/// the result passes check by construction. The derived helpers package
/// the congruence plumbing used throughout the library.
class DerivationBuilder {
 public:
  using Ref = std::size_t;

  DerivationBuilder(Theory theory, Mode mode, Fragment fragment);

  Ref hyp(std::size_t index);
  Ref axiom(AxiomName name, AxiomDir dir, Substitution subst);
  Ref r1(Ref i, Ref j);
  Ref r2(Ref i, const Rat& r, Formula xi);
  Ref r3(Ref i);

  const Inequality& concl(Ref i) const { return d_.steps[i].conclusion; }
  Mode mode() const { return d_.mode; }

  /// Chained transitivity; the list must link up.
  Ref chain(std::initializer_list<Ref> refs);
  /// f <= f.
  Ref refl(const Formula& f);
  /// from <= to when nf_canon(from) == nf_canon(to).
  Ref lin_eq(const Formula& from, const Formula& to);
  /// From U <= V: U + c <= V + c.
  Ref add_cong(Ref i, const Formula& c);
  /// From U <= V: c + U <= c + V.
  Ref add_cong_left(Ref i, const Formula& c);
  /// From U <= V, q >= 0: qU <= qV.
  Ref scale_mono(Ref i, const Rat& q);
  /// From U <= V, q < 0: qV <= qU.
  Ref scale_antitone(Ref i, const Rat& q);
  /// From U <= V: -V <= -U.
  Ref neg_antitone(Ref i);
  /// From U <= V: U /\ c <= V /\ c.
  Ref meet_mono_left(Ref i, const Formula& c);
  /// From U <= V: c /\ U <= c /\ V.
  Ref meet_mono_right(Ref i, const Formula& c);
  /// From x <= A and x <= B (same x): x <= A /\ B.
  Ref glb(Ref i, Ref j);
  /// From A <= x and B <= x (same x): A \/ B <= x.
  Ref lub(Ref i, Ref j);
  /// a <= a \/ b.
  Ref join_ub_left(const Formula& a, const Formula& b);
  /// b <= a \/ b.
  Ref join_ub_right(const Formula& a, const Formula& b);

  /// Appends all steps of a derivation over the same theory and mode,
  /// offsetting its internal references; returns its final step.
  Ref embed(const Derivation& d);

  /// Finishes the derivation with the given step as conclusion.
  Derivation take(Ref final_step);

 private:
  void push(ProofStep step);
  Derivation d_;
};

/// Both directions of a proved equality.
struct EqDerivation {
  Derivation le, ge;
};

/// {r phi + xi <= r psi + xi} |-lin phi <= psi, for r > 0.
Derivation invert_positive_scale(const Formula& phi, const Formula& psi, const Formula& xi,
                                 const Rat& r, Mode mode);
/// {phi <= psi} |- phi /\ xi <= psi /\ xi.
Derivation meet_mono(const Formula& phi, const Formula& psi, const Formula& xi, Mode mode);
/// {xi <= phi, xi <= psi} |- xi <= phi /\ psi.
Derivation meet_glb(const Formula& xi, const Formula& phi, const Formula& psi, Mode mode);
/// {phi <= xi, psi <= xi} |- phi \/ psi <= xi.
Derivation join_lub(const Formula& phi, const Formula& psi, const Formula& xi, Mode mode);

/// phi + psi = phi /\ psi + phi \/ psi.
EqDerivation sum_meet_join(const Formula& phi, const Formula& psi, Mode mode);
/// phi = phi+ - phi-.
EqDerivation pos_neg_split(const Formula& phi, Mode mode);
/// phi+ /\ phi- = 0.
EqDerivation pos_meet_neg_zero(const Formula& phi, Mode mode);
/// |phi| = phi+ + phi-.
EqDerivation abs_decomposition(const Formula& phi, Mode mode);

/// Extended mode: an integer n with checked -n <= phi <= n.
struct ExtendedBound {
  mpz_class n;
  Derivation lower, upper;
};
ExtendedBound extended_bound(const Formula& phi);

/// Deduction theorem, by induction on the input derivation. The designated
/// hypothesis theory[theta_index] must be of the bare form 0 <= theta. For
/// full-fragment inputs the output concludes phi + (-r)theta- <= psi; for
/// lin (and mp) inputs the lin variant phi + r theta <= psi is produced,
/// with fragment lin.
struct DeductionResult {
  Rat r;
  Derivation derivation;
};
DeductionResult deduction_transform(const Derivation& d, std::size_t theta_index);

/// Cut elimination: from T, phi |- 0 <= psi and T, -phi |- 0 <= psi builds
/// T |- 0 <= psi. pos_hyp / neg_hyp designate the hypotheses 0 <= phi and
/// 0 <= -phi; the remaining theories must agree. The output fragment is
/// the weaker of the two inputs' (lin inputs stay lin).
Derivation cut_eliminate(const Derivation& d_pos, std::size_t pos_hyp, const Derivation& d_neg,
                         std::size_t neg_hyp);

}  // namespace rvl
