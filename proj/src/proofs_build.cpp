#include <stdexcept>

#include "rvl/proofs.hpp"

namespace rvl {

DerivationBuilder::DerivationBuilder(Theory theory, Mode mode, Fragment fragment) {
  d_.theory = std::move(theory);
  d_.mode = mode;
  d_.fragment = fragment;
}

void DerivationBuilder::push(ProofStep step) { d_.steps.push_back(std::move(step)); }

DerivationBuilder::Ref DerivationBuilder::hyp(std::size_t index) {
  if (index >= d_.theory.size()) throw std::invalid_argument("hyp index out of range");
  push(ProofStep{HypStep{index}, d_.theory[index]});
  return d_.steps.size() - 1;
}

DerivationBuilder::Ref DerivationBuilder::axiom(AxiomName name, AxiomDir dir,
                                                Substitution subst) {
  AxiomId id{name, dir};
  Inequality concl = instantiate_axiom(id, subst, d_.mode);
  push(ProofStep{AxiomStep{id, std::move(subst)}, std::move(concl)});
  return d_.steps.size() - 1;
}

DerivationBuilder::Ref DerivationBuilder::r1(Ref i, Ref j) {
  const Inequality& a = concl(i);
  const Inequality& b = concl(j);
  if (!(a.rhs == b.lhs)) throw std::logic_error("builder r1: premises do not chain");
  push(ProofStep{R1Step{i, j}, Inequality{a.lhs, b.rhs}});
  return d_.steps.size() - 1;
}

DerivationBuilder::Ref DerivationBuilder::r2(Ref i, const Rat& r, Formula xi) {
  if (r < Rat(0)) throw std::logic_error("builder r2: negative r");
  const Inequality& p = concl(i);
  Inequality c{Formula::add(Formula::scale(r, p.lhs), xi),
               Formula::add(Formula::scale(r, p.rhs), xi)};
  push(ProofStep{R2Step{i, r, std::move(xi)}, std::move(c)});
  return d_.steps.size() - 1;
}

DerivationBuilder::Ref DerivationBuilder::r3(Ref i) {
  const Inequality& p = concl(i);
  Inequality c{Formula::meet(p.lhs, Formula::zero()), Formula::meet(p.rhs, Formula::zero())};
  push(ProofStep{R3Step{i}, std::move(c)});
  return d_.steps.size() - 1;
}

DerivationBuilder::Ref DerivationBuilder::chain(std::initializer_list<Ref> refs) {
  auto it = refs.begin();
  if (it == refs.end()) throw std::logic_error("builder chain: empty");
  Ref acc = *it++;
  for (; it != refs.end(); ++it) acc = r1(acc, *it);
  return acc;
}

DerivationBuilder::Ref DerivationBuilder::refl(const Formula& f) { return lin_eq(f, f); }

DerivationBuilder::Ref DerivationBuilder::lin_eq(const Formula& from, const Formula& to) {
  Substitution s;
  s.formulas.emplace("phi", from);
  s.formulas.emplace("psi", to);
  return axiom(AxiomName::nf, AxiomDir::le, std::move(s));
}

DerivationBuilder::Ref DerivationBuilder::add_cong(Ref i, const Formula& c) {
  const Inequality& p = concl(i);
  Formula xi = Formula::scale(Rat(1), c);
  Ref s1 = lin_eq(Formula::add(p.lhs, c), Formula::add(Formula::scale(Rat(1), p.lhs), xi));
  Ref s2 = r2(i, Rat(1), xi);
  Ref s3 = lin_eq(Formula::add(Formula::scale(Rat(1), p.rhs), xi), Formula::add(p.rhs, c));
  return chain({s1, s2, s3});
}

DerivationBuilder::Ref DerivationBuilder::add_cong_left(Ref i, const Formula& c) {
  const Inequality& p = concl(i);
  Formula xi = Formula::scale(Rat(1), c);
  Ref s1 = lin_eq(Formula::add(c, p.lhs), Formula::add(Formula::scale(Rat(1), p.lhs), xi));
  Ref s2 = r2(i, Rat(1), xi);
  Ref s3 = lin_eq(Formula::add(Formula::scale(Rat(1), p.rhs), xi), Formula::add(c, p.rhs));
  return chain({s1, s2, s3});
}

DerivationBuilder::Ref DerivationBuilder::scale_mono(Ref i, const Rat& q) {
  if (q < Rat(0)) throw std::logic_error("scale_mono: negative factor");
  const Inequality& p = concl(i);
  Ref s1 = lin_eq(Formula::scale(q, p.lhs),
                  Formula::add(Formula::scale(q, p.lhs), Formula::zero()));
  Ref s2 = r2(i, q, Formula::zero());
  Ref s3 = lin_eq(Formula::add(Formula::scale(q, p.rhs), Formula::zero()),
                  Formula::scale(q, p.rhs));
  return chain({s1, s2, s3});
}

DerivationBuilder::Ref DerivationBuilder::neg_antitone(Ref i) {
  const Inequality& p = concl(i);
  Formula xi = Formula::add(Formula::scale(Rat(-1), p.lhs), Formula::scale(Rat(-1), p.rhs));
  Ref s1 = lin_eq(Formula::scale(Rat(-1), p.rhs),
                  Formula::add(Formula::scale(Rat(1), p.lhs), xi));
  Ref s2 = r2(i, Rat(1), xi);
  Ref s3 = lin_eq(Formula::add(Formula::scale(Rat(1), p.rhs), xi),
                  Formula::scale(Rat(-1), p.lhs));
  return chain({s1, s2, s3});
}

DerivationBuilder::Ref DerivationBuilder::scale_antitone(Ref i, const Rat& q) {
  if (q >= Rat(0)) throw std::logic_error("scale_antitone: nonnegative factor");
  const Inequality& p = concl(i);
  Ref pos = scale_mono(i, -q);                   // (-q)U <= (-q)V
  Ref na = neg_antitone(pos);                    // -((-q)V) <= -((-q)U)
  Ref s1 = lin_eq(Formula::scale(q, p.rhs),
                  Formula::scale(Rat(-1), Formula::scale(-q, p.rhs)));
  Ref s2 = lin_eq(Formula::scale(Rat(-1), Formula::scale(-q, p.lhs)),
                  Formula::scale(q, p.lhs));
  return chain({s1, na, s2});
}

DerivationBuilder::Ref DerivationBuilder::meet_mono_left(Ref i, const Formula& c) {
  const Inequality& p = concl(i);
  Formula negc = Formula::scale(Rat(-1), c);
  Formula ul = Formula::add(p.lhs, negc);
  Formula vl = Formula::add(p.rhs, negc);
  Ref w1 = add_cong(i, negc);  // U - c <= V - c
  Ref w2 = r3(w1);             // (U-c) /\ 0 <= (V-c) /\ 0
  Ref w3 = add_cong(w2, c);

  Substitution su;
  su.formulas = {{"phi", ul}, {"psi", Formula::zero()}, {"xi", c}};
  Ref a12u = axiom(AxiomName::a12, AxiomDir::le, su);
  Substitution sv;
  sv.formulas = {{"phi", vl}, {"psi", Formula::zero()}, {"xi", c}};
  Ref a12v = axiom(AxiomName::a12, AxiomDir::ge, sv);

  Formula lu = Formula::meet(Formula::add(ul, c), Formula::add(Formula::zero(), c));
  Formula lv = Formula::meet(Formula::add(vl, c), Formula::add(Formula::zero(), c));
  Ref pre = lin_eq(Formula::meet(p.lhs, c), lu);
  Ref post = lin_eq(lv, Formula::meet(p.rhs, c));
  return chain({pre, a12u, w3, a12v, post});
}

DerivationBuilder::Ref DerivationBuilder::meet_mono_right(Ref i, const Formula& c) {
  const Inequality& p = concl(i);
  Substitution s1;
  s1.formulas = {{"phi", c}, {"psi", p.lhs}};
  Ref a = axiom(AxiomName::a10, AxiomDir::le, s1);  // c /\ U <= U /\ c
  Ref b = meet_mono_left(i, c);
  Substitution s2;
  s2.formulas = {{"phi", p.rhs}, {"psi", c}};
  Ref d = axiom(AxiomName::a10, AxiomDir::le, s2);  // V /\ c <= c /\ V
  return chain({a, b, d});
}

DerivationBuilder::Ref DerivationBuilder::glb(Ref i, Ref j) {
  const Inequality& pi = concl(i);
  const Inequality& pj = concl(j);
  if (!(pi.lhs == pj.lhs)) throw std::logic_error("glb: premises have different left sides");
  Substitution s;
  s.formulas = {{"phi", pi.lhs}};
  Ref diag = axiom(AxiomName::a9, AxiomDir::ge, s);  // x <= x /\ x
  Ref l = meet_mono_left(i, pi.lhs);                 // x /\ x <= A /\ x
  Ref r = meet_mono_right(j, pi.rhs);                // A /\ x <= A /\ B
  return chain({diag, l, r});
}

DerivationBuilder::Ref DerivationBuilder::lub(Ref i, Ref j) {
  const Inequality& pi = concl(i);
  const Inequality& pj = concl(j);
  if (!(pi.rhs == pj.rhs)) throw std::logic_error("lub: premises have different right sides");
  Ref ni = neg_antitone(i);  // -x <= -A
  Ref nj = neg_antitone(j);  // -x <= -B
  Ref g = glb(ni, nj);       // -x <= -A /\ -B
  Ref n = neg_antitone(g);   // -(-A /\ -B) <= -(-x)
  Ref fin = lin_eq(Formula::scale(Rat(-1), Formula::scale(Rat(-1), pi.rhs)), pi.rhs);
  return chain({n, fin});
}

DerivationBuilder::Ref DerivationBuilder::join_ub_left(const Formula& a, const Formula& b) {
  Formula na = Formula::scale(Rat(-1), a);
  Formula nb = Formula::scale(Rat(-1), b);
  Substitution s1;
  s1.formulas = {{"phi", na}, {"psi", nb}};
  Ref m1 = axiom(AxiomName::a10, AxiomDir::le, s1);  // -a /\ -b <= -b /\ -a
  Substitution s2;
  s2.formulas = {{"phi", nb}, {"psi", na}};
  Ref m2 = axiom(AxiomName::a14, AxiomDir::le, s2);  // -b /\ -a <= -a
  Ref m = chain({m1, m2});
  Ref n = neg_antitone(m);  // -(-a) <= -( -a /\ -b ) which is a \/ b
  Ref pre = lin_eq(a, Formula::scale(Rat(-1), na));
  return chain({pre, n});
}

DerivationBuilder::Ref DerivationBuilder::join_ub_right(const Formula& a, const Formula& b) {
  Formula na = Formula::scale(Rat(-1), a);
  Formula nb = Formula::scale(Rat(-1), b);
  Substitution s;
  s.formulas = {{"phi", na}, {"psi", nb}};
  Ref m = axiom(AxiomName::a14, AxiomDir::le, s);  // -a /\ -b <= -b
  Ref n = neg_antitone(m);
  Ref pre = lin_eq(b, Formula::scale(Rat(-1), nb));
  return chain({pre, n});
}

DerivationBuilder::Ref DerivationBuilder::embed(const Derivation& d) {
  if (d.mode != d_.mode) throw std::logic_error("embed: mode mismatch");
  if (d.theory.size() != d_.theory.size()) throw std::logic_error("embed: theory mismatch");
  for (std::size_t i = 0; i < d.theory.size(); ++i)
    if (!(d.theory[i] == d_.theory[i])) throw std::logic_error("embed: theory mismatch");
  if (d.steps.empty()) throw std::logic_error("embed: empty derivation");
  std::size_t base = d_.steps.size();
  for (const auto& s : d.steps) {
    ProofStep copy = s;
    if (std::holds_alternative<R1Step>(copy.rule)) {
      auto r = std::get<R1Step>(copy.rule);
      copy.rule = R1Step{r.i + base, r.j + base};
    } else if (std::holds_alternative<R2Step>(copy.rule)) {
      auto r = std::get<R2Step>(copy.rule);
      copy.rule = R2Step{r.i + base, r.r, r.xi};
    } else if (std::holds_alternative<R3Step>(copy.rule)) {
      auto r = std::get<R3Step>(copy.rule);
      copy.rule = R3Step{r.i + base};
    }
    push(std::move(copy));
  }
  return d_.steps.size() - 1;
}

Derivation DerivationBuilder::take(Ref final_step) {
  if (final_step + 1 != d_.steps.size()) {
    // Close with a reflexivity bridge so the requested step is the
    // conclusion; the builder stays usable for further extraction.
    Ref id = refl(concl(final_step).rhs);
    final_step = r1(final_step, id);
  }
  Derivation out = d_;
  out.steps.resize(final_step + 1);
  return out;
}

}  // namespace rvl
