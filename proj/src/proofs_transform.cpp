#include <stdexcept>

#include "proofs_detail.hpp"

namespace rvl {

namespace {

using Ref = DerivationBuilder::Ref;
using F = Formula;

struct TransformState {
  DerivationBuilder* b;
  Formula theta;
  Formula theta_neg_part;  // theta-
  bool full;               // full variant: phi - r theta- <= psi; lin: phi + r theta <= psi

  Formula discount(const Rat& r) const {
    return full ? F::scale(-r, theta_neg_part) : F::scale(r, theta);
  }
};

struct Transformed {
  Rat r;
  Ref ref = 0;
};

/// 0 <= theta-.
Ref theta_neg_nonneg(DerivationBuilder& b, const Formula& theta) {
  return b.join_ub_left(F::zero(), F::scale(Rat(-1), theta));
}

Transformed transform_step(TransformState& st, const Derivation& d, std::size_t k,
                           std::size_t theta_index, const std::vector<Transformed>& done) {
  DerivationBuilder& b = *st.b;
  const ProofStep& step = d.steps[k];
  const Inequality& concl = step.conclusion;

  if (std::holds_alternative<HypStep>(step.rule)) {
    std::size_t idx = std::get<HypStep>(step.rule).index;
    if (idx == theta_index) {
      if (st.full) {
        // 0 + (-1)theta- <= theta+ + (-1)theta- <= theta.
        Ref up = theta_neg_nonneg(b, st.theta);
        Ref c = b.add_cong(up, st.discount(Rat(1)));
        Ref ge = detail::b_pos_neg_split(b, st.theta).ge;
        return {Rat(1), b.chain({c, ge})};
      }
      return {Rat(1), b.lin_eq(F::add(F::zero(), st.discount(Rat(1))), st.theta)};
    }
    std::size_t shifted = idx > theta_index ? idx - 1 : idx;
    Ref pre = b.lin_eq(F::add(concl.lhs, st.discount(Rat(0))), concl.lhs);
    return {Rat(0), b.chain({pre, b.hyp(shifted)})};
  }

  if (std::holds_alternative<AxiomStep>(step.rule)) {
    const auto& a = std::get<AxiomStep>(step.rule);
    Ref pre = b.lin_eq(F::add(concl.lhs, st.discount(Rat(0))), concl.lhs);
    return {Rat(0), b.chain({pre, b.axiom(a.id.name, a.id.dir, a.subst)})};
  }

  if (std::holds_alternative<R1Step>(step.rule)) {
    const auto& r = std::get<R1Step>(step.rule);
    const Transformed& ti = done[r.i];
    const Transformed& tj = done[r.j];
    Rat sum = ti.r + tj.r;
    const Inequality& ci = d.steps[r.i].conclusion;
    Ref pre = b.lin_eq(F::add(ci.lhs, st.discount(sum)),
                       F::add(F::add(ci.lhs, st.discount(ti.r)), st.discount(tj.r)));
    Ref lift = b.add_cong(ti.ref, st.discount(tj.r));
    return {sum, b.chain({pre, lift, tj.ref})};
  }

  if (std::holds_alternative<R2Step>(step.rule)) {
    const auto& r = std::get<R2Step>(step.rule);
    const Transformed& ti = done[r.i];
    const Inequality& prem = d.steps[r.i].conclusion;
    Rat weight = r.r * ti.r;
    F lifted = F::add(prem.lhs, st.discount(ti.r));
    Ref pre = b.lin_eq(F::add(concl.lhs, st.discount(weight)),
                       F::add(F::scale(r.r, lifted), r.xi));
    return {weight, b.chain({pre, b.r2(ti.ref, r.r, r.xi)})};
  }

  // r3: shift the discount through the meet with 0.
  const auto& r = std::get<R3Step>(step.rule);
  const Transformed& ti = done[r.i];
  const Inequality& prem = d.steps[r.i].conclusion;
  F disc = st.discount(ti.r);
  F lifted = F::add(prem.lhs, disc);
  Substitution a12s;
  a12s.formulas = {{"phi", prem.lhs}, {"psi", F::zero()}, {"xi", disc}};
  Ref shift = b.axiom(AxiomName::a12, AxiomDir::ge, a12s);
  Ref d_nonpos;  // 0 + disc <= 0
  if (ti.r.is_zero()) {
    d_nonpos = b.lin_eq(F::add(F::zero(), disc), F::zero());
  } else {
    Ref up = theta_neg_nonneg(b, st.theta);
    Ref flip = b.scale_antitone(up, -ti.r);  // -r theta- <= -r 0
    d_nonpos = b.chain({b.lin_eq(F::add(F::zero(), disc), disc), flip,
                        b.lin_eq(F::scale(-ti.r, F::zero()), F::zero())});
  }
  Ref squeeze = b.meet_mono_right(d_nonpos, lifted);
  Ref inner = b.r3(ti.ref);
  return {ti.r, b.chain({shift, squeeze, inner})};
}

}  // namespace

DeductionResult deduction_transform(const Derivation& d, std::size_t theta_index) {
  CheckResult cr = check(d);
  if (!cr) throw std::invalid_argument("deduction_transform: input fails check: " + cr.reason);
  if (theta_index >= d.theory.size())
    throw std::invalid_argument("deduction_transform: hypothesis index out of range");
  const Inequality& designated = d.theory[theta_index];
  if (!(designated.lhs == Formula::zero()))
    throw std::invalid_argument(
        "deduction_transform: the designated hypothesis must have the bare form 0 <= theta");

  Theory reduced;
  for (std::size_t i = 0; i < d.theory.size(); ++i)
    if (i != theta_index) reduced.push_back(d.theory[i]);

  TransformState st;
  st.theta = designated.rhs;
  st.theta_neg_part = sugar::negp(st.theta);
  st.full = d.fragment == Fragment::full;
  DerivationBuilder b(std::move(reduced), d.mode, st.full ? Fragment::full : Fragment::lin);
  st.b = &b;

  std::vector<Transformed> done(d.steps.size());
  for (std::size_t k = 0; k < d.steps.size(); ++k)
    done[k] = transform_step(st, d, k, theta_index, done);

  DeductionResult out{done.back().r, b.take(done.back().ref)};
  CheckResult self = check(out.derivation);
  if (!self)
    throw std::logic_error("deduction_transform produced a bad derivation: " + self.reason);
  return out;
}

namespace {

/// Closes the linear cut: from 0 + r phi <= psi and 0 + s(-phi) <= psi.
Ref finish_lin_cut(DerivationBuilder& b, const Formula& phi, const Formula& psi, const Rat& r,
                   Ref pos_ref, const Rat& s, Ref neg_ref) {
  F nphi = F::scale(Rat(-1), phi);
  if (r.is_zero())
    return b.chain({b.lin_eq(F::zero(), F::add(F::zero(), F::scale(Rat(0), phi))), pos_ref});
  if (s.is_zero())
    return b.chain({b.lin_eq(F::zero(), F::add(F::zero(), F::scale(Rat(0), nphi))), neg_ref});
  Rat ir = Rat(1) / r, is = Rat(1) / s;
  Ref a = b.chain({b.lin_eq(phi, F::scale(ir, F::add(F::zero(), F::scale(r, phi)))),
                   b.scale_mono(pos_ref, ir)});  // phi <= (1/r) psi
  Ref c = b.chain({b.lin_eq(nphi, F::scale(is, F::add(F::zero(), F::scale(s, nphi)))),
                   b.scale_mono(neg_ref, is)});  // -phi <= (1/s) psi
  Ref t1 = b.lin_eq(F::zero(), F::add(phi, nphi));
  Ref t2 = b.add_cong(a, nphi);
  Ref t3 = b.add_cong_left(c, F::scale(ir, psi));
  Ref zsum = b.chain({t1, t2, t3});  // 0 <= (1/r)psi + (1/s)psi
  Rat iw = Rat(1) / (ir + is);
  return b.chain({b.lin_eq(F::zero(), F::scale(iw, F::zero())), b.scale_mono(zsum, iw),
                  b.lin_eq(F::scale(iw, F::add(F::scale(ir, psi), F::scale(is, psi))), psi)});
}

/// Closes the full cut: from 0 - r phi- <= psi and 0 - s (-phi)- <= psi.
Ref finish_full_cut(DerivationBuilder& b, const Formula& phi, const Formula& psi, const Rat& r,
                    Ref pos_ref, const Rat& s, Ref neg_ref) {
  F posp = sugar::pos(phi);
  F negp = sugar::negp(phi);
  F alt = sugar::negp(F::scale(Rat(-1), phi));  // (-phi)-, normal-form equal to phi+
  if (r.is_zero())
    return b.chain({b.lin_eq(F::zero(), F::add(F::zero(), F::scale(Rat(0), negp))), pos_ref});
  if (s.is_zero())
    return b.chain({b.lin_eq(F::zero(), F::add(F::zero(), F::scale(Rat(0), alt))), neg_ref});

  Ref a = b.chain(
      {b.lin_eq(F::scale(-r, negp), F::add(F::zero(), F::scale(-r, negp))), pos_ref});
  Ref c = b.chain(
      {b.lin_eq(F::scale(-s, posp), F::add(F::zero(), F::scale(-s, alt))), neg_ref});
  Ref j = b.lub(a, c);  // (-r phi-) \/ (-s phi+) <= psi

  F rneg = F::scale(r, negp);
  F spos = F::scale(s, posp);
  Rat m = r > s ? r : s;

  Ref k1 = theta_neg_nonneg(b, phi);        // 0 <= phi-
  Ref k2 = b.join_ub_left(F::zero(), phi);  // 0 <= phi+

  auto widen_scale = [&](Ref nonneg, const F& base, const Rat& from, const Rat& to) {
    Rat extra = to - from;
    if (extra.is_zero()) return b.lin_eq(F::scale(from, base), F::scale(to, base));
    Ref sc = b.scale_mono(nonneg, extra);  // extra*0 <= extra*base
    Ref c1 = b.add_cong_left(sc, F::scale(from, base));
    return b.chain({b.lin_eq(F::scale(from, base),
                             F::add(F::scale(from, base), F::scale(extra, F::zero()))),
                    c1,
                    b.lin_eq(F::add(F::scale(from, base), F::scale(extra, base)),
                             F::scale(to, base))});
  };
  Ref w1 = widen_scale(k1, negp, r, m);
  Ref w2 = widen_scale(k2, posp, s, m);
  Ref mm = b.chain({b.meet_mono_left(w1, spos), b.meet_mono_right(w2, F::scale(m, negp))});

  Substitution a13s;
  a13s.formulas = {{"phi", negp}, {"psi", posp}};
  a13s.scalars = {{"r", m}};
  Ref a13 = b.axiom(AxiomName::a13, AxiomDir::ge, a13s);
  Substitution a10s;
  a10s.formulas = {{"phi", negp}, {"psi", posp}};
  Ref comm = b.axiom(AxiomName::a10, AxiomDir::le, a10s);
  detail::EqRefs pm0 = detail::b_pos_meet_neg_zero(b, phi);
  Ref collapse = b.chain({b.scale_mono(b.chain({comm, pm0.le}), m),
                          b.lin_eq(F::scale(m, F::zero()), F::zero())});
  Ref meet_le = b.chain({mm, a13, collapse});  // r phi- /\ s phi+ <= 0

  // The inner meet of the join tree collapses onto r phi- /\ s phi+.
  Ref j1 = b.meet_mono_left(b.lin_eq(F::scale(Rat(-1), F::scale(-r, negp)), rneg),
                            F::scale(Rat(-1), F::scale(-s, posp)));
  Ref j2 = b.meet_mono_right(b.lin_eq(F::scale(Rat(-1), F::scale(-s, posp)), spos), rneg);
  Ref inner = b.chain({j1, j2, meet_le});
  Ref outer = b.neg_antitone(inner);  // -0 <= join tree
  Ref zero_le_join = b.chain({b.lin_eq(F::zero(), F::scale(Rat(-1), F::zero())), outer});
  return b.chain({zero_le_join, j});
}

}  // namespace

Derivation cut_eliminate(const Derivation& d_pos, std::size_t pos_hyp, const Derivation& d_neg,
                         std::size_t neg_hyp) {
  CheckResult c1 = check(d_pos);
  if (!c1) throw std::invalid_argument("cut_eliminate: positive input fails check: " + c1.reason);
  CheckResult c2 = check(d_neg);
  if (!c2) throw std::invalid_argument("cut_eliminate: negative input fails check: " + c2.reason);
  if (pos_hyp >= d_pos.theory.size() || neg_hyp >= d_neg.theory.size())
    throw std::invalid_argument("cut_eliminate: hypothesis index out of range");
  if (d_pos.mode != d_neg.mode) throw std::invalid_argument("cut_eliminate: mode mismatch");

  const Inequality& hp = d_pos.theory[pos_hyp];
  const Inequality& hn = d_neg.theory[neg_hyp];
  if (!(hp.lhs == Formula::zero() && hn.lhs == Formula::zero()))
    throw std::invalid_argument("cut_eliminate: designated hypotheses must be bare formulas");
  Formula phi = hp.rhs;
  if (!(hn.rhs == Formula::scale(Rat(-1), phi)))
    throw std::invalid_argument("cut_eliminate: negative hypothesis is not -phi");
  if (!(d_pos.conclusion().lhs == Formula::zero() && d_neg.conclusion().lhs == Formula::zero() &&
        d_pos.conclusion().rhs == d_neg.conclusion().rhs))
    throw std::invalid_argument("cut_eliminate: conclusions must both be of the form 0 <= psi");
  Formula psi = d_pos.conclusion().rhs;

  Theory tp, tn;
  for (std::size_t i = 0; i < d_pos.theory.size(); ++i)
    if (i != pos_hyp) tp.push_back(d_pos.theory[i]);
  for (std::size_t i = 0; i < d_neg.theory.size(); ++i)
    if (i != neg_hyp) tn.push_back(d_neg.theory[i]);
  if (tp.size() != tn.size()) throw std::invalid_argument("cut_eliminate: theories differ");
  for (std::size_t i = 0; i < tp.size(); ++i)
    if (!(tp[i] == tn[i])) throw std::invalid_argument("cut_eliminate: theories differ");

  bool lin = d_pos.fragment != Fragment::full && d_neg.fragment != Fragment::full;
  Derivation pos_in = d_pos, neg_in = d_neg;
  if (!lin) {
    pos_in.fragment = Fragment::full;
    neg_in.fragment = Fragment::full;
  }
  DeductionResult pr = deduction_transform(pos_in, pos_hyp);
  DeductionResult nr = deduction_transform(neg_in, neg_hyp);

  DerivationBuilder b(tp, d_pos.mode, lin ? Fragment::lin : Fragment::full);
  DerivationBuilder::Ref pos_ref = b.embed(pr.derivation);
  DerivationBuilder::Ref neg_ref = b.embed(nr.derivation);
  DerivationBuilder::Ref fin = lin ? finish_lin_cut(b, phi, psi, pr.r, pos_ref, nr.r, neg_ref)
                                   : finish_full_cut(b, phi, psi, pr.r, pos_ref, nr.r, neg_ref);
  Derivation out = b.take(fin);
  CheckResult self = check(out);
  if (!self) throw std::logic_error("cut_eliminate produced a bad derivation: " + self.reason);
  return out;
}

}  // namespace rvl
