#include <stdexcept>

#include "proofs_detail.hpp"

namespace rvl {

namespace detail {

using Ref = DerivationBuilder::Ref;
using F = Formula;

namespace {

Substitution fsub(std::initializer_list<std::pair<const char*, Formula>> fs) {
  Substitution s;
  for (auto& [k, v] : fs) s.formulas.emplace(k, v);
  return s;
}

/// pi1: a /\ b <= a (a10 commute, then a14).
Ref meet_proj_left(DerivationBuilder& b, const F& x, const F& y) {
  Ref c = b.axiom(AxiomName::a10, AxiomDir::le, fsub({{"phi", x}, {"psi", y}}));
  Ref p = b.axiom(AxiomName::a14, AxiomDir::le, fsub({{"phi", y}, {"psi", x}}));
  return b.chain({c, p});
}

}  // namespace

EqRefs b_sum_meet_join(DerivationBuilder& b, const F& phi, const F& psi) {
  F sum = F::add(phi, psi);
  F m = F::meet(phi, psi);
  F j = sugar::join(phi, psi);

  EqRefs out;
  {
    // phi + psi <= m + j
    Ref u1 = b.join_ub_right(phi, psi);
    Ref c1 = b.add_cong_left(b.neg_antitone(u1), sum);
    Ref e1 = b.chain({c1, b.lin_eq(F::add(sum, F::scale(Rat(-1), psi)), phi)});
    Ref u2 = b.join_ub_left(phi, psi);
    Ref c2 = b.add_cong_left(b.neg_antitone(u2), sum);
    Ref e2 = b.chain({c2, b.lin_eq(F::add(sum, F::scale(Rat(-1), phi)), psi)});
    F excess = F::add(sum, F::scale(Rat(-1), j));
    // Both chains start at the same tree sum + (-j).
    Ref g = b.glb(e1, e2);  // sum - j <= m
    Ref a = b.add_cong(g, j);
    Ref pre = b.lin_eq(sum, F::add(excess, j));
    out.le = b.chain({pre, a});
  }
  {
    // m + j <= phi + psi
    Ref p1 = meet_proj_left(b, phi, psi);  // m <= phi
    Ref p2 = b.axiom(AxiomName::a14, AxiomDir::le, fsub({{"phi", phi}, {"psi", psi}}));
    F rest = F::add(sum, F::scale(Rat(-1), m));
    Ref q1 = b.chain({b.lin_eq(phi, F::add(sum, F::scale(Rat(-1), psi))),
                      b.add_cong_left(b.neg_antitone(p2), sum)});  // phi <= sum - m
    Ref q2 = b.chain({b.lin_eq(psi, F::add(sum, F::scale(Rat(-1), phi))),
                      b.add_cong_left(b.neg_antitone(p1), sum)});  // psi <= sum - m
    Ref l = b.lub(q1, q2);  // j <= sum - m
    Ref a = b.add_cong(l, m);
    Ref pre = b.lin_eq(F::add(m, j), F::add(j, m));
    out.ge = b.chain({pre, a, b.lin_eq(F::add(rest, m), sum)});
  }
  return out;
}

EqRefs b_pos_neg_split(DerivationBuilder& b, const F& phi) {
  F posp = sugar::pos(phi);     // 0 \/ phi
  F negp = sugar::negp(phi);    // 0 \/ -phi
  F nneg = F::scale(Rat(-1), negp);
  F target = F::add(posp, nneg);  // phi+ - phi-
  F jz = sugar::join(phi, F::zero());
  F mz = F::meet(phi, F::zero());
  F nphi = F::scale(Rat(-1), phi);
  F nzero = F::scale(Rat(-1), F::zero());

  EqRefs smj = b_sum_meet_join(b, phi, F::zero());

  // join(phi,0) = phi+ (commute inside the negation).
  Ref jz_le_pos =
      b.neg_antitone(b.axiom(AxiomName::a10, AxiomDir::le, fsub({{"phi", nzero}, {"psi", nphi}})));
  Ref pos_le_jz =
      b.neg_antitone(b.axiom(AxiomName::a10, AxiomDir::le, fsub({{"phi", nphi}, {"psi", nzero}})));

  // meet(phi,0) = -phi- (commute, then a normal-form bridge).
  Ref mz_le_nneg = b.chain(
      {b.axiom(AxiomName::a10, AxiomDir::le, fsub({{"phi", phi}, {"psi", F::zero()}})),
       b.lin_eq(F::meet(F::zero(), phi), nneg)});
  Ref nneg_le_mz = b.chain(
      {b.lin_eq(nneg, F::meet(F::zero(), phi)),
       b.axiom(AxiomName::a10, AxiomDir::ge, fsub({{"phi", phi}, {"psi", F::zero()}}))});

  EqRefs out;
  {
    Ref pre = b.lin_eq(phi, F::add(phi, F::zero()));
    Ref c1 = b.add_cong(mz_le_nneg, jz);        // mz + jz <= -phi- + jz
    Ref c2 = b.add_cong_left(jz_le_pos, nneg);  // -phi- + jz <= -phi- + phi+
    Ref fin = b.lin_eq(F::add(nneg, posp), target);
    out.le = b.chain({pre, smj.le, c1, c2, fin});
  }
  {
    Ref pre = b.lin_eq(target, F::add(nneg, posp));
    Ref c2 = b.add_cong_left(pos_le_jz, nneg);  // -phi- + phi+ <= -phi- + jz
    Ref c1 = b.add_cong(nneg_le_mz, jz);        // -phi- + jz <= mz + jz
    Ref post = b.lin_eq(F::add(phi, F::zero()), phi);
    out.ge = b.chain({pre, c2, c1, smj.ge, post});
  }
  return out;
}

EqRefs b_pos_meet_neg_zero(DerivationBuilder& b, const F& phi) {
  F posp = sugar::pos(phi);
  F negp = sugar::negp(phi);
  F split = F::add(posp, F::scale(Rat(-1), negp));  // phi+ - phi-
  F shifted = F::add(split, negp);
  F zshift = F::add(F::zero(), negp);
  F nneg = F::scale(Rat(-1), negp);

  EqRefs eq = b_pos_neg_split(b, phi);

  // meet(split, 0) = meet(phi, 0) = -phi-.
  Ref inner_le =
      b.chain({b.meet_mono_left(eq.ge, F::zero()),
               b.axiom(AxiomName::a10, AxiomDir::le, fsub({{"phi", phi}, {"psi", F::zero()}})),
               b.lin_eq(F::meet(F::zero(), phi), nneg)});
  Ref inner_ge =
      b.chain({b.lin_eq(nneg, F::meet(F::zero(), phi)),
               b.axiom(AxiomName::a10, AxiomDir::ge, fsub({{"phi", phi}, {"psi", F::zero()}})),
               b.meet_mono_left(eq.le, F::zero())});

  EqRefs out;
  {
    Ref m1 = b.meet_mono_left(b.lin_eq(posp, shifted), negp);
    Ref m2 = b.meet_mono_right(b.lin_eq(negp, zshift), shifted);
    Ref a12 = b.axiom(AxiomName::a12, AxiomDir::le,
                      fsub({{"phi", split}, {"psi", F::zero()}, {"xi", negp}}));
    Ref c = b.add_cong(inner_le, negp);
    Ref z = b.lin_eq(F::add(nneg, negp), F::zero());
    out.le = b.chain({m1, m2, a12, c, z});
  }
  {
    Ref z = b.lin_eq(F::zero(), F::add(nneg, negp));
    Ref c = b.add_cong(inner_ge, negp);
    Ref a12 = b.axiom(AxiomName::a12, AxiomDir::ge,
                      fsub({{"phi", split}, {"psi", F::zero()}, {"xi", negp}}));
    Ref m2 = b.meet_mono_right(b.lin_eq(zshift, negp), shifted);
    Ref m1 = b.meet_mono_left(b.lin_eq(shifted, posp), negp);
    out.ge = b.chain({z, c, a12, m2, m1});
  }
  return out;
}

}  // namespace detail

namespace {

using detail::EqRefs;
using F = Formula;
using Ref = DerivationBuilder::Ref;

Substitution fsub(std::initializer_list<std::pair<const char*, Formula>> fs) {
  Substitution s;
  for (auto& [k, v] : fs) s.formulas.emplace(k, v);
  return s;
}

}  // namespace

Derivation invert_positive_scale(const F& phi, const F& psi, const F& xi, const Rat& r,
                                 Mode mode) {
  if (!(r > Rat(0))) throw std::invalid_argument("invert_positive_scale needs r > 0");
  F lhs = F::add(F::scale(r, phi), xi);
  F rhs = F::add(F::scale(r, psi), xi);
  DerivationBuilder b({Inequality{lhs, rhs}}, mode, Fragment::lin);
  Ref h = b.hyp(0);
  Rat q = Rat(1) / r;
  F shift = F::scale(-q, xi);
  Ref s1 = b.lin_eq(phi, F::add(F::scale(q, lhs), shift));
  Ref s2 = b.r2(h, q, shift);
  Ref s3 = b.lin_eq(F::add(F::scale(q, rhs), shift), psi);
  return b.take(b.chain({s1, s2, s3}));
}

Derivation meet_mono(const F& phi, const F& psi, const F& xi, Mode mode) {
  DerivationBuilder b({Inequality{phi, psi}}, mode, Fragment::full);
  return b.take(b.meet_mono_left(b.hyp(0), xi));
}

Derivation meet_glb(const F& xi, const F& phi, const F& psi, Mode mode) {
  DerivationBuilder b({Inequality{xi, phi}, Inequality{xi, psi}}, mode, Fragment::full);
  return b.take(b.glb(b.hyp(0), b.hyp(1)));
}

Derivation join_lub(const F& phi, const F& psi, const F& xi, Mode mode) {
  DerivationBuilder b({Inequality{phi, xi}, Inequality{psi, xi}}, mode, Fragment::full);
  return b.take(b.lub(b.hyp(0), b.hyp(1)));
}

EqDerivation sum_meet_join(const F& phi, const F& psi, Mode mode) {
  DerivationBuilder b({}, mode, Fragment::full);
  EqRefs refs = detail::b_sum_meet_join(b, phi, psi);
  return EqDerivation{b.take(refs.le), b.take(refs.ge)};
}

EqDerivation pos_neg_split(const F& phi, Mode mode) {
  DerivationBuilder b({}, mode, Fragment::full);
  EqRefs refs = detail::b_pos_neg_split(b, phi);
  return EqDerivation{b.take(refs.le), b.take(refs.ge)};
}

EqDerivation pos_meet_neg_zero(const F& phi, Mode mode) {
  DerivationBuilder b({}, mode, Fragment::full);
  EqRefs refs = detail::b_pos_meet_neg_zero(b, phi);
  return EqDerivation{b.take(refs.le), b.take(refs.ge)};
}

EqDerivation abs_decomposition(const F& phi, Mode mode) {
  DerivationBuilder b({}, mode, Fragment::full);
  F nphi = F::scale(Rat(-1), phi);
  F posp = sugar::pos(phi);
  F negp = sugar::negp(phi);
  F absf = sugar::abs(phi);               // join(phi, -phi)
  F m = F::meet(phi, nphi);
  F sum = F::add(phi, nphi);
  F xi0 = F::add(F::scale(Rat(-1), posp), F::scale(Rat(-1), negp));
  F p1 = F::add(F::scale(Rat(2), posp), xi0);
  F p2 = F::add(F::scale(Rat(2), negp), xi0);
  F target = F::add(posp, negp);

  EqRefs smj = detail::b_sum_meet_join(b, phi, nphi);
  EqRefs eq = detail::b_pos_neg_split(b, phi);
  EqRefs pm0 = detail::b_pos_meet_neg_zero(b, phi);

  F split = F::add(posp, F::scale(Rat(-1), negp));
  F nsplit = F::add(negp, F::scale(Rat(-1), posp));
  // -phi = phi- - phi+.
  Ref nphi_le = b.chain({b.neg_antitone(eq.ge), b.lin_eq(F::scale(Rat(-1), split), nsplit)});
  Ref nphi_ge = b.chain({b.lin_eq(nsplit, F::scale(Rat(-1), split)), b.neg_antitone(eq.le)});

  // m = meet(phi, -phi) equals xi0.
  Ref m_le, m_ge;
  {
    Ref g1 = b.chain({b.meet_mono_left(b.chain({eq.le, b.lin_eq(split, p1)}), nphi),
                      b.meet_mono_right(b.chain({nphi_le, b.lin_eq(nsplit, p2)}), p1)});
    Ref g2 = b.axiom(AxiomName::a12, AxiomDir::le,
                     fsub({{"phi", F::scale(Rat(2), posp)}, {"psi", F::scale(Rat(2), negp)},
                           {"xi", xi0}}));
    Ref g3 = b.axiom(AxiomName::a13, AxiomDir::ge, [&] {
      Substitution s = fsub({{"phi", posp}, {"psi", negp}});
      s.scalars.emplace("r", Rat(2));
      return s;
    }());
    Ref g4 = b.scale_mono(pm0.le, Rat(2));
    Ref g5 = b.add_cong(b.chain({g3, g4}), xi0);
    Ref g6 = b.lin_eq(F::add(F::scale(Rat(2), F::zero()), xi0), xi0);
    m_le = b.chain({g1, g2, g5, g6});
  }
  {
    Ref g6 = b.lin_eq(xi0, F::add(F::scale(Rat(2), F::zero()), xi0));
    Ref g4 = b.scale_mono(pm0.ge, Rat(2));
    Ref g3 = b.axiom(AxiomName::a13, AxiomDir::le, [&] {
      Substitution s = fsub({{"phi", posp}, {"psi", negp}});
      s.scalars.emplace("r", Rat(2));
      return s;
    }());
    Ref g5 = b.add_cong(b.chain({g4, g3}), xi0);
    Ref g2 = b.axiom(AxiomName::a12, AxiomDir::ge,
                     fsub({{"phi", F::scale(Rat(2), posp)}, {"psi", F::scale(Rat(2), negp)},
                           {"xi", xi0}}));
    Ref g1 = b.chain({b.meet_mono_left(b.chain({b.lin_eq(p1, split), eq.ge}), p2),
                      b.meet_mono_right(b.chain({b.lin_eq(p2, nsplit), nphi_ge}), phi)});
    m_ge = b.chain({g6, g5, g2, g1});
  }

  EqDerivation out;
  {
    Ref h1 = b.lin_eq(absf, F::add(F::add(m, absf), F::scale(Rat(-1), m)));
    Ref h2 = b.add_cong(smj.ge, F::scale(Rat(-1), m));
    Ref h3 = b.add_cong_left(b.neg_antitone(m_ge), sum);
    Ref h4 = b.lin_eq(F::add(sum, F::scale(Rat(-1), xi0)), target);
    out.le = b.take(b.chain({h1, h2, h3, h4}));
  }
  {
    Ref k1 = b.lin_eq(target, F::add(sum, F::scale(Rat(-1), xi0)));
    Ref k2 = b.add_cong_left(b.neg_antitone(m_le), sum);
    Ref k3 = b.add_cong(smj.le, F::scale(Rat(-1), m));
    Ref k4 = b.lin_eq(F::add(F::add(m, absf), F::scale(Rat(-1), m)), absf);
    out.ge = b.take(b.chain({k1, k2, k3, k4}));
  }
  return out;
}

namespace {

struct BoundRefs {
  mpz_class n;
  Ref lo, hi;
};

Formula const_one(const mpz_class& n) { return F::scale(Rat(mpz_class(n)), F::one()); }

/// a*1 <= b*1 for rationals a <= b, bridged through a15 on the letter.
Ref widen(DerivationBuilder& b, const Rat& a, const Rat& bb, const std::string& letter) {
  F ca = F::scale(a, F::one());
  F cb = F::scale(bb, F::one());
  if (a == bb) return b.lin_eq(ca, cb);
  if (a > bb) throw std::logic_error("widen: bounds out of order");
  F p = F::letter(letter);
  Ref neg1le1 = b.chain({b.axiom(AxiomName::a15, AxiomDir::ge, fsub({{"P", p}})),
                         b.axiom(AxiomName::a15, AxiomDir::le, fsub({{"P", p}}))});
  Rat w = (bb - a) / Rat(2);
  F xi = F::scale((a + bb) / Rat(2), F::one());
  Ref s1 = b.lin_eq(ca, F::add(F::scale(w, F::scale(Rat(-1), F::one())), xi));
  Ref s2 = b.r2(neg1le1, w, xi);
  Ref s3 = b.lin_eq(F::add(F::scale(w, F::one()), xi), cb);
  return b.chain({s1, s2, s3});
}

BoundRefs bound_rec(DerivationBuilder& b, const F& f, const std::string& letter) {
  switch (f.kind()) {
    case F::Kind::zero: {
      BoundRefs out{0, 0, 0};
      out.lo = b.lin_eq(const_one(0), f);
      out.hi = b.lin_eq(f, const_one(0));
      return out;
    }
    case F::Kind::one: {
      BoundRefs out{1, 0, 0};
      F p = F::letter(letter);
      out.lo = b.chain({b.axiom(AxiomName::a15, AxiomDir::ge, fsub({{"P", p}})),
                        b.axiom(AxiomName::a15, AxiomDir::le, fsub({{"P", p}}))});
      out.hi = b.lin_eq(F::one(), const_one(1));
      return out;
    }
    case F::Kind::letter: {
      BoundRefs out{1, 0, 0};
      out.lo = b.axiom(AxiomName::a15, AxiomDir::ge, fsub({{"P", f}}));
      out.hi = b.chain({b.axiom(AxiomName::a15, AxiomDir::le, fsub({{"P", f}})),
                        b.lin_eq(F::one(), const_one(1))});
      return out;
    }
    case F::Kind::add: {
      BoundRefs l = bound_rec(b, f.left(), letter);
      BoundRefs r = bound_rec(b, f.right(), letter);
      BoundRefs out{l.n + r.n, 0, 0};
      Rat nl{mpz_class(l.n)}, nr{mpz_class(r.n)}, n{mpz_class(out.n)};
      out.hi = b.chain({b.add_cong(l.hi, f.right()),
                        b.add_cong_left(r.hi, F::scale(nl, F::one())),
                        b.lin_eq(F::add(F::scale(nl, F::one()), F::scale(nr, F::one())),
                                 F::scale(n, F::one()))});
      out.lo = b.chain({b.lin_eq(F::scale(-n, F::one()),
                                 F::add(F::scale(-nl, F::one()), F::scale(-nr, F::one()))),
                        b.add_cong(l.lo, F::scale(-nr, F::one())),
                        b.add_cong_left(r.lo, f.left())});
      return out;
    }
    case F::Kind::scale: {
      const Rat& q = f.scalar();
      if (q.is_zero()) {
        BoundRefs out{0, 0, 0};
        out.lo = b.lin_eq(const_one(0), f);
        out.hi = b.lin_eq(f, const_one(0));
        return out;
      }
      BoundRefs in = bound_rec(b, f.inner(), letter);
      Rat qn = q * Rat(mpz_class(in.n));
      BoundRefs out{qn.abs().ceil(), 0, 0};
      Rat n{mpz_class(out.n)};
      F inner_hi = F::scale(Rat(mpz_class(in.n)), F::one());
      F inner_lo = F::scale(-Rat(mpz_class(in.n)), F::one());
      if (q > Rat(0)) {
        out.hi = b.chain({b.scale_mono(in.hi, q), b.lin_eq(F::scale(q, inner_hi), F::scale(qn, F::one())),
                          widen(b, qn, n, letter)});
        out.lo = b.chain({widen(b, -n, -qn, letter),
                          b.lin_eq(F::scale(-qn, F::one()), F::scale(q, inner_lo)),
                          b.scale_mono(in.lo, q)});
      } else {
        out.hi = b.chain({b.scale_antitone(in.lo, q),
                          b.lin_eq(F::scale(q, inner_lo), F::scale(-qn, F::one())),
                          widen(b, -qn, n, letter)});
        out.lo = b.chain({widen(b, -n, qn, letter),
                          b.lin_eq(F::scale(qn, F::one()), F::scale(q, inner_hi)),
                          b.scale_antitone(in.hi, q)});
      }
      return out;
    }
    case F::Kind::meet: {
      BoundRefs l = bound_rec(b, f.left(), letter);
      BoundRefs r = bound_rec(b, f.right(), letter);
      BoundRefs out{l.n > r.n ? l.n : r.n, 0, 0};
      Rat n{mpz_class(out.n)};
      out.hi = b.chain({b.axiom(AxiomName::a14, AxiomDir::le,
                                fsub({{"phi", f.left()}, {"psi", f.right()}})),
                        r.hi, widen(b, Rat(mpz_class(r.n)), n, letter)});
      Ref l1 = b.chain({widen(b, -n, -Rat(mpz_class(l.n)), letter), l.lo});
      Ref l2 = b.chain({widen(b, -n, -Rat(mpz_class(r.n)), letter), r.lo});
      out.lo = b.glb(l1, l2);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

ExtendedBound extended_bound(const Formula& phi) {
  auto letters = letters_of(phi);
  std::string letter = letters.empty() ? "P" : letters.front();
  DerivationBuilder b({}, Mode::extended, Fragment::full);
  BoundRefs refs = bound_rec(b, phi, letter);
  ExtendedBound out;
  out.n = refs.n;
  out.lower = b.take(refs.lo);
  out.upper = b.take(refs.hi);
  return out;
}

}  // namespace rvl
