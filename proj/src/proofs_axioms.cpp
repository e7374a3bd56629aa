#include <algorithm>
#include <stdexcept>

#include "rvl/proofs.hpp"

namespace rvl {

std::string axiom_id_str(const AxiomId& id) {
  static const char* names[] = {"a1", "a2",  "a3",  "a4",  "a5",  "a6",  "a7",  "a8",
                                "a9", "a10", "a11", "a12", "a13", "a14", "a15", "nf"};
  std::string out = names[static_cast<int>(id.name)];
  out += id.dir == AxiomDir::le ? ".le" : ".ge";
  return out;
}

std::optional<AxiomName> parse_axiom_name(const std::string& s) {
  static const std::pair<const char*, AxiomName> table[] = {
      {"a1", AxiomName::a1},   {"a2", AxiomName::a2},   {"a3", AxiomName::a3},
      {"a4", AxiomName::a4},   {"a5", AxiomName::a5},   {"a6", AxiomName::a6},
      {"a7", AxiomName::a7},   {"a8", AxiomName::a8},   {"a9", AxiomName::a9},
      {"a10", AxiomName::a10}, {"a11", AxiomName::a11}, {"a12", AxiomName::a12},
      {"a13", AxiomName::a13}, {"a14", AxiomName::a14}, {"a15", AxiomName::a15},
      {"nf", AxiomName::nf}};
  for (const auto& [name, value] : table)
    if (s == name) return value;
  return std::nullopt;
}

std::string fragment_str(Fragment f) {
  switch (f) {
    case Fragment::mp: return "mp";
    case Fragment::lin: return "lin";
    case Fragment::full: return "full";
  }
  return "full";
}

namespace {

struct SkeletonTerm {
  Formula atom;  // canonicalized letter/one/meet
  Rat coeff;
};

/// Linear skeleton of f with meets as atoms (children canonicalized
/// recursively). Deterministic atom order via Formula::compare.
void skeleton(const Formula& f, const Rat& factor, std::vector<SkeletonTerm>& terms,
              Rat& affine);

Formula canon_atom(const Formula& f) {
  if (f.is(Formula::Kind::meet))
    return Formula::meet(nf_canon(f.left()), nf_canon(f.right()));
  return f;  // letter
}

void add_term(std::vector<SkeletonTerm>& terms, Formula atom, const Rat& coeff) {
  for (auto& t : terms) {
    if (t.atom == atom) {
      t.coeff += coeff;
      return;
    }
  }
  terms.push_back(SkeletonTerm{std::move(atom), coeff});
}

void skeleton(const Formula& f, const Rat& factor, std::vector<SkeletonTerm>& terms,
              Rat& affine) {
  if (factor.is_zero()) return;
  switch (f.kind()) {
    case Formula::Kind::zero:
      return;
    case Formula::Kind::one:
      affine += factor;
      return;
    case Formula::Kind::letter:
    case Formula::Kind::meet:
      add_term(terms, canon_atom(f), factor);
      return;
    case Formula::Kind::add:
      skeleton(f.left(), factor, terms, affine);
      skeleton(f.right(), factor, terms, affine);
      return;
    case Formula::Kind::scale:
      skeleton(f.inner(), factor * f.scalar(), terms, affine);
      return;
  }
}

}  // namespace

Formula nf_canon(const Formula& f) {
  std::vector<SkeletonTerm> terms;
  Rat affine(0);
  skeleton(f, Rat(1), terms, affine);
  terms.erase(std::remove_if(terms.begin(), terms.end(),
                             [](const SkeletonTerm& t) { return t.coeff.is_zero(); }),
              terms.end());
  std::sort(terms.begin(), terms.end(), [](const SkeletonTerm& a, const SkeletonTerm& b) {
    return Formula::compare(a.atom, b.atom) < 0;
  });
  std::vector<Formula> parts;
  for (auto& t : terms) parts.push_back(Formula::scale(t.coeff, t.atom));
  if (!affine.is_zero()) parts.push_back(Formula::scale(affine, Formula::one()));
  if (parts.empty()) return Formula::zero();
  Formula out = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) out = Formula::add(parts[i], out);
  return out;
}

namespace {

const Formula& need_formula(const Substitution& s, const char* name) {
  auto it = s.formulas.find(name);
  if (it == s.formulas.end())
    throw std::invalid_argument(std::string("axiom substitution misses '") + name + "'");
  return it->second;
}

const Rat& need_scalar(const Substitution& s, const char* name) {
  auto it = s.scalars.find(name);
  if (it == s.scalars.end())
    throw std::invalid_argument(std::string("axiom substitution misses scalar '") + name + "'");
  return it->second;
}

void expect_keys(const Substitution& s, std::initializer_list<const char*> fkeys,
                 std::initializer_list<const char*> skeys) {
  if (s.formulas.size() != fkeys.size() || s.scalars.size() != skeys.size())
    throw std::invalid_argument("axiom substitution has extraneous or missing bindings");
  for (const char* k : fkeys) need_formula(s, k);
  for (const char* k : skeys) need_scalar(s, k);
}

}  // namespace

Inequality instantiate_axiom(const AxiomId& id, const Substitution& subst, Mode mode) {
  using F = Formula;
  auto equality = [&](Formula l, Formula r) {
    return id.dir == AxiomDir::le ? Inequality{std::move(l), std::move(r)}
                                  : Inequality{std::move(r), std::move(l)};
  };

  Inequality out{F::zero(), F::zero()};
  switch (id.name) {
    case AxiomName::a1: {
      expect_keys(subst, {"phi", "psi"}, {});
      const F& phi = need_formula(subst, "phi");
      const F& psi = need_formula(subst, "psi");
      out = equality(F::add(phi, psi), F::add(psi, phi));
      break;
    }
    case AxiomName::a2: {
      expect_keys(subst, {"phi", "psi", "xi"}, {});
      const F& phi = need_formula(subst, "phi");
      const F& psi = need_formula(subst, "psi");
      const F& xi = need_formula(subst, "xi");
      out = equality(F::add(F::add(phi, psi), xi), F::add(psi, F::add(phi, xi)));
      break;
    }
    case AxiomName::a3: {
      expect_keys(subst, {"phi"}, {});
      const F& phi = need_formula(subst, "phi");
      out = equality(F::add(phi, F::zero()), phi);
      break;
    }
    case AxiomName::a4: {
      expect_keys(subst, {"phi"}, {});
      const F& phi = need_formula(subst, "phi");
      out = equality(F::scale(Rat(1), phi), phi);
      break;
    }
    case AxiomName::a5: {
      expect_keys(subst, {"phi"}, {});
      const F& phi = need_formula(subst, "phi");
      out = equality(F::scale(Rat(0), phi), F::zero());
      break;
    }
    case AxiomName::a6: {
      expect_keys(subst, {"phi"}, {"r", "s"});
      const F& phi = need_formula(subst, "phi");
      const Rat& r = need_scalar(subst, "r");
      const Rat& s = need_scalar(subst, "s");
      out = equality(F::add(F::scale(r, phi), F::scale(s, phi)), F::scale(s + r, phi));
      break;
    }
    case AxiomName::a7: {
      expect_keys(subst, {"phi", "psi"}, {"r"});
      const F& phi = need_formula(subst, "phi");
      const F& psi = need_formula(subst, "psi");
      const Rat& r = need_scalar(subst, "r");
      out = equality(F::add(F::scale(r, phi), F::scale(r, psi)), F::scale(r, F::add(phi, psi)));
      break;
    }
    case AxiomName::a8: {
      expect_keys(subst, {"phi"}, {"r", "s"});
      const F& phi = need_formula(subst, "phi");
      const Rat& r = need_scalar(subst, "r");
      const Rat& s = need_scalar(subst, "s");
      out = equality(F::scale(r, F::scale(s, phi)), F::scale(r * s, phi));
      break;
    }
    case AxiomName::a9: {
      expect_keys(subst, {"phi"}, {});
      const F& phi = need_formula(subst, "phi");
      out = equality(F::meet(phi, phi), phi);
      break;
    }
    case AxiomName::a10: {
      expect_keys(subst, {"phi", "psi"}, {});
      const F& phi = need_formula(subst, "phi");
      const F& psi = need_formula(subst, "psi");
      out = equality(F::meet(phi, psi), F::meet(psi, phi));
      break;
    }
    case AxiomName::a11: {
      expect_keys(subst, {"phi", "psi", "xi"}, {});
      const F& phi = need_formula(subst, "phi");
      const F& psi = need_formula(subst, "psi");
      const F& xi = need_formula(subst, "xi");
      out = equality(F::meet(F::meet(phi, psi), xi), F::meet(phi, F::meet(psi, xi)));
      break;
    }
    case AxiomName::a12: {
      expect_keys(subst, {"phi", "psi", "xi"}, {});
      const F& phi = need_formula(subst, "phi");
      const F& psi = need_formula(subst, "psi");
      const F& xi = need_formula(subst, "xi");
      out = equality(F::meet(F::add(phi, xi), F::add(psi, xi)), F::add(F::meet(phi, psi), xi));
      break;
    }
    case AxiomName::a13: {
      expect_keys(subst, {"phi", "psi"}, {"r"});
      const F& phi = need_formula(subst, "phi");
      const F& psi = need_formula(subst, "psi");
      const Rat& r = need_scalar(subst, "r");
      if (r < Rat(0)) throw std::invalid_argument("a13 requires r >= 0");
      out = equality(F::scale(r, F::meet(phi, psi)), F::meet(F::scale(r, phi), F::scale(r, psi)));
      break;
    }
    case AxiomName::a14: {
      expect_keys(subst, {"phi", "psi"}, {});
      if (id.dir != AxiomDir::le) throw std::invalid_argument("a14 has no ge half");
      const F& phi = need_formula(subst, "phi");
      const F& psi = need_formula(subst, "psi");
      out = Inequality{F::meet(phi, psi), psi};
      break;
    }
    case AxiomName::a15: {
      expect_keys(subst, {"P"}, {});
      if (mode != Mode::extended) throw std::invalid_argument("a15 requires extended mode");
      const F& p = need_formula(subst, "P");
      if (!p.is(F::Kind::letter)) throw std::invalid_argument("a15 requires a letter");
      if (id.dir == AxiomDir::le)
        out = Inequality{p, F::one()};  // P <= 1
      else
        out = Inequality{F::scale(Rat(-1), F::one()), p};  // -1 <= P
      break;
    }
    case AxiomName::nf: {
      expect_keys(subst, {"phi", "psi"}, {});
      const F& phi = need_formula(subst, "phi");
      const F& psi = need_formula(subst, "psi");
      if (nf_canon(phi) != nf_canon(psi))
        throw std::invalid_argument("nf: normal forms differ");
      out = equality(phi, psi);
      break;
    }
  }
  require_mode(out.lhs, mode);
  require_mode(out.rhs, mode);
  return out;
}

}  // namespace rvl
