#include "rvl/regions.hpp"

#include <set>

#include "rvl/farkas.hpp"

namespace rvl {

namespace {

std::vector<GuardedPiece> pieces_of(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::zero:
      return {GuardedPiece{{}, LinearForm{}, ""}};
    case Formula::Kind::one: {
      LinearForm v;
      v.affine = Rat(1);
      return {GuardedPiece{{}, std::move(v), ""}};
    }
    case Formula::Kind::letter: {
      LinearForm v;
      v.coeffs.emplace(f.name(), Rat(1));
      return {GuardedPiece{{}, std::move(v), ""}};
    }
    case Formula::Kind::scale: {
      auto inner = pieces_of(f.inner());
      for (auto& p : inner) p.value = lf_scale(f.scalar(), p.value);
      return inner;
    }
    case Formula::Kind::add: {
      auto ls = pieces_of(f.left());
      auto rs = pieces_of(f.right());
      std::vector<GuardedPiece> out;
      out.reserve(ls.size() * rs.size());
      for (const auto& l : ls) {
        for (const auto& r : rs) {
          GuardedPiece p;
          p.guards = l.guards;
          p.guards.insert(p.guards.end(), r.guards.begin(), r.guards.end());
          p.value = lf_add(l.value, r.value);
          p.signs = l.signs + r.signs;
          out.push_back(std::move(p));
        }
      }
      return out;
    }
    case Formula::Kind::meet: {
      auto ls = pieces_of(f.left());
      auto rs = pieces_of(f.right());
      std::vector<GuardedPiece> out;
      out.reserve(2 * ls.size() * rs.size());
      for (const auto& l : ls) {
        for (const auto& r : rs) {
          LinearForm diff = lf_sub(l.value, r.value);
          std::vector<LinearForm> base = l.guards;
          base.insert(base.end(), r.guards.begin(), r.guards.end());
          // 0 <= left - right: the right operand is the minimum.
          {
            GuardedPiece p;
            p.guards = base;
            p.guards.push_back(diff);
            p.value = r.value;
            p.signs = l.signs + r.signs + "+";
            out.push_back(std::move(p));
          }
          {
            GuardedPiece p;
            p.guards = std::move(base);
            p.guards.push_back(lf_neg(diff));
            p.value = l.value;
            p.signs = l.signs + r.signs + "-";
            out.push_back(std::move(p));
          }
        }
      }
      return out;
    }
  }
  return {};
}

bool guards_feasible(const GuardedPiece& p) {
  std::set<std::string> letters;
  for (const auto& g : p.guards)
    for (const auto& [name, q] : g.coeffs) letters.insert(name);
  LinearSystem sys;
  sys.hypotheses = p.guards;
  sys.letter_order.assign(letters.begin(), letters.end());
  return is_feasible(sys);
}

}  // namespace

RegionDecomposition decompose(const Formula& f, bool prune) {
  RegionDecomposition out;
  out.source = f;
  out.pieces = pieces_of(f);
  if (prune) {
    std::vector<GuardedPiece> kept;
    for (auto& p : out.pieces)
      if (guards_feasible(p)) kept.push_back(std::move(p));
    out.pieces = std::move(kept);
  }
  return out;
}

mpz_class piece_count_bound(const Formula& f) {
  mpz_class out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), meet_count(f));
  return out;
}

}  // namespace rvl
