#include <doctest.h>

#include "rvl/regions.hpp"
#include "rvl/semantics.hpp"
#include "rvl/syntax.hpp"
#include "support/gen.hpp"

using namespace rvl;

namespace {

bool guards_hold(const GuardedPiece& piece, const std::map<std::string, Rat>& x) {
  for (const auto& g : piece.guards) {
    Rat v = g.affine;
    for (const auto& [name, c] : g.coeffs) v += c * x.at(name);
    if (v < Rat(0)) return false;
  }
  return true;
}

Rat value_at(const LinearForm& f, const std::map<std::string, Rat>& x) {
  Rat v = f.affine;
  for (const auto& [name, c] : f.coeffs) v += c * x.at(name);
  return v;
}

}  // namespace

TEST_CASE("single letter decomposes to one guard-free piece") {
  RegionDecomposition rd = decompose(Formula::letter("P"));
  REQUIRE(rd.pieces.size() == 1);
  CHECK(rd.pieces[0].guards.empty());
  CHECK(rd.pieces[0].value.coeffs.at("P") == Rat(1));
}

TEST_CASE("meet splits on the sign of the difference") {
  RegionDecomposition rd = decompose(parse_formula("P /\\ Q", Mode::basic));
  REQUIRE(rd.pieces.size() == 2);
  // Positive branch: 0 <= P - Q, value Q.
  CHECK(rd.pieces[0].signs == "+");
  CHECK(rd.pieces[0].guards.size() == 1);
  CHECK(rd.pieces[0].guards[0].coeff("P") == Rat(1));
  CHECK(rd.pieces[0].guards[0].coeff("Q") == Rat(-1));
  CHECK(rd.pieces[0].value.coeff("Q") == Rat(1));
  CHECK(rd.pieces[1].signs == "-");
  CHECK(rd.pieces[1].value.coeff("P") == Rat(1));
}

TEST_CASE("nested meets produce lexicographic sign branches") {
  RegionDecomposition rd = decompose(parse_formula("(P /\\ 0) /\\ Q", Mode::basic));
  REQUIRE(rd.pieces.size() == 4);
  CHECK(rd.pieces[0].signs == "++");
  CHECK(rd.pieces[1].signs == "+-");
  CHECK(rd.pieces[2].signs == "-+");
  CHECK(rd.pieces[3].signs == "--");
  // The piece guarded by {0 <= P, 0 <= -Q} has value Q.
  const GuardedPiece& first = rd.pieces[0];
  REQUIRE(first.guards.size() == 2);
  CHECK(first.guards[0].coeff("P") == Rat(1));
  CHECK(first.guards[1].coeff("Q") == Rat(-1));
  CHECK(first.value.coeff("Q") == Rat(1));

  // Cross-check by sampling points inside that region.
  testsup::Gen gen(41);
  Formula src = rd.source;
  int inside = 0;
  for (int i = 0; i < 400 && inside < 100; ++i) {
    std::map<std::string, Rat> x{{"P", gen.rat(4, 3)}, {"Q", gen.rat(4, 3)}};
    if (!guards_hold(first, x)) continue;
    ++inside;
    Model m(x, Mode::basic);
    CHECK(eval(src, m) == value_at(first.value, x));
  }
  CHECK(inside >= 50);
}

TEST_CASE("piece count bound") {
  CHECK(piece_count_bound(parse_formula("P", Mode::basic)) == 1);
  CHECK(piece_count_bound(parse_formula("P /\\ Q", Mode::basic)) == 2);
  CHECK(piece_count_bound(parse_formula("(P /\\ 0) /\\ Q", Mode::basic)) == 4);
}

TEST_CASE("pointwise correctness and coverage on random formulas") {
  testsup::Gen gen(42);
  for (int i = 0; i < 150; ++i) {
    Mode mode = i % 2 ? Mode::extended : Mode::basic;
    Formula f = gen.formula_bounded_meets(4, mode, 4);
    RegionDecomposition rd = decompose(f);
    CHECK(mpz_class(rd.pieces.size()) <= piece_count_bound(f));
    auto letters = letters_of(f);
    for (int s = 0; s < 20; ++s) {
      Model m = gen.model(letters, mode);
      Rat expected = eval(f, m);
      bool covered = false;
      for (const auto& piece : rd.pieces) {
        if (!guards_hold(piece, m.assignment())) continue;
        covered = true;
        CHECK(value_at(piece.value, m.assignment()) == expected);
      }
      CHECK(covered);
    }
  }
}

TEST_CASE("pruning drops infeasible pieces only") {
  Formula f = parse_formula("(P - Q) /\\ (Q - P) /\\ P", Mode::basic);
  RegionDecomposition all = decompose(f, false);
  RegionDecomposition pruned = decompose(f, true);
  CHECK(pruned.pieces.size() <= all.pieces.size());
  testsup::Gen gen(43);
  auto letters = letters_of(f);
  for (int s = 0; s < 100; ++s) {
    Model m = gen.model(letters, Mode::basic);
    bool covered = false;
    for (const auto& piece : pruned.pieces)
      if (guards_hold(piece, m.assignment())) {
        covered = true;
        CHECK(value_at(piece.value, m.assignment()) == eval(f, m));
      }
    CHECK(covered);
  }
}
