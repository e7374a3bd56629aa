#include <doctest.h>

#include "rvl/farkas.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace rvl;

namespace {

LinearForm lf(std::initializer_list<std::pair<const char*, int>> coeffs, int affine = 0) {
  LinearForm out;
  for (auto& [name, c] : coeffs)
    if (c != 0) out.coeffs.emplace(name, Rat(c));
  out.affine = Rat(affine);
  return out;
}

}  // namespace

TEST_CASE("scaling certificate") {
  LinearSystem sys{{lf({{"P", 1}})}, {"P"}};
  LinearVerdict v = entails_linear(sys, lf({{"P", 2}}));
  REQUIRE(v.kind == LinearVerdict::Kind::entailed);
  REQUIRE(v.certificate.multipliers.size() == 1);
  CHECK(v.certificate.multipliers[0] == Rat(2));
  CHECK(verify_certificate(sys, lf({{"P", 2}}), v.certificate));
}

TEST_CASE("combination certificate") {
  LinearSystem sys{{lf({{"P", 1}, {"Q", -2}}), lf({{"Q", 1}})}, {"P", "Q"}};
  LinearForm target = lf({{"P", 1}});
  LinearVerdict v = entails_linear(sys, target);
  REQUIRE(v.kind == LinearVerdict::Kind::entailed);
  CHECK(verify_certificate(sys, target, v.certificate));
  // The explicit (1, 2) combination is also a valid certificate.
  CHECK(verify_certificate(sys, target, FarkasCertificate{{Rat(1), Rat(2)}}));
  // (1, 1) is not: the vectors do not add up.
  CHECK_FALSE(verify_certificate(sys, target, FarkasCertificate{{Rat(1), Rat(1)}}));
}

TEST_CASE("infeasibility certificate for box-contradicting rows") {
  // 0 <= P - 2 together with the unit box rows.
  LinearSystem sys{{lf({{"P", 1}}, -2), lf({{"P", -1}}, 1), lf({{"P", 1}}, 1)}, {"P"}};
  LinearVerdict v = entails_linear(sys, lf({}, 0));
  REQUIRE(v.kind == LinearVerdict::Kind::infeasible);
  CHECK(verify_certificate(sys, v.infeasibility));
  // The (1,1,0) combination from the box upper row is itself valid.
  CHECK(verify_certificate(sys, InfeasibilityCertificate{{Rat(1), Rat(1), Rat(0)}}));
  CHECK_FALSE(is_feasible(sys));
}

TEST_CASE("empty system conventions") {
  LinearSystem sys{{}, {}};
  LinearVerdict v = entails_linear(sys, lf({}));
  REQUIRE(v.kind == LinearVerdict::Kind::entailed);
  CHECK(v.certificate.multipliers.empty());
  CHECK(verify_certificate(sys, lf({}), FarkasCertificate{{}}));
  CHECK(is_feasible(sys));
}

TEST_CASE("refutations carry exact witnesses") {
  LinearSystem sys{{lf({{"P", 1}, {"Q", -2}})}, {"P", "Q"}};
  LinearForm target = lf({{"P", 1}, {"Q", -1}});
  LinearVerdict v = entails_linear(sys, target);
  REQUIRE(v.kind == LinearVerdict::Kind::refuted);
  for (const auto& h : sys.hypotheses) CHECK(lf_eval(h, v.witness) >= Rat(0));
  CHECK(lf_eval(target, v.witness) < Rat(0));
}

TEST_CASE("certificate count mismatch is an error") {
  LinearSystem sys{{lf({{"P", 1}})}, {"P"}};
  CHECK_THROWS_AS(verify_certificate(sys, lf({{"P", 1}}), FarkasCertificate{{Rat(1), Rat(1)}}),
                  std::invalid_argument);
}

TEST_CASE("certificate serialization") {
  CHECK(print_certificate({Rat(1), Rat(2, 3), Rat(0)}) == "CERT 1 2/3 0");
  CHECK(print_certificate({}) == "CERT");
}

TEST_CASE("verdict kinds match the vertex-enumeration oracle") {
  testsup::Gen gen(51);
  static const char* names[] = {"P", "Q", "R", "S"};
  int entailed = 0, infeasible = 0, refuted = 0;
  for (int i = 0; i < 300; ++i) {
    int vars = gen.pick(1, 4);
    int rows = gen.pick(0, 6);
    LinearSystem sys;
    for (int v = 0; v < vars; ++v) sys.letter_order.push_back(names[v]);
    for (int r = 0; r < rows; ++r) {
      LinearForm row;
      for (int v = 0; v < vars; ++v) {
        int c = gen.pick(-3, 3);
        if (c != 0) row.coeffs.emplace(names[v], Rat(c));
      }
      row.affine = Rat(gen.pick(-3, 3));
      sys.hypotheses.push_back(std::move(row));
    }
    LinearForm target;
    for (int v = 0; v < vars; ++v) {
      int c = gen.pick(-3, 3);
      if (c != 0) target.coeffs.emplace(names[v], Rat(c));
    }
    target.affine = Rat(gen.pick(-3, 3));

    LinearVerdict got = entails_linear(sys, target);
    testsup::OracleKind want = testsup::oracle_linear(sys, target);
    switch (got.kind) {
      case LinearVerdict::Kind::entailed:
        ++entailed;
        CHECK(want == testsup::OracleKind::entailed);
        CHECK(verify_certificate(sys, target, got.certificate));
        break;
      case LinearVerdict::Kind::infeasible:
        ++infeasible;
        CHECK(want == testsup::OracleKind::infeasible);
        CHECK(verify_certificate(sys, got.infeasibility));
        break;
      case LinearVerdict::Kind::refuted:
        ++refuted;
        CHECK(want == testsup::OracleKind::refuted);
        for (const auto& h : sys.hypotheses) CHECK(lf_eval(h, got.witness) >= Rat(0));
        CHECK(lf_eval(target, got.witness) < Rat(0));
        break;
    }
  }
  // The random mix should exercise every verdict kind.
  CHECK(entailed > 0);
  CHECK(infeasible > 0);
  CHECK(refuted > 0);
}

TEST_CASE("projection keeps solution sets") {
  // Rows over (x, y): 0 <= x, 0 <= y - x, 0 <= 1 - y. Eliminating y leaves
  // 0 <= x and 0 <= 1 - x.
  std::vector<FmRow> rows;
  rows.push_back(FmRow{{Rat(1), Rat(0)}, Rat(0), false});
  rows.push_back(FmRow{{Rat(-1), Rat(1)}, Rat(0), false});
  rows.push_back(FmRow{{Rat(0), Rat(-1)}, Rat(1), false});
  auto out = fm_project(std::move(rows), {1});
  bool lower = false, upper = false;
  for (const auto& r : out) {
    CHECK(r.c[1].is_zero());
    if (r.c[0] > Rat(0)) lower = true;
    if (r.c[0] < Rat(0)) upper = true;
  }
  CHECK(lower);
  CHECK(upper);
}
