#include <doctest.h>

#include "rvl/decide.hpp"
#include "rvl/syntax.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace rvl;

namespace {

Verdict run(const std::string& theory, const std::string& goal, Mode mode,
            DecideOptions opts = {}) {
  return decide(parse_theory(theory, mode), parse_inequality(goal, mode), mode, opts);
}

void check_entails_certificates(const Verdict& v) {
  REQUIRE(v.kind == Verdict::Kind::entails);
  for (const auto& br : v.branches) {
    if (br.verdict.kind == LinearVerdict::Kind::entailed)
      CHECK(verify_certificate(br.system, br.target, br.verdict.certificate));
    else
      CHECK(verify_certificate(br.system, br.verdict.infeasibility));
  }
}

}  // namespace

TEST_CASE("worked entailments") {
  Verdict v1 = run("2Q <= P\n0 <= Q\n", "0 <= P", Mode::basic);
  check_entails_certificates(v1);

  Verdict v2 = run("2Q <= P\n", "Q <= P", Mode::basic);
  REQUIRE(v2.kind == Verdict::Kind::refutes);
  const Model& m = *v2.countermodel;
  CHECK(satisfies_theory(m, parse_theory("2Q <= P\n", Mode::basic)));
  CHECK_FALSE(satisfies(m, parse_inequality("Q <= P", Mode::basic)));

  // Needs the meet split: 0 <= P entails 0 <= P /\ 0.
  Verdict v3 = run("0 <= P\n", "0 <= P /\\ 0", Mode::basic);
  check_entails_certificates(v3);

  // Extended: the unit box alone bounds every letter.
  Verdict v4 = run("", "P <= 1", Mode::extended);
  check_entails_certificates(v4);
  CHECK(run("", "P <= 1", Mode::basic).kind == Verdict::Kind::refutes);
}

TEST_CASE("monotonicity under extra hypotheses") {
  Theory t = parse_theory("2Q <= P\n0 <= Q\n", Mode::basic);
  Inequality goal = parse_inequality("0 <= P", Mode::basic);
  REQUIRE(decide(t, goal, Mode::basic).kind == Verdict::Kind::entails);
  testsup::Gen gen(61);
  for (int i = 0; i < 30; ++i) {
    Theory extended = t;
    extended.push_back(Inequality{gen.formula_bounded_meets(3, Mode::basic, 1),
                                  gen.formula_bounded_meets(3, Mode::basic, 1)});
    CHECK(decide(extended, goal, Mode::basic).kind == Verdict::Kind::entails);
  }
}

TEST_CASE("deterministic countermodels, serial and parallel agree") {
  testsup::Gen gen(62);
  for (int i = 0; i < 60; ++i) {
    Mode mode = i % 2 ? Mode::extended : Mode::basic;
    Model base = gen.model({"P", "Q", "R"}, mode);
    Theory t = gen.satisfiable_theory(base, gen.pick(0, 3), 3, mode, 1);
    Inequality goal{gen.formula_bounded_meets(3, mode, 1), gen.formula_bounded_meets(3, mode, 1)};
    Verdict serial = decide(t, goal, mode, {false});
    Verdict serial2 = decide(t, goal, mode, {false});
    Verdict parallel = decide(t, goal, mode, {true});
    CHECK(serial.kind == serial2.kind);
    CHECK(serial.kind == parallel.kind);
    if (serial.kind == Verdict::Kind::refutes) {
      CHECK(serial.countermodel->assignment() == serial2.countermodel->assignment());
      CHECK(serial.countermodel->assignment() == parallel.countermodel->assignment());
      CHECK(serial.refuting_signs == parallel.refuting_signs);
    }
  }
}

TEST_CASE("agreement with the brute-force oracle") {
  testsup::Gen gen(63);
  for (int i = 0; i < 150; ++i) {
    Mode mode = i % 3 == 0 ? Mode::extended : Mode::basic;
    Model base = gen.model({"P", "Q", "R"}, mode);
    Theory t = gen.satisfiable_theory(base, gen.pick(0, 2), 3, mode, 1);
    Inequality goal{gen.formula_bounded_meets(3, mode, 1), gen.formula_bounded_meets(3, mode, 1)};
    Verdict got = decide(t, goal, mode);
    bool want = testsup::oracle_entails(t, goal, mode);
    CHECK((got.kind == Verdict::Kind::entails) == want);
    if (got.kind == Verdict::Kind::refutes) {
      CHECK(satisfies_theory(*got.countermodel, t));
      CHECK_FALSE(satisfies(*got.countermodel, goal));
    } else {
      check_entails_certificates(got);
    }
  }
}

TEST_CASE("consistency reports") {
  // 1 <= P and P <= 0 cannot both hold.
  ConsistencyReport bad = consistent(parse_theory("1 <= P\nP <= 0\n", Mode::extended),
                                     Mode::extended);
  CHECK_FALSE(bad.consistent);
  for (const auto& br : bad.branches) {
    if (br.verdict.kind == LinearVerdict::Kind::entailed)
      CHECK(verify_certificate(br.system, br.target, br.verdict.certificate));
    else
      CHECK(verify_certificate(br.system, br.verdict.infeasibility));
  }

  ConsistencyReport empty = consistent({}, Mode::extended);
  CHECK(empty.consistent);
  REQUIRE(empty.witness.has_value());

  ConsistencyReport basic = consistent(parse_theory("0 <= Q\nQ <= 0\n", Mode::basic),
                                       Mode::basic);
  CHECK(basic.consistent);
  REQUIRE(basic.forced_zero.size() == 1);
  CHECK(basic.forced_zero[0].first == "Q");
  CHECK(basic.forced_zero[0].second);

  ConsistencyReport free_letter =
      consistent(parse_theory("0 <= Q\n", Mode::basic), Mode::basic);
  CHECK_FALSE(free_letter.forced_zero[0].second);
}

TEST_CASE("bound_by_unit") {
  // The constant 1 bounds every letter in the extended case.
  auto r1 = bound_by_unit({}, Formula::letter("P"), Formula::one(), Mode::extended);
  REQUIRE(r1.has_value());
  CHECK(*r1 == Rat(1));

  // No rational multiple of Q bounds P without hypotheses.
  auto r2 = bound_by_unit({}, Formula::letter("P"), Formula::letter("Q"), Mode::basic);
  CHECK_FALSE(r2.has_value());

  // A hypothesis that is itself the bound.
  auto r3 = bound_by_unit(parse_theory("P <= 3Q\n", Mode::basic), Formula::letter("P"),
                          Formula::letter("Q"), Mode::basic);
  REQUIRE(r3.has_value());
  CHECK(*r3 == Rat(3));

  // Returned bounds are entailed.
  for (auto& [theory_text, mode] :
       std::vector<std::pair<std::string, Mode>>{{"P <= 3Q\n", Mode::basic},
                                                 {"P <= Q\n0 <= Q\n", Mode::basic}}) {
    Theory t = parse_theory(theory_text, mode);
    auto r = bound_by_unit(t, Formula::letter("P"), Formula::letter("Q"), mode);
    if (r) {
      Inequality goal{Formula::letter("P"),
                      Formula::scale(*r, Formula::letter("Q"))};
      CHECK(decide(t, goal, mode).kind == Verdict::Kind::entails);
    }
  }
}

TEST_CASE("archimedean reports") {
  // Q forced to zero: every r works and -Q is entailed.
  ArchimedeanReport a = archimedean_pair(parse_theory("0 <= Q\nQ <= 0\n0 <= P\n", Mode::basic),
                                         Formula::letter("Q"), Formula::letter("P"),
                                         Mode::basic);
  CHECK(a.forall_r);
  CHECK(a.neg_phi);

  ArchimedeanReport b =
      archimedean_pair({}, Formula::letter("P"), Formula::letter("Q"), Mode::basic);
  CHECK_FALSE(b.forall_r);

  // Finite truncations of the non-Archimedean fixture: the premise fails.
  for (int n : {1, 3, 6}) {
    Theory t;
    for (int k = 1; k <= n; ++k) {
      t.push_back(parse_inequality("0 <= " + std::to_string(k) + "Q", Mode::basic));
      t.push_back(parse_inequality(std::to_string(k) + "Q <= P", Mode::basic));
    }
    ArchimedeanReport r = archimedean_pair(t, Formula::letter("Q"), Formula::letter("P"),
                                           Mode::basic);
    CHECK_FALSE(r.forall_r);
  }
}

TEST_CASE("archimedean property of finite theories, randomly") {
  testsup::Gen gen(64);
  for (int i = 0; i < 40; ++i) {
    Mode mode = i % 2 ? Mode::extended : Mode::basic;
    Model base = gen.model({"P", "Q"}, mode);
    Theory t = gen.satisfiable_theory(base, gen.pick(0, 2), 2, mode, 1);
    Formula phi = gen.formula_bounded_meets(2, mode, 1, 2);
    Formula psi = gen.formula_bounded_meets(2, mode, 1, 2);
    ArchimedeanReport r = archimedean_pair(t, phi, psi, mode);
    if (r.forall_r) CHECK(r.neg_phi);
    // The parametric route agrees with the direct reduction.
    bool phi_nonpos =
        decide(t, Inequality{phi, Formula::zero()}, mode).kind == Verdict::Kind::entails;
    bool psi_nonneg =
        decide(t, Inequality{Formula::zero(), psi}, mode).kind == Verdict::Kind::entails;
    CHECK(r.forall_r == (phi_nonpos && psi_nonneg));
  }
}

TEST_CASE("parametric interval shapes") {
  // T = {P <= 3Q}: r with P <= rQ is exactly {3}.
  QInterval i = parametric_interval(parse_theory("P <= 3Q\n", Mode::basic),
                                    sugar::neg(Formula::letter("P")), Formula::letter("Q"),
                                    Mode::basic);
  CHECK_FALSE(i.empty);
  REQUIRE(i.lo.has_value());
  REQUIRE(i.hi.has_value());
  CHECK(*i.lo == Rat(3));
  CHECK(*i.hi == Rat(3));
}
