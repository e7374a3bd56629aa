#include <doctest.h>

#include "rvl/semantics.hpp"
#include "rvl/syntax.hpp"
#include "support/gen.hpp"

using namespace rvl;

TEST_CASE("evaluation clauses") {
  Model m({{"P", Rat(3, 2)}, {"Q", Rat(-1)}}, Mode::basic);
  CHECK(eval(parse_formula("P /\\ Q", Mode::basic), m) == Rat(-1));
  Model m2({{"P", Rat(1)}, {"Q", Rat(1)}}, Mode::basic);
  CHECK(eval(parse_formula("2Q - P", Mode::basic), m2) == Rat(1));
  Model m3({{"P", Rat(-3, 2)}}, Mode::basic);
  CHECK(eval(parse_formula("abs(P)", Mode::basic), m3) == Rat(3, 2));
  CHECK_THROWS_AS(eval(Formula::letter("Z"), m), EvalError);
}

TEST_CASE("satisfaction") {
  Model m({{"P", Rat(-2)}, {"Q", Rat(-1)}}, Mode::basic);
  CHECK(satisfies(m, parse_inequality("2Q <= P", Mode::basic)));
  CHECK_FALSE(satisfies(m, parse_inequality("Q <= P", Mode::basic)));
  CHECK(satisfies(m, parse_inequality("0 <= 0", Mode::basic)));
  CHECK(satisfies_theory(m, parse_theory("2Q <= P\n", Mode::basic)));
}

TEST_CASE("extended models live in the unit box") {
  CHECK_THROWS_AS(Model({{"P", Rat(2)}}, Mode::extended), EvalError);
  Model ok({{"P", Rat(1)}}, Mode::extended);
  CHECK(eval(parse_formula("1 - P", Mode::extended), ok) == Rat(0));
}

TEST_CASE("algebraic evaluation identities, randomly") {
  testsup::Gen gen(21);
  for (int i = 0; i < 400; ++i) {
    Formula f = gen.formula(4, Mode::basic);
    Formula g = gen.formula(4, Mode::basic);
    auto letters = letters_of(Formula::add(f, g));
    Model m = gen.model(letters, Mode::basic);
    // -(-f) evaluates like f.
    CHECK(eval(sugar::neg(sugar::neg(f)), m) == eval(f, m));
    // join is max.
    Rat vf = eval(f, m), vg = eval(g, m);
    CHECK(eval(sugar::join(f, g), m) == (vf >= vg ? vf : vg));
    // f+ - f- = f.
    CHECK(eval(sugar::pos(f), m) - eval(sugar::negp(f), m) == vf);
  }
}

TEST_CASE("finite truncations of the non-Archimedean theory are satisfiable") {
  for (int n = 1; n <= 20; ++n) {
    Theory t;
    for (int k = 1; k <= n; ++k) {
      t.push_back(parse_inequality("0 <= " + std::to_string(k) + "Q", Mode::basic));
      t.push_back(parse_inequality(std::to_string(k) + "Q <= P", Mode::basic));
    }
    Model m({{"Q", Rat(1)}, {"P", Rat(n)}}, Mode::basic);
    CHECK(satisfies_theory(m, t));
    CHECK(eval(Formula::letter("Q"), m) > Rat(0));
  }
}

TEST_CASE("polynomial order induced by r < x") {
  PolyValue five{Rat(5)};
  PolyValue x = PolyValue::monomial(Rat(1), 1);
  CHECK(poly_leq(five, x));
  CHECK_FALSE(poly_leq(x, five));
  CHECK(poly_leq(x, x));

  PolyModel m;
  m.assignment.emplace("P0", PolyValue{Rat(1)});
  m.assignment.emplace("P1", x);
  Formula f = parse_formula("P0 /\\ P1", Mode::basic);
  CHECK(poly_eval(f, m) == PolyValue{Rat(1)});
}

TEST_CASE("powers of x satisfy every finite scaling bound") {
  PolyModel m;
  for (int i = 0; i <= 6; ++i)
    m.assignment.emplace("P" + std::to_string(i), PolyValue::monomial(Rat(1), i));
  for (int i = 0; i <= 5; ++i) {
    PolyValue lo;
    PolyValue xi = m.assignment.at("P" + std::to_string(i));
    PolyValue xi1 = m.assignment.at("P" + std::to_string(i + 1));
    for (int r : {1, 2, 10, 1000}) {
      PolyValue scaled = xi.scaled(Rat(r));
      CHECK(poly_leq(lo, scaled));
      CHECK(poly_leq(scaled, xi1));
    }
  }
}

TEST_CASE("generalized semantics rejects extended mode") {
  PolyModel m;
  CHECK_THROWS_AS(poly_eval(Formula::one(), m), ModeError);
}
