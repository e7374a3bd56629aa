#include <doctest.h>

#include "rvl/syntax.hpp"
#include "support/gen.hpp"

using namespace rvl;

TEST_CASE("grammar structure") {
  Inequality i1 = parse_inequality("2Q <= P", Mode::basic);
  CHECK(i1.lhs == Formula::scale(Rat(2), Formula::letter("Q")));
  CHECK(i1.rhs == Formula::letter("P"));

  Inequality i2 = parse_inequality("P", Mode::basic);
  CHECK(i2.lhs == Formula::zero());
  CHECK(i2.rhs == Formula::letter("P"));

  Formula f = parse_formula("min(P, 0) /\\ Q", Mode::basic);
  CHECK(f == Formula::meet(Formula::meet(Formula::letter("P"), Formula::zero()),
                           Formula::letter("Q")));

  // Meets bind looser than sums.
  Formula g = parse_formula("P + Q /\\ R", Mode::basic);
  CHECK(g == Formula::meet(Formula::add(Formula::letter("P"), Formula::letter("Q")),
                           Formula::letter("R")));

  // A scalar applies to the immediately following prim.
  Formula h = parse_formula("2(P + Q)", Mode::basic);
  CHECK(h == Formula::scale(Rat(2), Formula::add(Formula::letter("P"), Formula::letter("Q"))));

  // A leading minus folds into an explicit rational scalar.
  Formula k = parse_formula("-1/2(P + Q)", Mode::basic);
  CHECK(k == Formula::scale(Rat(-1, 2),
                            Formula::add(Formula::letter("P"), Formula::letter("Q"))));
  CHECK(parse_formula("-P", Mode::basic) == Formula::scale(Rat(-1), Formula::letter("P")));
  CHECK(parse_formula("P - 2Q", Mode::basic) ==
        Formula::add(Formula::letter("P"), Formula::scale(Rat(-2), Formula::letter("Q"))));
}

TEST_CASE("printer examples") {
  CHECK(print_formula(Formula::scale(Rat(2), Formula::letter("Q"))) == "2Q");
  CHECK(print_formula(Formula::meet(Formula::letter("P"), Formula::zero())) == "P /\\ 0");
  CHECK(print_formula(Formula::scale(
            Rat(-1, 2), Formula::add(Formula::letter("P"), Formula::letter("Q")))) ==
        "-1/2(P + Q)");
}

TEST_CASE("mode errors carry spans") {
  CHECK_THROWS_AS(parse_formula("1", Mode::basic), ParseError);
  CHECK_THROWS_AS(parse_formula("P + 3", Mode::basic), ParseError);
  try {
    parse_formula("P + 3", Mode::basic);
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::mode);
    CHECK(e.span.line == 1);
    CHECK(e.span.column == 5);
  }
  CHECK(parse_formula("1", Mode::extended) == Formula::one());
  CHECK(parse_formula("3", Mode::extended) == Formula::scale(Rat(3), Formula::one()));
}

TEST_CASE("syntax errors carry spans") {
  try {
    parse_formula("P + ", Mode::basic);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::syntax);
  }
  CHECK_THROWS_AS(parse_formula("min(P)", Mode::basic), ParseError);
  CHECK_THROWS_AS(parse_formula("P Q", Mode::basic), ParseError);
  CHECK_THROWS_AS(parse_formula("1/0", Mode::extended), ParseError);
}

TEST_CASE("theory and model files") {
  Theory t = parse_theory("2Q <= P\nQ\n", Mode::basic);
  REQUIRE(t.size() == 2);
  CHECK(t[0].lhs == Formula::scale(Rat(2), Formula::letter("Q")));
  CHECK(t[1].lhs == Formula::zero());

  CHECK(parse_theory("", Mode::basic).empty());
  CHECK(parse_theory("# just a comment\n\n", Mode::basic).empty());
  // CRLF accepted.
  CHECK(parse_theory("P <= Q\r\nQ <= R\r\n", Mode::basic).size() == 2);

  auto m = parse_model_file("P = -1\nQ = -2");
  CHECK(m.at("P") == Rat(-1));
  CHECK(m.at("Q") == Rat(-2));
  CHECK_THROWS_AS(parse_model_file("P = 1\nP = 2"), ParseError);
  CHECK(parse_model_file("H = 2/4").at("H") == Rat(1, 2));
}

TEST_CASE("round-trip on random core formulas") {
  testsup::Gen gen(7);
  for (int i = 0; i < 2000; ++i) {
    Mode mode = i % 2 == 0 ? Mode::basic : Mode::extended;
    Formula f = gen.formula(5, mode);
    std::string text = print_formula(f);
    CAPTURE(text);
    Formula back = parse_formula(text, mode);
    CHECK(back == f);
  }
}

TEST_CASE("inequality print round-trips") {
  testsup::Gen gen(8);
  for (int i = 0; i < 300; ++i) {
    Inequality ineq{gen.formula(3, Mode::basic), gen.formula(3, Mode::basic)};
    Inequality back = parse_inequality(print_inequality(ineq), Mode::basic);
    CHECK(back == ineq);
  }
}
