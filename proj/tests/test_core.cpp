#include <doctest.h>

#include "rvl/formula.hpp"
#include "rvl/semantics.hpp"
#include "rvl/syntax.hpp"
#include "support/gen.hpp"

using namespace rvl;

TEST_CASE("sugar expands to the printed definitions") {
  Formula p = Formula::letter("P");
  Formula q = Formula::letter("Q");

  // max(P,Q) = -( -P /\ -Q )
  Formula mx = sugar::join(p, q);
  CHECK(mx == Formula::scale(Rat(-1), Formula::meet(Formula::scale(Rat(-1), p),
                                                    Formula::scale(Rat(-1), q))));

  // pos(0) evaluates to 0 at every model.
  Formula p0 = sugar::pos(Formula::zero());
  Model m({{"P", Rat(5)}}, Mode::basic);
  CHECK(eval(p0, m) == Rat(0));

  // abs(P) at P = -3/2 is 3/2.
  Model m2({{"P", Rat(-3, 2)}}, Mode::basic);
  CHECK(eval(sugar::abs(p), m2) == Rat(3, 2));
}

TEST_CASE("numeric literals require extended mode") {
  CHECK(sugar::lit(Rat(0), Mode::basic) == Formula::zero());
  CHECK_THROWS_AS(sugar::lit(Rat(1), Mode::basic), ModeError);
  CHECK(sugar::lit(Rat(2, 3), Mode::extended) ==
        Formula::scale(Rat(2, 3), Formula::one()));
}

TEST_CASE("letters_of is sorted and duplicate-free") {
  CHECK(letters_of(Formula::zero()).empty());
  Formula f = parse_formula("2Q - P", Mode::basic);
  CHECK(letters_of(f) == std::vector<std::string>{"P", "Q"});
  Formula g = parse_formula("P /\\ (P + Q)", Mode::basic);
  CHECK(letters_of(g) == std::vector<std::string>{"P", "Q"});
}

TEST_CASE("letters_of matches the letters in the source text") {
  testsup::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen.formula(4, Mode::basic);
    auto names = letters_of(f);
    std::string printed = print_formula(f);
    for (const auto& name : names)
      CHECK(printed.find(name) != std::string::npos);
  }
}

TEST_CASE("sugar expansion commutes with letter renaming") {
  testsup::Gen gen(12);
  auto rename = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == 'P')
        out += 'X';
      else if (c == 'Q')
        out += 'Y';
      else
        out += c;
    }
    return out;
  };
  for (int i = 0; i < 100; ++i) {
    Formula f = gen.formula(3, Mode::basic, 2);
    std::string text = print_formula(f);
    Formula renamed_parse = parse_formula(rename(text), Mode::basic);
    // Renaming the printed text equals printing and reparsing with renamed
    // letters.
    CHECK(print_formula(renamed_parse) == rename(print_formula(f)));
  }
}

TEST_CASE("piece count bookkeeping") {
  CHECK(meet_count(parse_formula("P", Mode::basic)) == 0);
  CHECK(meet_count(parse_formula("P /\\ Q", Mode::basic)) == 1);
  CHECK(meet_count(parse_formula("(P /\\ 0) /\\ Q", Mode::basic)) == 2);
}
