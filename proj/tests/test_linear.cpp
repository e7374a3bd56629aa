#include <doctest.h>

#include "rvl/linear.hpp"
#include "rvl/semantics.hpp"
#include "rvl/syntax.hpp"
#include "support/gen.hpp"

using namespace rvl;

namespace {

Formula meet_free(testsup::Gen& gen, int depth, Mode mode) {
  for (;;) {
    Formula f = gen.formula(depth, mode);
    if (meet_count(f) == 0) return f;
  }
}

}  // namespace

TEST_CASE("normal forms of meet-free formulas") {
  LinearForm a = linearize(parse_formula("P + P", Mode::basic));
  CHECK(a.coeffs.at("P") == Rat(2));
  CHECK(a.affine == Rat(0));

  LinearForm b = linearize(parse_formula("2(P - Q) + Q", Mode::basic));
  CHECK(b.coeffs.at("P") == Rat(2));
  CHECK(b.coeffs.at("Q") == Rat(-1));

  LinearForm c = linearize(parse_formula("3 + P - 1", Mode::extended));
  CHECK(c.coeffs.at("P") == Rat(1));
  CHECK(c.affine == Rat(2));

  CHECK_THROWS_AS(linearize(parse_formula("P /\\ Q", Mode::basic)), NotLinearError);
  CHECK_THROWS_AS(linearize(parse_formula("0(P /\\ Q)", Mode::basic)), NotLinearError);
}

TEST_CASE("vector operations") {
  LinearForm p = linearize(Formula::letter("P"));
  CHECK(lf_add(p, lf_neg(p)).is_zero());
  CHECK(lf_scale(Rat(0), p).is_zero());
  LinearForm pq = linearize(parse_formula("P - 2Q", Mode::basic));
  LinearForm q = linearize(Formula::letter("Q"));
  LinearForm d = lf_sub(pq, q);
  CHECK(d.coeffs.at("P") == Rat(1));
  CHECK(d.coeffs.at("Q") == Rat(-3));
}

TEST_CASE("emitting normal forms") {
  CHECK(lf_to_formula(LinearForm{}) == Formula::zero());
  LinearForm two_p;
  two_p.coeffs.emplace("P", Rat(2));
  CHECK(lf_to_formula(two_p) == Formula::scale(Rat(2), Formula::letter("P")));
  LinearForm mix;
  mix.coeffs.emplace("P", Rat(1));
  mix.coeffs.emplace("Q", Rat(-1));
  CHECK(lf_to_formula(mix, {"P", "Q"}) ==
        Formula::add(Formula::letter("P"), Formula::scale(Rat(-1), Formula::letter("Q"))));
  CHECK_THROWS(lf_to_formula(mix, {"P"}));
}

TEST_CASE("normal form preserves evaluation exactly") {
  testsup::Gen gen(31);
  for (int i = 0; i < 400; ++i) {
    Mode mode = i % 2 ? Mode::extended : Mode::basic;
    Formula f = meet_free(gen, 4, mode);
    LinearForm nf = linearize(f);
    Formula back = lf_to_formula(nf);
    auto letters = letters_of(f);
    Model m = gen.model(letters, mode);
    CHECK(eval(f, m) == eval(back, m));
    CHECK(linearize(back) == nf);
  }
}

TEST_CASE("linearize is a homomorphism") {
  testsup::Gen gen(32);
  for (int i = 0; i < 200; ++i) {
    Formula f = meet_free(gen, 3, Mode::basic);
    Formula g = meet_free(gen, 3, Mode::basic);
    Rat q = gen.rat();
    CHECK(linearize(Formula::add(f, g)) == lf_add(linearize(f), linearize(g)));
    CHECK(linearize(Formula::scale(q, f)) == lf_scale(q, linearize(f)));
  }
}
