#pragma once

#include <string>

#include "rvl/decide.hpp"

namespace rvl {

/// Lukasiewicz / continuous-logic formulas over {~, -., ->, (+), 1/2}.
/// -> and (+) are parser sugar over {~, -.}; 1/2 belongs to the continuous
/// fragment.
class LukFormula {
 public:
  enum class Kind { letter, neg, minus, half };

  static LukFormula letter(std::string name);
  static LukFormula neg(LukFormula f);                 // ~f
  static LukFormula minus(LukFormula f, LukFormula g); // f -. g
  static LukFormula half(LukFormula f);                // 1/2 f
  static LukFormula implies(LukFormula f, LukFormula g);  // ~(f -. g)
  static LukFormula oplus(LukFormula f, LukFormula g);    // ~(~f -. g)

  Kind kind() const { return n_->kind; }
  const std::string& name() const { return n_->name; }
  const LukFormula& left() const { return n_->a; }
  const LukFormula& right() const { return n_->b; }
  const LukFormula& inner() const { return n_->a; }

  LukFormula() = default;

 private:
  struct Node {
    Kind kind;
    std::string name;
    LukFormula a, b;
    Node(Kind k) : kind(k) {}
  };
  explicit LukFormula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// Grammar: imp := sum ("->" imp)? (right-assoc); sum := unary (("-." |
/// "(+)") unary)* (left-assoc); unary := "~" unary | "1/2" unary | letter |
/// "(" imp ")".
LukFormula parse_luk(const std::string& text);
std::string print_luk(const LukFormula& f);

/// Structural translation into the extended logic: ~x -> 1 + (-1)x,
/// x -. y -> (x - y) \/ 0, 1/2 x -> (1/2)x.
Formula translate(const LukFormula& f);

enum class LukConvention {
  luk,   // valid iff the translation is provably = 1 under 0 <= P_i
  cont,  // continuous-logic reading: provably = 0
};

/// Decides validity through the extended-mode engine with the letters
/// constrained to [0, 1]; Refutes countermodels are valuations in [0,1].
Verdict luk_valid(const LukFormula& f, LukConvention convention = LukConvention::luk,
                  DecideOptions opts = {});

}  // namespace rvl
