#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvl/rational.hpp"

namespace rvl {

enum class Mode { basic, extended };

/// Raised when extended-only syntax (the constant 1, nonzero literals,
/// axiom a15) shows up in basic mode.
struct ModeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Immutable formula tree over {0, 1, letters, +, /\, rational scale}.
/// Values share subtrees; equality is structural.
class Formula {
 public:
  enum class Kind { zero, one, letter, add, meet, scale };

  Formula() : Formula(zero()) {}

  static Formula zero();
  static Formula one();
  static Formula letter(std::string name);
  static Formula add(Formula l, Formula r);
  static Formula meet(Formula l, Formula r);
  static Formula scale(Rat q, Formula inner);

  Kind kind() const { return n_->kind; }
  bool is(Kind k) const { return n_->kind == k; }
  const std::string& name() const { return n_->name; }
  const Rat& scalar() const { return n_->scalar; }
  const Formula& left() const { return n_->a; }
  const Formula& right() const { return n_->b; }
  const Formula& inner() const { return n_->a; }

  friend bool operator==(const Formula& x, const Formula& y) { return equal(x, y); }
  friend bool operator!=(const Formula& x, const Formula& y) { return !equal(x, y); }

  /// Total order on trees (kind, then payload, then children); used for
  /// deterministic canonical forms.
  static int compare(const Formula& x, const Formula& y);

 private:
  struct Node {
    Kind kind;
    Rat scalar;
    std::string name;
    Formula a, b;
    Node(Kind k) : kind(k) {}
  };
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static bool equal(const Formula& x, const Formula& y);
  std::shared_ptr<const Node> n_;
};

/// Derived connectives, expanded to the core constructors exactly as the
/// abbreviations define them. Purely syntactic.
namespace sugar {

/// -f  :=  (-1)f
Formula neg(Formula f);
/// f - g  :=  f + (-1)g
Formula sub(Formula f, Formula g);
/// f \/ g  :=  -(-f /\ -g)
Formula join(Formula f, Formula g);
/// f+  :=  0 \/ f
Formula pos(Formula f);
/// f-  :=  0 \/ (-f)
Formula negp(Formula f);
/// |f|  :=  f \/ (-f)
Formula abs(Formula f);
/// Numeric literal q as q*1 (extended mode); 0 stays the constant 0.
Formula lit(const Rat& q, Mode mode);

}  // namespace sugar

struct Inequality {
  Formula lhs, rhs;
  friend bool operator==(const Inequality& a, const Inequality& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

/// Finite ordered sequence of inequalities.
using Theory = std::vector<Inequality>;

/// Sorted (lexicographic) list of the distinct letters occurring in f.
std::vector<std::string> letters_of(const Formula& f);
std::vector<std::string> letters_of(const Theory& t);
std::vector<std::string> letters_of(const Theory& t, const Inequality& goal);

/// True iff the constant 1 occurs somewhere in f.
bool uses_one(const Formula& f);

/// Number of meet nodes in f.
std::size_t meet_count(const Formula& f);

/// Throws ModeError if f is illegal in the given mode.
void require_mode(const Formula& f, Mode mode);

}  // namespace rvl
