#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "rvl/formula.hpp"

namespace rvl {

struct SourceSpan {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  int length = 1;
};

struct ParseError : std::runtime_error {
  enum class Kind { syntax, mode };
  ParseError(Kind k, SourceSpan s, const std::string& msg)
      : std::runtime_error(msg), kind(k), span(s) {}
  Kind kind;
  SourceSpan span;
};

/// Concrete grammar (ASCII, whitespace-insensitive, "#" comments):
///   ineq    := formula "<=" formula | formula        (bare = "0 <= formula")
///   formula := sum ( "/\" sum | "\/" sum )*
///   sum     := signed ( ("+"|"-") signed )*
///   signed  := ["-"] scaled
///   scaled  := rational ["*"] prim | prim
///   prim    := "0" | "1" | rational | ident | "(" formula ")"
///            | "min(" f "," f ")" | "max(" f "," f ")"
///            | "abs(" f ")" | "pos(" f ")" | "neg(" f ")"
///   rational:= integer [ "/" positive-integer ]
/// min maps to the meet constructor; "\/", max, abs, pos, neg expand to the
/// core connectives and never appear in the tree. A leading minus folds into
/// an immediately following rational scalar ("-1/2P" is one scale node).
Formula parse_formula(const std::string& text, Mode mode);
Inequality parse_inequality(const std::string& text, Mode mode);

/// One inequality per non-comment line.
Theory parse_theory(const std::string& text, Mode mode);

/// Lines "ident = rational". Duplicate letters are an error.
std::map<std::string, Rat> parse_model_file(const std::string& text);

/// "p", "p/q", optionally with a leading '-'; whole-string.
Rat parse_rational(const std::string& text);

/// Output reparses to a structurally identical formula.
std::string print_formula(const Formula& f);
std::string print_inequality(const Inequality& ineq);

}  // namespace rvl
