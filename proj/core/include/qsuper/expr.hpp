#pragma once

#include "qsuper/algebra.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsuper {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// expr := term (("+"|"-") term)* ; term := factor ("*"? factor)* ;
// factor := atom ("^" sint)? ; atom := gen | scalar | "(" expr ")" | "qbr(" expr "," expr "," sint ")" ;
// gen := ("e"|"f"|"k") uint ; scalar := rational | "q" ("^" sint)? ; rational := sint ("/" uint)?
// A leading "-" negates a term.
struct Expr {
  enum class Kind { Sum, Product, Power, Gen, Rational, QPower, QBracket };
  Kind kind = Kind::Rational;
  std::vector<std::shared_ptr<const Expr>> children;
  std::vector<int> signs;  // Sum: +1 / -1 per child
  char gen = 'e';
  int index = 0;           // Gen: 1-based simple index
  long exponent = 1;       // Power, QPower, QBracket (n of q^n)
  Rational value;          // Rational

  std::string to_string() const;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(const std::string& text);
// throws std::invalid_argument for out-of-range indices or non-invertible negative powers
Element eval_expr(const Expr& e, const Algebra& a);
Element eval_text(const std::string& text, const Algebra& a);

}  // namespace qsuper
