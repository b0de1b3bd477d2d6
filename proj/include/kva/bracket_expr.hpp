#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "kva/lie_elt.hpp"

namespace kva {

struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Nested bracket monomial: a generator leaf or an ordered pair of subtrees.
class BracketExpr {
 public:
  static BracketExpr leaf(int letter);
  static BracketExpr node(BracketExpr left, BracketExpr right);

  bool is_leaf() const { return letter_ != 0; }
  int letter() const { return letter_; }
  const BracketExpr& left() const { return *left_; }
  const BracketExpr& right() const { return *right_; }
  int degree() const;

  LieElt to_lie() const;
  std::string str() const;  // e.g. "[x,[x,y]]"

 private:
  BracketExpr() = default;
  int letter_ = 0;
  std::shared_ptr<const BracketExpr> left_;
  std::shared_ptr<const BracketExpr> right_;
};

// Parses a sum of rational multiples of bracket monomials over x, y (either
// case), e.g. "4*[[x,y],[y,x]] - 1/48*[X,[X,Y]]". Throws parse_error.
LieElt parse_bracket(std::string_view text);

// Sum of coefficient * nested-bracket terms, ordered by degree then word;
// every basis element prints via its standard factorization. Zero prints "0".
std::string print_bracket(const LieElt& e);

// Bracket form of a single Lyndon word's basis element.
std::string bracket_monomial_str(Word lyndon);

}  // namespace kva
