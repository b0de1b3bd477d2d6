#pragma once

#include <map>
#include <stdexcept>

#include "kva/assoc_poly.hpp"
#include "kva/power_series.hpp"
#include "kva/rational.hpp"
#include "kva/word.hpp"

namespace kva {

// Thrown by dynkin_to_lie when a degree component fails the round-trip check.
struct not_lie_error : std::invalid_argument {
  explicit not_lie_error(int deg)
      : std::invalid_argument("not a Lie element (degree " + std::to_string(deg) + ")"),
        degree(deg) {}
  int degree;
};

// Free Lie algebra element in Lyndon-word coordinates, graded by degree.
// Keys of each component are Lyndon words of that length; no zeros stored.
class LieElt {
 public:
  explicit LieElt(int max_degree);
  static LieElt generator(int letter, int max_degree);
  static LieElt x_plus_y(int max_degree);

  int max_degree() const { return max_degree_; }
  bool is_zero() const { return comps_.empty(); }
  int min_degree() const;  // 0 when zero

  const std::map<int, std::map<Word, Rational>>& components() const { return comps_; }
  Rational coeff(Word lyndon) const;
  LieElt degree_part(int n) const;
  LieElt truncated(int max_degree) const;

  // Accumulates; w must be a Lyndon word (checked). Drops beyond max_degree.
  void add_term(Word w, const Rational& c);

  LieElt& operator+=(const LieElt& o);
  LieElt& operator-=(const LieElt& o);
  friend LieElt operator+(LieElt a, const LieElt& b) { return a += b; }
  friend LieElt operator-(LieElt a, const LieElt& b) { return a -= b; }
  LieElt& operator*=(const Rational& s);
  friend LieElt operator*(const Rational& s, LieElt a) { return a *= s; }
  LieElt operator-() const;

  friend bool operator==(const LieElt& a, const LieElt& b) { return a.comps_ == b.comps_; }

 private:
  int max_degree_;
  std::map<int, std::map<Word, Rational>> comps_;
};

// Bilinear bracket normalized to Lyndon coordinates by standard-factorization
// rewriting; terms above max_degree are discarded.
LieElt lie_bracket(const LieElt& a, const LieElt& b, int max_degree);

// Expands every basis element as a nested commutator in the word algebra.
AssocPoly lie_to_assoc(const LieElt& e);

// Left-normed bracketing projection: degree-n words are bracketed as
// [[...[l1,l2],...],ln] and divided by n. The result is verified by expanding
// back; a mismatch throws not_lie_error with the offending degree.
LieElt dynkin_to_lie(const AssocPoly& a);

enum class SubstMode { negate_both, swap, swap_negate };

// Generator substitutions: e(-x,-y), e(y,x), e(-y,-x).
LieElt substitute(const LieElt& e, SubstMode mode);

// sum_k series[k] (ad w)^k (target), truncated beyond max_degree.
LieElt ad_apply(const USeries& series, const LieElt& w, const LieElt& target,
                int max_degree);

}  // namespace kva
