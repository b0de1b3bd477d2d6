#pragma once

#include <map>

#include "kva/rational.hpp"
#include "kva/word.hpp"

namespace kva {

// Element of the free associative algebra on {1, 2} with rational coefficients,
// stored per degree. Words longer than max_degree are dropped on insertion;
// zero coefficients are never stored.
class AssocPoly {
 public:
  explicit AssocPoly(int max_degree);
  static AssocPoly unit(int max_degree);
  static AssocPoly monomial(Word w, Rational c, int max_degree);

  int max_degree() const { return max_degree_; }
  bool is_zero() const { return parts_.empty(); }
  Rational coeff(Word w) const;
  Rational constant_term() const { return coeff(Word()); }

  // degree -> (word -> coefficient); degrees with empty support are absent.
  const std::map<int, std::map<Word, Rational>>& parts() const { return parts_; }
  AssocPoly degree_slice(int n) const;
  AssocPoly truncated(int max_degree) const;

  void add_term(Word w, const Rational& c);

  AssocPoly& operator+=(const AssocPoly& o);
  AssocPoly& operator-=(const AssocPoly& o);
  friend AssocPoly operator+(AssocPoly a, const AssocPoly& b) { return a += b; }
  friend AssocPoly operator-(AssocPoly a, const AssocPoly& b) { return a -= b; }
  AssocPoly& operator*=(const Rational& s);
  friend AssocPoly operator*(const Rational& s, AssocPoly a) { return a *= s; }

  friend bool operator==(const AssocPoly& a, const AssocPoly& b) {
    return a.parts_ == b.parts_;
  }

 private:
  int max_degree_;
  std::map<int, std::map<Word, Rational>> parts_;
};

// Concatenation product truncated beyond max_degree.
AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b, int max_degree);

// sum a^k/k!; requires zero constant term.
AssocPoly assoc_exp(const AssocPoly& a, int max_degree);

// sum (-1)^{k+1} (a-1)^k/k; requires constant term exactly 1.
AssocPoly assoc_log(const AssocPoly& a, int max_degree);

// Finitely supported map from necklaces to rationals; no zero entries stored.
class CyclicVec {
 public:
  CyclicVec() = default;

  bool is_zero() const { return t_.empty(); }
  const std::map<Necklace, Rational>& terms() const { return t_; }
  Rational coeff(const Necklace& v) const;

  void add_term(const Necklace& v, const Rational& c);

  CyclicVec& operator+=(const CyclicVec& o);
  CyclicVec& operator-=(const CyclicVec& o);
  friend CyclicVec operator+(CyclicVec a, const CyclicVec& b) { return a += b; }
  friend CyclicVec operator-(CyclicVec a, const CyclicVec& b) { return a -= b; }
  CyclicVec& operator*=(const Rational& s);

  friend bool operator==(const CyclicVec& a, const CyclicVec& b) { return a.t_ == b.t_; }

 private:
  std::map<Necklace, Rational> t_;
};

// Projects onto the rotation quotient: rotations of a word accumulate on the
// canonical necklace. A nonzero constant term is discarded with a diagnostic
// on stderr; the quotient has no unit component.
CyclicVec cyclic_project(const AssocPoly& a);

}  // namespace kva
