#pragma once

#include <vector>

#include "kva/assoc_poly.hpp"
#include "kva/rational.hpp"
#include "kva/word.hpp"

namespace kva {

// Square matrix with arbitrary-precision integer entries, row-major.
struct IntMat {
  int n = 0;
  std::vector<mpz_class> a;

  static IntMat zero(int n) { return IntMat{n, std::vector<mpz_class>(std::size_t(n) * n)}; }
  mpz_class& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const mpz_class& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  bool strictly_upper() const;
};

// Trace of the product read left to right (letter 1 -> X, letter 2 -> Y);
// rotation-invariant. Requires matching sizes and a non-empty word.
mpz_class word_trace(Word w, const IntMat& X, const IntMat& Y);

// sum coefficient * word_trace(representative); well defined on necklaces.
Rational eval_cyclic(const CyclicVec& v, const IntMat& X, const IntMat& Y);

// Keeps necklaces containing `letter` exactly k times.
CyclicVec filter_by_letter_degree(const CyclicVec& v, int letter, int k);

// For strictly upper-triangular X, Y (all series finite): checks that the
// exact matrix log(exp(X) exp(Y)) equals the word-algebra expansion of the
// composition series of degree n-1 evaluated on X, Y.
bool bch_matrix_oracle(const IntMat& X, const IntMat& Y);

// The built-in 3x3 integer pair used by the counterexample command.
IntMat counterexample_x();
IntMat counterexample_y();

}  // namespace kva
