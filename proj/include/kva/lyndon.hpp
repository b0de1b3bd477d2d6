#pragma once

#include <vector>

#include "kva/word.hpp"

namespace kva {

// Lyndon word together with its standard factorization (right factor is the
// lexicographically least proper suffix). Both factors empty for a letter.
struct LyndonWord {
  Word word;
  Word left;
  Word right;
};

// Free-Lie-algebra dimension in degree n: (1/n) sum_{d|n} mu(d) 2^{n/d}.
unsigned long long witt_dim(int n);

// All Lyndon words of length n in lexicographic order, factored. Cached.
const std::vector<LyndonWord>& lyndon_basis(int n);

// Position of w within lyndon_basis(w.size()), or -1 when w is not Lyndon.
int lyndon_index(Word w);

// Lexicographically least proper suffix of a Lyndon word of length >= 2.
Word std_right_factor(Word w);

}  // namespace kva
