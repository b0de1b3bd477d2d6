#include <random>

#include "doctest.h"
#include "kva/kv_equations.hpp"
#include "kva/matrix_eval.hpp"

using namespace kva;

namespace {

IntMat random_strict_upper(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> entry(-3, 3);
  IntMat m = IntMat::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.at(i, j) = entry(rng);
  return m;
}

}  // namespace

TEST_CASE("word traces on the built-in pair") {
  const IntMat X = counterexample_x();
  const IntMat Y = counterexample_y();
  CHECK(word_trace(Word::parse("11112212"), X, Y) == -1);
  CHECK(word_trace(Word::parse("11112122"), X, Y) == 1);
  CHECK(word_trace(Word::parse("11121122"), X, Y) == -1);
  CHECK(word_trace(Word::parse("11122112"), X, Y) == -1);

  CHECK_THROWS_AS(word_trace(Word(), X, Y), std::invalid_argument);
  CHECK_THROWS_AS(word_trace(Word::single(1), X, IntMat::zero(2)), std::invalid_argument);
}

TEST_CASE("word trace is rotation invariant") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-4, 4);
  std::uniform_int_distribution<std::uint32_t> bits;
  for (int trial = 0; trial < 30; ++trial) {
    IntMat X = IntMat::zero(3), Y = IntMat::zero(3);
    for (auto& v : X.a) v = entry(rng);
    for (auto& v : Y.a) v = entry(rng);
    const int n = 1 + static_cast<int>(bits(rng) % 8);
    const Word w = Word::from_bits(bits(rng) & ((1u << n) - 1u), n);
    CHECK(word_trace(w, X, Y) == word_trace(w.rotated_left(), X, Y));
  }
}

TEST_CASE("cyclic evaluation") {
  const IntMat X = counterexample_x();
  const IntMat Y = counterexample_y();
  CyclicVec v;
  v.add_term(Necklace(Word::parse("12")), Rational(1));
  CHECK(eval_cyclic(v, X, Y) == Rational(word_trace(Word::parse("12"), X, Y)));

  // linearity
  CyclicVec w;
  w.add_term(Necklace(Word::parse("112")), Rational(2, 3));
  CyclicVec sum = v;
  sum += w;
  CHECK(eval_cyclic(sum, X, Y) == eval_cyclic(v, X, Y) + eval_cyclic(w, X, Y));
}

TEST_CASE("letter-degree filter partitions the degree-8 defect") {
  const CyclicVec defect = trace_defect(8);
  const CyclicVec y3 = filter_by_letter_degree(defect, 2, 3);
  CHECK(y3.terms().size() == 4);
  const CyclicVec y5 = filter_by_letter_degree(defect, 2, 5);
  CHECK(y5.terms().size() == 4);
  CHECK(y3 + y5 == defect);
  CHECK(filter_by_letter_degree(defect, 2, 0).is_zero());
  // the same split seen from the other letter
  CHECK(filter_by_letter_degree(defect, 1, 5) == y3);
  CHECK(filter_by_letter_degree(defect, 1, 3) == y5);

  const IntMat X = counterexample_x();
  const IntMat Y = counterexample_y();
  CHECK(eval_cyclic(y3, X, Y) == Rational(-16, 21772800));
  CHECK(eval_cyclic(y3, X, Y) != Rational(0));
}

TEST_CASE("composition-series matrix oracle on hand examples") {
  IntMat X = IntMat::zero(2);
  X.at(0, 1) = 1;
  CHECK(bch_matrix_oracle(X, IntMat::zero(2)));

  IntMat X3 = IntMat::zero(3), Y3 = IntMat::zero(3);
  X3.at(0, 1) = 1;
  Y3.at(1, 2) = 1;
  CHECK(bch_matrix_oracle(X3, Y3));

  IntMat lower = IntMat::zero(2);
  lower.at(1, 0) = 1;
  CHECK_THROWS_AS(bch_matrix_oracle(lower, IntMat::zero(2)), std::invalid_argument);
  CHECK_THROWS_AS(bch_matrix_oracle(IntMat::zero(2), IntMat::zero(3)),
                  std::invalid_argument);
}

TEST_CASE("matrix oracle on random nilpotent pairs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + trial % 4;
    CHECK(bch_matrix_oracle(random_strict_upper(rng, n), random_strict_upper(rng, n)));
  }
}
