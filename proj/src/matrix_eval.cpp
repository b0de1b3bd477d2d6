#include "kva/matrix_eval.hpp"

#include <stdexcept>

#include "kva/bch.hpp"
#include "kva/lie_elt.hpp"

namespace kva {

namespace {

using RatMat = std::vector<Rational>;  // n x n row-major

RatMat rat_identity(int n) {
  RatMat m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = Rational(1);
  return m;
}

RatMat rat_mul(const RatMat& a, const RatMat& b, int n) {
  RatMat out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rational& aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Rational& bkj = b[static_cast<std::size_t>(k) * n + j];
        if (!bkj.is_zero()) out[static_cast<std::size_t>(i) * n + j] += aik * bkj;
      }
    }
  return out;
}

RatMat rat_from_int(const IntMat& m) {
  RatMat out(m.a.size());
  for (std::size_t i = 0; i < m.a.size(); ++i) out[i] = Rational(m.a[i]);
  return out;
}

// exp of a strictly upper-triangular matrix: the series ends at power n-1.
RatMat rat_exp_nilpotent(const IntMat& m) {
  const int n = m.n;
  RatMat acc = rat_identity(n);
  RatMat power = rat_identity(n);
  Rational inv_fact(1);
  const RatMat base = rat_from_int(m);
  for (int k = 1; k < n; ++k) {
    power = rat_mul(power, base, n);
    inv_fact /= Rational(k);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += inv_fact * power[i];
  }
  return acc;
}

RatMat rat_log_unipotent(const RatMat& p, int n) {
  RatMat u = p;
  for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i) * n + i] -= Rational(1);
  RatMat acc(static_cast<std::size_t>(n) * n);
  RatMat power = rat_identity(n);
  for (int k = 1; k < n; ++k) {
    power = rat_mul(power, u, n);
    const Rational coeff(k % 2 == 1 ? 1 : -1, k);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += coeff * power[i];
  }
  return acc;
}

RatMat eval_word(Word w, const RatMat& x, const RatMat& y, int n) {
  RatMat acc = (w.letter(0) == 1) ? x : y;
  for (int i = 1; i < w.size(); ++i) acc = rat_mul(acc, w.letter(i) == 1 ? x : y, n);
  return acc;
}

}  // namespace

bool IntMat::strictly_upper() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

mpz_class word_trace(Word w, const IntMat& X, const IntMat& Y) {
  if (X.n != Y.n) throw std::invalid_argument("word_trace: size mismatch");
  if (w.empty()) throw std::invalid_argument("word_trace: empty word");
  const int n = X.n;
  std::vector<mpz_class> acc((w.letter(0) == 1 ? X : Y).a);
  std::vector<mpz_class> next(static_cast<std::size_t>(n) * n);
  for (int s = 1; s < w.size(); ++s) {
    const IntMat& m = (w.letter(s) == 1) ? X : Y;
    for (auto& v : next) v = 0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const mpz_class& aik = acc[static_cast<std::size_t>(i) * n + k];
        if (aik == 0) continue;
        for (int j = 0; j < n; ++j) next[static_cast<std::size_t>(i) * n + j] += aik * m.at(k, j);
      }
    std::swap(acc, next);
  }
  mpz_class trace = 0;
  for (int i = 0; i < n; ++i) trace += acc[static_cast<std::size_t>(i) * n + i];
  return trace;
}

Rational eval_cyclic(const CyclicVec& v, const IntMat& X, const IntMat& Y) {
  Rational acc(0);
  for (const auto& [neck, c] : v.terms()) acc += c * Rational(word_trace(neck.rep(), X, Y));
  return acc;
}

CyclicVec filter_by_letter_degree(const CyclicVec& v, int letter, int k) {
  CyclicVec out;
  for (const auto& [neck, c] : v.terms())
    if (neck.rep().count(letter) == k) out.add_term(neck, c);
  return out;
}

bool bch_matrix_oracle(const IntMat& X, const IntMat& Y) {
  if (X.n != Y.n) throw std::invalid_argument("bch_matrix_oracle: size mismatch");
  if (!X.strictly_upper() || !Y.strictly_upper())
    throw std::invalid_argument("bch_matrix_oracle: inputs must be strictly upper triangular");
  const int n = X.n;
  if (n < 2) return true;
  const RatMat product = rat_mul(rat_exp_nilpotent(X), rat_exp_nilpotent(Y), n);
  const RatMat expected = rat_log_unipotent(product, n);

  const AssocPoly z = lie_to_assoc(bch_series(n - 1));
  RatMat actual(static_cast<std::size_t>(n) * n);
  const RatMat rx = rat_from_int(X);
  const RatMat ry = rat_from_int(Y);
  for (const auto& [deg, terms] : z.parts())
    for (const auto& [w, c] : terms) {
      const RatMat m = eval_word(w, rx, ry, n);
      for (std::size_t i = 0; i < actual.size(); ++i)
        if (!m[i].is_zero()) actual[i] += c * m[i];
    }
  return actual == expected;
}

IntMat counterexample_x() {
  IntMat m = IntMat::zero(3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 2) = 1;
  return m;
}

IntMat counterexample_y() {
  IntMat m = IntMat::zero(3);
  m.at(1, 0) = 1;
  m.at(2, 1) = -1;
  return m;
}

}  // namespace kva
