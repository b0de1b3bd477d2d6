#include "kva/bch.hpp"

#include <mutex>

#include "kva/assoc_poly.hpp"

namespace kva {

namespace {

struct BchCache {
  std::mutex mutex;
  int max_degree = 0;
  LieElt z{1};
};

BchCache& bch_cache() {
  static BchCache c;
  return c;
}

LieElt compute_bch(int N) {
  const AssocPoly ex = assoc_exp(AssocPoly::monomial(Word::single(1), Rational(1), N), N);
  const AssocPoly ey = assoc_exp(AssocPoly::monomial(Word::single(2), Rational(1), N), N);
  return dynkin_to_lie(assoc_log(assoc_mul(ex, ey, N), N));
}

}  // namespace

LieElt bch_series(int N) {
  if (N < 1) throw std::invalid_argument("bch_series: degree must be >= 1");
  auto& cache = bch_cache();
  std::lock_guard lock(cache.mutex);
  if (cache.max_degree < N) {
    cache.z = compute_bch(N);
    cache.max_degree = N;
  }
  return cache.z.truncated(N);
}

LieElt bch_reversed(int N) { return substitute(bch_series(N), SubstMode::swap); }

LieElt ScaledBch::at_t(const Rational& t) const {
  LieElt out(z.max_degree());
  Rational power(1);
  int at = 0;
  for (const auto& [deg, terms] : z.components()) {
    while (at < deg) {
      power *= t;
      ++at;
    }
    for (const auto& [w, c] : terms) out.add_term(w, c * power);
  }
  return out;
}

ScaledBch bch_scaled(int N) { return ScaledBch{bch_series(N)}; }

}  // namespace kva
