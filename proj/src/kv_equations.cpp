#include "kva/kv_equations.hpp"

#include "kva/power_series.hpp"

namespace kva {

LieElt f1_series(int N) {
  if (N < 1) throw std::invalid_argument("f1_series: degree must be >= 1");
  const LieElt z = bch_series(N);
  // psi stage: every composition of k adjoint factors of z raises the degree
  // by at least k, so order N covers all contributions.
  const LieElt v = ad_apply(psi_series(N), z, LieElt::x_plus_y(N), N);
  const TUSeries ratio = ratio_series(N - 1);

  LieElt out(N);
  LieElt powered = v;  // (ad x)^j applied to the psi stage
  const LieElt x = LieElt::generator(1, N);
  for (int j = 0; j < N; ++j) {
    if (j > 0) {
      powered = lie_bracket(x, powered, N);
      if (powered.is_zero()) break;
    }
    const TPoly& rho = ratio.coeff(j);
    for (const auto& [deg, terms] : powered.components()) {
      const int source_degree = deg - j;  // degree before the (ad x)^j stage
      if (source_degree < 1) continue;
      // weight = integral over [0,1] of rho(t) t^{source_degree - 1}
      Rational weight(0);
      for (int i = 0; i <= rho.degree(); ++i)
        weight += rho.coeff(i) / Rational(i + source_degree);
      if (weight.is_zero()) continue;
      for (const auto& [w, c] : terms) out.add_term(w, c * weight);
    }
  }
  return out;
}

LieElt f0_series(int N) {
  const LieElt f1 = f1_series(N);
  const LieElt conjugated =
      ad_apply(exp_series(N), LieElt::generator(1, N),
               substitute(f1, SubstMode::negate_both), N);
  LieElt out = f1 + conjugated;
  out *= Rational(1, 2);
  LieElt tail = bch_series(N) - LieElt::generator(1, N);
  tail *= Rational(1, 4);
  out += tail;
  return out;
}

LieElt g0_series(int N) { return substitute(f0_series(N), SubstMode::swap_negate); }

KvPair solvable_pair(int N) { return KvPair{f0_series(N), g0_series(N), N}; }

AssocPoly partial_strip(const AssocPoly& a, int letter) {
  AssocPoly r(a.max_degree());
  for (const auto& [deg, terms] : a.parts()) {
    if (deg == 0) continue;
    for (const auto& [w, c] : terms) {
      if (w.last_letter() == letter) r.add_term(w.dropped_last(), c);
    }
  }
  return r;
}

CyclicVec divergence(const LieElt& a, const LieElt& b) {
  const int max_degree = std::max(a.max_degree(), b.max_degree());
  const AssocPoly xa = assoc_mul(AssocPoly::monomial(Word::single(1), Rational(1), 1),
                                 partial_strip(lie_to_assoc(a), 1), max_degree);
  const AssocPoly yb = assoc_mul(AssocPoly::monomial(Word::single(2), Rational(1), 1),
                                 partial_strip(lie_to_assoc(b), 2), max_degree);
  return cyclic_project(xa + yb);
}

CyclicVec kv2_lhs(int N) {
  const LieElt f0 = f0_series(N);
  return divergence(f0.degree_part(N), substitute(f0, SubstMode::swap_negate).degree_part(N));
}

CyclicVec kv2_rhs(int N) {
  const USeries ber = ber_series(N);
  AssocPoly acc(N);
  for (int letter : {1, 2}) {
    const AssocPoly gen = AssocPoly::monomial(Word::single(letter), Rational(1), N);
    AssocPoly power = AssocPoly::unit(N);
    for (int k = 0; k <= N; ++k) {
      if (k > 0) power = assoc_mul(power, gen, N);
      AssocPoly term = power;
      term *= ber.coeff(k);
      acc += term;
    }
  }
  const AssocPoly z = lie_to_assoc(bch_series(N));
  AssocPoly zpower = AssocPoly::unit(N);
  for (int k = 0; k <= N; ++k) {
    if (k > 0) {
      zpower = assoc_mul(zpower, z, N);
      if (zpower.is_zero()) break;
    }
    AssocPoly term = zpower;
    term *= -ber.coeff(k);
    acc += term;
  }
  acc.add_term(Word(), Rational(-1));  // the four constant terms cancel exactly
  acc *= Rational(1, 2);
  return cyclic_project(acc.degree_slice(N));
}

LieElt kv1_residual(const KvPair& pair, int N) {
  LieElt residual = LieElt::x_plus_y(N) - bch_reversed(N);
  residual -= ad_apply(one_minus_exp_neg_series(N), LieElt::generator(1, N),
                       pair.f.truncated(N), N);
  residual -= ad_apply(expm1_series(N), LieElt::generator(2, N), pair.g.truncated(N), N);
  return residual;
}

CyclicVec trace_defect(int N) { return kv2_rhs(N) - kv2_lhs(N); }

}  // namespace kva
