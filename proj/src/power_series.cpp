#include "kva/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace kva {

USeries& USeries::operator+=(const USeries& o) {
  if (o.order() != order()) throw std::invalid_argument("USeries: order mismatch");
  for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
  return *this;
}

USeries& USeries::operator-=(const USeries& o) {
  if (o.order() != order()) throw std::invalid_argument("USeries: order mismatch");
  for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
  return *this;
}

USeries USeries::alternated() const {
  USeries r(order());
  for (int k = 0; k <= order(); ++k) r.c_[k] = (k % 2 == 0) ? c_[k] : -c_[k];
  return r;
}

USeries useries_mul(const USeries& a, const USeries& b) {
  const int order = std::min(a.order(), b.order());
  USeries r(order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.coeff(j).is_zero()) continue;
      r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
    }
  }
  return r;
}

USeries useries_div(const USeries& a, const USeries& b) {
  if (b.coeff(0).is_zero())
    throw std::invalid_argument("USeries: division needs a unit constant term");
  const int order = std::min(a.order(), b.order());
  USeries r(order);
  for (int k = 0; k <= order; ++k) {
    Rational acc = a.coeff(k);
    for (int i = 1; i <= k; ++i) acc -= b.coeff(i) * r.coeff(k - i);
    r.set_coeff(k, acc / b.coeff(0));
  }
  return r;
}

USeries exp_series(int order) {
  USeries r(order);
  Rational inv_fact(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) inv_fact /= Rational(k);
    r.set_coeff(k, inv_fact);
  }
  return r;
}

USeries expm1_series(int order) {
  USeries r = exp_series(order);
  r.set_coeff(0, Rational(0));
  return r;
}

USeries one_minus_exp_neg_series(int order) {
  USeries r = expm1_series(order).alternated();
  // 1 - e^{-u} = -(e^{-u} - 1)
  USeries out(order);
  for (int k = 0; k <= order; ++k) out.set_coeff(k, -r.coeff(k));
  return out;
}

namespace {

// a(z) = (e^z - 1)/z = sum z^k/(k+1)!
USeries shifted_exp_series(int order, int shift) {
  USeries r(order);
  for (int k = 0; k <= order; ++k) {
    r.set_coeff(k, Rational(mpz_class(1), factorial(static_cast<unsigned>(k + shift))));
  }
  return r;
}

}  // namespace

USeries ber_series(int order) {
  USeries one(order);
  one.set_coeff(0, Rational(1));
  return useries_div(one, shifted_exp_series(order, 1));
}

Rational bernoulli(unsigned n) {
  const Rational c = ber_series(static_cast<int>(n)).coeff(static_cast<int>(n));
  return c * Rational(factorial(n));
}

USeries psi_series(int order) {
  const USeries num = shifted_exp_series(order, 2);
  const USeries a = shifted_exp_series(order, 1);
  return useries_div(num, useries_mul(a, a.alternated()));
}

TPoly::TPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

TPoly TPoly::constant(Rational c) { return TPoly({std::move(c)}); }

TPoly TPoly::monomial(Rational c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = std::move(c);
  return TPoly(std::move(v));
}

const Rational& TPoly::coeff(int k) const {
  static const Rational zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<std::size_t>(k)];
}

void TPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return TPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return TPoly(std::move(v));
}

TPoly TPoly::scaled(const Rational& s) const {
  if (s.is_zero()) return TPoly();
  std::vector<Rational> v(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) v[k] = c_[k] * s;
  return TPoly(std::move(v));
}

Rational TPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

Rational integrate_t(const TPoly& p) {
  Rational acc(0);
  for (int k = 0; k <= p.degree(); ++k) acc += p.coeff(k) / Rational(k + 1);
  return acc;
}

USeries TUSeries::at_t(const Rational& t) const {
  USeries r(order());
  for (int k = 0; k <= order(); ++k) r.set_coeff(k, c_[static_cast<std::size_t>(k)].eval(t));
  return r;
}

TUSeries ratio_series(int order) {
  // Numerator (1 - e^{-tu})/u has u^k coefficient (-1)^k t^{k+1}/(k+1)!,
  // denominator (1 - e^{-u})/u has u^k coefficient (-1)^k/(k+1)!.
  TUSeries num(order);
  USeries den(order);
  for (int k = 0; k <= order; ++k) {
    Rational base(mpz_class(1), factorial(static_cast<unsigned>(k + 1)));
    if (k % 2 == 1) base = -base;
    num.set_coeff(k, TPoly::monomial(base, k + 1));
    den.set_coeff(k, base);
  }
  TUSeries r(order);
  for (int k = 0; k <= order; ++k) {
    TPoly acc = num.coeff(k);
    for (int i = 1; i <= k; ++i) acc += (r.coeff(k - i) * TPoly::constant(-den.coeff(i)));
    r.set_coeff(k, std::move(acc));  // den.coeff(0) == 1
  }
  return r;
}

}  // namespace kva
