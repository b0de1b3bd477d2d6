#pragma once

#include <vector>

#include "kva/rational.hpp"

namespace kva {

// Truncated univariate formal power series; coefficients for u^0 .. u^order.
class USeries {
 public:
  explicit USeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  void set_coeff(int k, Rational v) { c_[static_cast<std::size_t>(k)] = std::move(v); }

  USeries& operator+=(const USeries& o);
  USeries& operator-=(const USeries& o);
  friend USeries operator+(USeries a, const USeries& b) { return a += b; }
  friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
  friend bool operator==(const USeries& a, const USeries& b) { return a.c_ == b.c_; }

  // Replaces u by -u.
  USeries alternated() const;

 private:
  std::vector<Rational> c_;
};

// Truncated to the smaller order of the two factors.
USeries useries_mul(const USeries& a, const USeries& b);
// Requires b.coeff(0) != 0; truncated like useries_mul.
USeries useries_div(const USeries& a, const USeries& b);

// e^u, e^u - 1, 1 - e^{-u} truncated at `order`.
USeries exp_series(int order);
USeries expm1_series(int order);
USeries one_minus_exp_neg_series(int order);

// u/(e^u - 1); coefficient of u^k is B_k/k!.
USeries ber_series(int order);

// Bernoulli number B_n in the convention with B_1 = -1/2.
Rational bernoulli(unsigned n);

// (e^z - 1 - z)/((e^z - 1)(1 - e^{-z})), the removable singularity at 0 cancelled
// as (sum z^k/(k+2)!) / (a(z) a(-z)) with a(z) = (e^z - 1)/z.
USeries psi_series(int order);

// Polynomial in the scalar parameter t; no trailing zeros stored.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<Rational> coeffs);
  static TPoly constant(Rational c);
  static TPoly monomial(Rational c, int power);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  TPoly& operator+=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly scaled(const Rational& s) const;
  Rational eval(const Rational& t) const;

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

// Integral over [0, 1]: sum coeff(k)/(k+1).
Rational integrate_t(const TPoly& p);

// Truncated series in u whose coefficients are polynomials in t.
class TUSeries {
 public:
  explicit TUSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const TPoly& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  void set_coeff(int k, TPoly p) { c_[static_cast<std::size_t>(k)] = std::move(p); }

  // Substitutes a value for t, leaving a plain series in u.
  USeries at_t(const Rational& t) const;

 private:
  std::vector<TPoly> c_;
};

// (1 - e^{-tu})/(1 - e^{-u}) with the common factor u cancelled; the
// coefficient of u^k is a polynomial in t of degree k+1.
TUSeries ratio_series(int order);

}  // namespace kva
