#include "kva/assoc_poly.hpp"

#include <iostream>
#include <stdexcept>

namespace kva {

AssocPoly::AssocPoly(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 0 || max_degree > Word::kMaxLen)
    throw std::invalid_argument("AssocPoly: bad truncation degree");
}

AssocPoly AssocPoly::unit(int max_degree) {
  AssocPoly p(max_degree);
  p.add_term(Word(), Rational(1));
  return p;
}

AssocPoly AssocPoly::monomial(Word w, Rational c, int max_degree) {
  AssocPoly p(max_degree);
  p.add_term(w, c);
  return p;
}

Rational AssocPoly::coeff(Word w) const {
  auto dit = parts_.find(w.size());
  if (dit == parts_.end()) return Rational(0);
  auto it = dit->second.find(w);
  return it == dit->second.end() ? Rational(0) : it->second;
}

AssocPoly AssocPoly::degree_slice(int n) const {
  AssocPoly r(max_degree_);
  auto dit = parts_.find(n);
  if (dit != parts_.end()) r.parts_.emplace(n, dit->second);
  return r;
}

AssocPoly AssocPoly::truncated(int max_degree) const {
  AssocPoly r(max_degree);
  for (const auto& [deg, terms] : parts_) {
    if (deg > max_degree) break;
    r.parts_.emplace(deg, terms);
  }
  return r;
}

void AssocPoly::add_term(Word w, const Rational& c) {
  if (c.is_zero() || w.size() > max_degree_) return;
  auto& terms = parts_[w.size()];
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) {
    terms.erase(it);
    if (terms.empty()) parts_.erase(w.size());
  }
}

AssocPoly& AssocPoly::operator+=(const AssocPoly& o) {
  if (o.max_degree_ > max_degree_) max_degree_ = o.max_degree_;
  for (const auto& [deg, terms] : o.parts_)
    for (const auto& [w, c] : terms) add_term(w, c);
  return *this;
}

AssocPoly& AssocPoly::operator-=(const AssocPoly& o) {
  if (o.max_degree_ > max_degree_) max_degree_ = o.max_degree_;
  for (const auto& [deg, terms] : o.parts_)
    for (const auto& [w, c] : terms) add_term(w, -c);
  return *this;
}

AssocPoly& AssocPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    parts_.clear();
    return *this;
  }
  for (auto& [deg, terms] : parts_)
    for (auto& [w, c] : terms) c *= s;
  return *this;
}

AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b, int max_degree) {
  AssocPoly r(max_degree);
  for (const auto& [da, ta] : a.parts()) {
    if (da > max_degree) break;
    for (const auto& [db, tb] : b.parts()) {
      if (da + db > max_degree) break;
      for (const auto& [wa, ca] : ta)
        for (const auto& [wb, cb] : tb) r.add_term(Word::concat(wa, wb), ca * cb);
    }
  }
  return r;
}

AssocPoly assoc_exp(const AssocPoly& a, int max_degree) {
  if (!a.constant_term().is_zero())
    throw std::invalid_argument("assoc_exp: nonzero constant term");
  AssocPoly r = AssocPoly::unit(max_degree);
  AssocPoly power = AssocPoly::unit(max_degree);
  for (int k = 1; k <= max_degree; ++k) {
    power = assoc_mul(power, a, max_degree);
    if (power.is_zero()) break;
    power *= Rational(1, k);
    r += power;
  }
  return r;
}

AssocPoly assoc_log(const AssocPoly& a, int max_degree) {
  if (a.constant_term() != Rational(1))
    throw std::invalid_argument("assoc_log: constant term must be 1");
  AssocPoly u = a.truncated(max_degree);
  u.add_term(Word(), Rational(-1));
  AssocPoly r(max_degree);
  AssocPoly power = AssocPoly::unit(max_degree);
  for (int k = 1; k <= max_degree; ++k) {
    power = assoc_mul(power, u, max_degree);
    if (power.is_zero()) break;
    AssocPoly term = power;
    term *= Rational(k % 2 == 1 ? 1 : -1, k);
    r += term;
  }
  return r;
}

Rational CyclicVec::coeff(const Necklace& v) const {
  auto it = t_.find(v);
  return it == t_.end() ? Rational(0) : it->second;
}

void CyclicVec::add_term(const Necklace& v, const Rational& c) {
  if (c.is_zero()) return;
  auto it = t_.find(v);
  if (it == t_.end()) {
    t_.emplace(v, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

CyclicVec& CyclicVec::operator+=(const CyclicVec& o) {
  for (const auto& [v, c] : o.t_) add_term(v, c);
  return *this;
}

CyclicVec& CyclicVec::operator-=(const CyclicVec& o) {
  for (const auto& [v, c] : o.t_) add_term(v, -c);
  return *this;
}

CyclicVec& CyclicVec::operator*=(const Rational& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [v, c] : t_) c *= s;
  return *this;
}

CyclicVec cyclic_project(const AssocPoly& a) {
  CyclicVec r;
  for (const auto& [deg, terms] : a.parts()) {
    if (deg == 0) {
      std::cerr << "cyclic_project: discarding constant term "
                << terms.begin()->second << "\n";
      continue;
    }
    for (const auto& [w, c] : terms) r.add_term(Necklace(w), c);
  }
  return r;
}

}  // namespace kva
