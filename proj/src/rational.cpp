#include "kva/rational.hpp"

#include <ostream>

namespace kva {

Rational::Rational(mpz_class num, mpz_class den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(std::move(num));
  mpq_class d(std::move(den));
  q_ /= d;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(mpz_class(std::string(text)));
    }
    mpz_class num{std::string(text.substr(0, slash))};
    mpz_class den{std::string(text.substr(slash + 1))};
    return Rational(std::move(num), std::move(den));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: malformed value '" + std::string(text) + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace kva
