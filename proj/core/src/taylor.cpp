#include "posate/taylor.hpp"

#include "posate/errors.hpp"

namespace posate {

Rational binomial_half(unsigned k) {
  Rational b = 1;
  for (unsigned j = 0; j < k; ++j) b *= (Rational(1, 2) - j) / Rational(j + 1);
  return b;
}

Polynomial taylor_sqrt(unsigned n) {
  Polynomial t(1);
  for (unsigned k = 0; k <= n; ++k) {
    const Rational c = (k % 2 == 0) ? binomial_half(k) : Rational(-binomial_half(k));
    t.add_term(Monomial::variable(1, 0, k), c);
  }
  return t;
}

Polynomial sqrt_defect(unsigned n) {
  if (n == 0) throw PreconditionError("sqrt_defect requires n >= 1");
  const Polynomial t = taylor_sqrt(n);
  return t * t - parse_polynomial("1 - x1", 1);
}

SqrtDefectCheck inspect_sqrt_defect(unsigned n, const Polynomial& defect) {
  SqrtDefectCheck check;
  for (const auto& [m, c] : defect.terms()) {
    if (c < 0) check.nonnegative = false;
    if (!denominator_is_power_of_two(c)) check.dyadic = false;
    if (m.degree() <= n || m.degree() > 2 * n) check.support_ok = false;
  }
  return check;
}

}  // namespace posate
