#pragma once

#include "posate/polynomial.hpp"

namespace posate {

/// binom(1/2, k) as an exact rational.
Rational binomial_half(unsigned k);

/// n-th Taylor polynomial of sqrt(1 - x): sum_{k<=n} binom(1/2,k) (-x)^k, univariate.
Polynomial taylor_sqrt(unsigned n);

/// t_n(x)^2 - (1 - x). Its coefficients are nonnegative dyadic rationals
/// supported in degrees n+1 .. 2n.
Polynomial sqrt_defect(unsigned n);

struct SqrtDefectCheck {
  bool nonnegative = true;
  bool dyadic = true;
  bool support_ok = true;
  bool ok() const noexcept { return nonnegative && dyadic && support_ok; }
};

SqrtDefectCheck inspect_sqrt_defect(unsigned n, const Polynomial& defect);

}  // namespace posate
