#pragma once

#include "casimir/casimir_poly.hpp"
#include "casimir/rational.hpp"

namespace casimir {

/// Vogel parameters (alpha, beta, gamma) at a concrete point.
struct VogelPoint {
  Rational alpha;
  Rational beta;
  Rational gamma;
  friend bool operator==(const VogelPoint&, const VogelPoint&) = default;
};

/// Coefficients of C = alpha*x + beta*y + gamma*z.
struct UniversalCoeffs {
  Rational x;
  Rational y;
  Rational z;
  friend bool operator==(const UniversalCoeffs&, const UniversalCoeffs&) = default;
};

/// su(n) in the minimal normalization: (-2, 2, n).
VogelPoint vogel_su(int n);

/// Canonical representative x = 0, y = a0/2, z = a1. Only -2x + 2y is fixed by
/// su(N), so any (x, y + x, z) is equivalent. Throws NotLinearError when am1 != 0.
UniversalCoeffs universal_form(const CasimirPoly& poly);

Rational universal_value(const VogelPoint& point, const UniversalCoeffs& coeffs);

}  // namespace casimir
