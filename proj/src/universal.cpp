#include "casimir/universal.hpp"

#include "casimir/errors.hpp"

namespace casimir {

VogelPoint vogel_su(int n) {
  if (n < 2) throw InvalidArgument("su(n) requires n >= 2, got " + std::to_string(n));
  return {Rational(-2), Rational(2), Rational(n)};
}

UniversalCoeffs universal_form(const CasimirPoly& poly) {
  if (!is_linear(poly)) throw NotLinearError();
  return {Rational(), poly.a0 / Rational(2), poly.a1};
}

Rational universal_value(const VogelPoint& point, const UniversalCoeffs& coeffs) {
  return point.alpha * coeffs.x + point.beta * coeffs.y + point.gamma * coeffs.z;
}

}  // namespace casimir
