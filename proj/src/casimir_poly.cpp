#include "casimir/casimir_poly.hpp"

#include <algorithm>

#include "casimir/errors.hpp"

namespace casimir {

CasimirPoly& CasimirPoly::operator+=(const CasimirPoly& rhs) {
  a1 += rhs.a1;
  a0 += rhs.a0;
  am1 += rhs.am1;
  return *this;
}

namespace detail {

namespace {

// sum_{i,j} min(i,j) v_i v_j
Rational min_form(std::span<const Label> v) {
  Rational total;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      total += Rational(static_cast<Label>(std::min(i, j) + 1) * v[i] * v[j]);
    }
  }
  return total;
}

}  // namespace

CasimirPoly head_head_block(const StableRep& rep) {
  const Rational area = area_head(rep);
  return {Rational(), min_form(rep.head()), -(area * area)};
}

CasimirPoly tail_tail_block(const StableRep& rep) {
  const Rational area = area_tail(rep);
  return {Rational(), min_form(rep.tail()), -(area * area)};
}

CasimirPoly cross_block(const StableRep& rep) {
  return {Rational(), Rational(), Rational(2) * Rational(area_head(rep)) * Rational(area_tail(rep))};
}

CasimirPoly rho_block(const StableRep& rep) {
  Rational squares;
  for (int i = 1; i <= rep.k(); ++i) {
    squares += Rational(static_cast<Label>(i) * i * (rep.head()[i - 1] + rep.tail()[i - 1]));
  }
  return {Rational(area_head(rep) + area_tail(rep)), -squares, Rational()};
}

}  // namespace detail

CasimirPoly casimir_stable(const StableRep& rep) {
  return detail::head_head_block(rep) + detail::tail_tail_block(rep) + detail::cross_block(rep) +
         detail::rho_block(rep);
}

Rational evaluate(const CasimirPoly& poly, std::int64_t n) {
  if (n == 0) throw InvalidArgument("cannot evaluate a Laurent polynomial at N = 0");
  const Rational value(n);
  return poly.a1 * value + poly.a0 + poly.am1 / value;
}

bool is_linear(const CasimirPoly& poly) { return poly.am1.is_zero(); }

namespace {

std::string magnitude(const Rational& r, bool parenthesize) {
  const Rational abs = r.sign() < 0 ? -r : r;
  if (parenthesize && !abs.is_integer()) return "(" + abs.to_string() + ")";
  return abs.to_string();
}

}  // namespace

std::string to_string(const CasimirPoly& poly) {
  std::string out;
  auto append = [&out](const Rational& coeff, const std::string& body) {
    if (out.empty()) {
      out = (coeff.sign() < 0 ? "-" : "") + body;
    } else {
      out += (coeff.sign() < 0 ? " - " : " + ") + body;
    }
  };
  if (!poly.a1.is_zero()) append(poly.a1, magnitude(poly.a1, false) + "*N");
  if (!poly.a0.is_zero()) append(poly.a0, magnitude(poly.a0, false));
  if (!poly.am1.is_zero()) append(poly.am1, magnitude(poly.am1, true) + "/N");
  return out.empty() ? "0" : out;
}

}  // namespace casimir
