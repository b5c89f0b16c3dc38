#pragma once

#include <cstdint>
#include <string>

#include "casimir/rational.hpp"
#include "casimir/young.hpp"

namespace casimir {

/// a1 * N + a0 + am1 / N.
struct CasimirPoly {
  Rational a1;
  Rational a0;
  Rational am1;

  CasimirPoly& operator+=(const CasimirPoly& rhs);
  friend CasimirPoly operator+(CasimirPoly lhs, const CasimirPoly& rhs) { return lhs += rhs; }
  friend bool operator==(const CasimirPoly&, const CasimirPoly&) = default;
};

/// Closed-form Casimir eigenvalue along a stable sequence, as a Laurent polynomial in N.
CasimirPoly casimir_stable(const StableRep& rep);

/// Throws InvalidArgument for n == 0.
Rational evaluate(const CasimirPoly& poly, std::int64_t n);

bool is_linear(const CasimirPoly& poly);

/// "a1*N + a0 + a-1/N" with zero terms omitted; "0" for the zero polynomial.
std::string to_string(const CasimirPoly& poly);

namespace detail {

// The four blocks of (lambda,lambda) + 2(lambda,rho) for a stable rep. Each is the
// N-dependence of one partial sum over the Gram matrix; they add up to casimir_stable.

/// sum_{i,j<=k} head_i head_j F_{ij}
CasimirPoly head_head_block(const StableRep& rep);
/// sum_{i,j<=k} tail_i tail_j F_{N-i,N-j}
CasimirPoly tail_tail_block(const StableRep& rep);
/// sum_{i,j<=k} (head_i tail_j F_{i,N-j} + tail_i head_j F_{N-i,j})
CasimirPoly cross_block(const StableRep& rep);
/// 2 sum_{i<=k} (R_i head_i + R_{N-i} tail_i)
CasimirPoly rho_block(const StableRep& rep);

}  // namespace detail

}  // namespace casimir
