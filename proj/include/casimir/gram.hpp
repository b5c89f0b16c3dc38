#pragma once

#include "casimir/rational.hpp"
#include "casimir/young.hpp"

namespace casimir {

// Scalar products are in the minimal normalization (long roots have length^2 = 2).

/// (omega_i, omega_j) = min(i,j) - i*j/n for 1 <= i, j <= n-1.
Rational gram_entry(int i, int j, int n);

/// (omega_i, rho) = i(n-i)/2.
Rational weyl_row_sum(int i, int n);

/// Casimir eigenvalue (lambda, lambda) + 2 (lambda, rho) summed directly over the
/// nonzero labels with on-demand Gram entries.
Rational casimir_direct(const DynkinLabels& labels);

}  // namespace casimir
