#include "casimir/gram.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

void check_index(int i, int n) {
  if (n < 2) throw InvalidArgument("su(n) requires n >= 2, got " + std::to_string(n));
  if (i < 1 || i > n - 1) {
    throw InvalidArgument("fundamental weight index " + std::to_string(i) + " outside [1, " +
                          std::to_string(n - 1) + "]");
  }
}

}  // namespace

Rational gram_entry(int i, int j, int n) {
  check_index(i, n);
  check_index(j, n);
  return Rational(std::min(i, j)) - Rational(BigInt(i) * j, BigInt(n));
}

Rational weyl_row_sum(int i, int n) {
  check_index(i, n);
  return Rational(BigInt(i) * (n - i), BigInt(2));
}

Rational casimir_direct(const DynkinLabels& labels) {
  const int n = labels.n();
  std::vector<int> support;
  for (int i = 1; i <= n - 1; ++i) {
    if (labels.at_position(i) != 0) support.push_back(i);
  }

  Rational norm;
  for (int i : support) {
    for (int j : support) {
      norm += Rational(labels.at_position(i) * labels.at_position(j)) * gram_entry(i, j, n);
    }
  }
  Rational rho_term;
  for (int i : support) rho_term += Rational(labels.at_position(i)) * weyl_row_sum(i, n);
  return norm + Rational(2) * rho_term;
}

}  // namespace casimir
