// Sanity checks of the test-only oracles themselves, against textbook values.

#include <doctest.h>

#include "oracle/oracle.hpp"

using namespace casimir;
using namespace casimir::oracle;

TEST_SUITE("oracle") {

TEST_CASE("Freudenthal weight systems") {
  // su(3) adjoint: six roots and a doubly degenerate zero weight.
  const auto adjoint = freudenthal_weights(DynkinLabels(3, {1, 1}));
  CHECK(adjoint.size() == 7);
  CHECK(adjoint.at({1, 1, 1}) == 2);
  CHECK(adjoint.at({2, 1, 0}) == 1);
  // su(3) (2,2): 27 states, zero weight (2,2,2) with multiplicity 3.
  const auto big = freudenthal_weights(DynkinLabels(3, {2, 2}));
  std::int64_t total = 0;
  for (const auto& [w, m] : big) total += m;
  CHECK(total == 27);
  CHECK(big.at({2, 2, 2}) == 3);
  // su(4) adjoint: zero weight multiplicity 3.
  CHECK(freudenthal_weights(DynkinLabels(4, {1, 0, 1})).at({1, 1, 1, 1}) == 3);
}

TEST_CASE("hook-content dimensions") {
  CHECK(hook_content_dimension(DynkinLabels(3, {1, 1})) == 8);
  CHECK(hook_content_dimension(DynkinLabels(3, {2, 2})) == 27);
  CHECK(hook_content_dimension(DynkinLabels(5, {1, 0, 0, 1})) == 24);
  CHECK(hook_content_dimension(DynkinLabels(5, {0, 1, 1, 0})) == 75);
  CHECK(hook_content_dimension(DynkinLabels(2, {7})) == 8);
}

TEST_CASE("brute-force decompositions") {
  Decomposition spin_half(2);
  spin_half.add(DynkinLabels(2, {2}), 1);
  spin_half.add(DynkinLabels(2, {0}), 1);
  CHECK(oracle_decompose(DynkinLabels(2, {1}), DynkinLabels(2, {1})) == spin_half);

  Decomposition v_vbar(4);
  v_vbar.add(DynkinLabels(4, {1, 0, 1}), 1);
  v_vbar.add(DynkinLabels(4, {0, 0, 0}), 1);
  CHECK(oracle_decompose(DynkinLabels(4, {1, 0, 0}), DynkinLabels(4, {0, 0, 1})) == v_vbar);

  Decomposition eight_eight(3);
  eight_eight.add(DynkinLabels(3, {2, 2}), 1);
  eight_eight.add(DynkinLabels(3, {3, 0}), 1);
  eight_eight.add(DynkinLabels(3, {0, 3}), 1);
  eight_eight.add(DynkinLabels(3, {1, 1}), 2);
  eight_eight.add(DynkinLabels(3, {0, 0}), 1);
  CHECK(oracle_decompose(DynkinLabels(3, {1, 1}), DynkinLabels(3, {1, 1})) == eight_eight);
}

TEST_CASE("guard and irrep enumeration") {
  CHECK_THROWS(oracle_decompose(DynkinLabels(4, {5, 5, 5}), DynkinLabels(4, {5, 5, 5})));
  const auto su3 = irreps_up_to_dimension(3, 10);
  // 1, 3, 3bar, 6, 6bar, 8, 10, 10bar
  CHECK(su3.size() == 8);
}

}
