#include <doctest.h>

#include <omp.h>

#include <random>

#include "casimir/casimir_poly.hpp"
#include "casimir/errors.hpp"
#include "casimir/tensor.hpp"
#include "oracle/oracle.hpp"

using namespace casimir;

namespace {

Decomposition make(int n, std::initializer_list<std::pair<std::vector<Label>, std::uint64_t>> items) {
  Decomposition d(n);
  for (const auto& [labels, mult] : items) d.add(DynkinLabels(n, labels), mult);
  return d;
}

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("adjoint weight systems") {
  for (int n : {2, 3, 5, 8}) {
    const auto weights = adjoint_weights(n);
    std::uint64_t total = 0;
    std::size_t roots = 0;
    for (const auto& w : weights) {
      total += w.multiplicity;
      const bool zero = std::all_of(w.weight.coords.begin(), w.weight.coords.end(),
                                    [](Label v) { return v == 0; });
      if (zero) {
        CHECK(w.multiplicity == static_cast<std::uint64_t>(n - 1));
      } else {
        ++roots;
        CHECK(w.multiplicity == 1);
      }
    }
    CHECK(roots == static_cast<std::size_t>(n * n - n));
    CHECK(total == static_cast<std::uint64_t>(n * n - 1));
  }
  const auto su2 = adjoint_weights(2);
  REQUIRE(su2.size() == 3);
  CHECK(su2[0].weight.coords == std::vector<Label>{-2});
  CHECK(su2[1].weight.coords == std::vector<Label>{0});
  CHECK(su2[2].weight.coords == std::vector<Label>{2});
}

TEST_CASE("Weyl dimension formula") {
  for (int n = 2; n <= 12; ++n) {
    CHECK(dimension(DynkinLabels::fundamental(n)) == n);
    CHECK(dimension(DynkinLabels::adjoint(n)) == n * n - 1);
    CHECK(dimension(DynkinLabels::trivial(n)) == 1);
  }
  CHECK(dimension(DynkinLabels(3, {1, 1})) == 8);
  CHECK(dimension(DynkinLabels(3, {2, 2})) == 27);
}

TEST_CASE("Weyl dimension agrees with hook-content and weight counting (property)") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> nd(2, 6);
  std::uniform_int_distribution<Label> label(0, 3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = nd(rng);
    std::vector<Label> values(n - 1);
    for (auto& v : values) v = label(rng);
    const DynkinLabels labels(n, values);
    const BigInt dim = dimension(labels);
    CHECK(dim == oracle::hook_content_dimension(labels));
    if (dim <= 2000) {
      std::int64_t count = 0;
      for (const auto& [w, m] : oracle::freudenthal_weights(labels)) count += m;
      CHECK(dim == count);
    }
  }
}

TEST_CASE("shifted reflection into the dominant chamber") {
  // su(3): lambda + mu + rho = (3, 1, 2) sorts with one swap to (3, 2, 1); minus rho is 0.
  auto r = reflect_shifted({3, 1, 2}, 3);
  REQUIRE(r.has_value());
  CHECK(r->labels == DynkinLabels(3, {0, 0}));
  CHECK(r->sign == -1);
  CHECK_FALSE(reflect_shifted({2, 2, 0}, 3).has_value());
  r = reflect_shifted({5, 2, 0}, 3);
  REQUIRE(r.has_value());
  CHECK(r->labels == DynkinLabels(3, {2, 1}));
  CHECK(r->sign == 1);
}

TEST_CASE("tensor with the adjoint") {
  CHECK(tensor_with_adjoint(DynkinLabels(3, {1, 1})) ==
        make(3, {{{2, 2}, 1}, {{3, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 2}, {{0, 0}, 1}}));
  CHECK(tensor_with_adjoint(DynkinLabels(2, {2})) == make(2, {{{4}, 1}, {{2}, 1}, {{0}, 1}}));
  for (int n = 2; n <= 7; ++n) {
    Decomposition unit(n);
    unit.add(DynkinLabels::adjoint(n), 1);
    CHECK(tensor_with_adjoint(DynkinLabels::trivial(n)) == unit);
  }
}

TEST_CASE("entries come out in lexicographic label order") {
  const auto d = tensor_with_adjoint(DynkinLabels(4, {1, 1, 0}));
  const DynkinLabels* previous = nullptr;
  for (const auto& [labels, mult] : d.entries()) {
    if (previous) CHECK(*previous < labels);
    previous = &labels;
  }
}

TEST_CASE("parallel kernel equals the serial reference at every thread count (property)") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> nd(2, 9);
  std::uniform_int_distribution<Label> label(0, 2);
  const int saved = omp_get_max_threads();
  for (int trial = 0; trial < 60; ++trial) {
    const int n = nd(rng);
    std::vector<Label> values(n - 1);
    for (auto& v : values) v = label(rng);
    const DynkinLabels labels(n, values);
    const Decomposition reference = tensor_with_adjoint_serial(labels);
    CHECK(reference.dimension_checksum() == dimension(labels) * BigInt(n * n - 1));
    for (int threads : {1, 2, 3, 5}) {
      omp_set_num_threads(threads);
      CHECK(tensor_with_adjoint(labels) == reference);
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("Racah-Speiser agrees with the brute-force oracle on small irreps") {
  for (int n : {2, 3, 4}) {
    for (const auto& labels : oracle::irreps_up_to_dimension(n, 30)) {
      CAPTURE(labels.to_string());
      CHECK(tensor_with_adjoint(labels) == oracle::oracle_decompose(labels, DynkinLabels::adjoint(n)));
    }
  }
}

TEST_CASE("powers of the adjoint") {
  for (int n = 2; n <= 9; ++n) {
    Decomposition single(n);
    single.add(DynkinLabels::adjoint(n), 1);
    CHECK(ad_power_decompose(n, 1) == single);
  }
  const auto su3 = ad_power_decompose(3, 2);
  CHECK(su3 == make(3, {{{2, 2}, 1}, {{3, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 2}, {{0, 0}, 1}}));
  CHECK(su3.dimension_checksum() == 64);

  // su(5): 1 + 2*24 + 200 + 75 + 126 + 126, dimensions from the textbook formulas.
  const auto su5 = ad_power_decompose(5, 2);
  CHECK(su5 == make(5, {{{0, 0, 0, 0}, 1},
                        {{1, 0, 0, 1}, 2},
                        {{2, 0, 0, 2}, 1},
                        {{0, 1, 1, 0}, 1},
                        {{2, 0, 1, 0}, 1},
                        {{0, 1, 0, 2}, 1}}));
  CHECK(su5.dimension_checksum() == 576);
  CHECK(su5.total_multiplicity() == 7);
  CHECK(su5 == oracle::oracle_decompose(DynkinLabels::adjoint(5), DynkinLabels::adjoint(5)));

  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= 4; ++k) {
      const auto d = ad_power_decompose(n, k);
      CHECK(d.dimension_checksum() == ad_power_dimension(n, k));
      for (const auto& [labels, mult] : d.entries()) CHECK(d.multiplicity(labels.conjugate()) == mult);
    }
  }
}

TEST_CASE("resource cap") {
  CHECK_THROWS_AS(ad_power_decompose(4, 9), CapExceededError);
  CHECK_THROWS_AS(ad_power_decompose(5, 2, 6), CapExceededError);
  CHECK_NOTHROW(ad_power_decompose(5, 2, 7));
  CHECK_THROWS_AS(ad_power_decompose(1, 2), InvalidArgument);
  CHECK_THROWS_AS(ad_power_decompose(3, 0), InvalidArgument);
}

TEST_CASE("decomposition container invariants") {
  Decomposition d(3);
  CHECK_THROWS_AS(d.add(DynkinLabels(4, {0, 0, 0}), 1), InvalidArgument);
  CHECK_THROWS_AS(d.add(DynkinLabels(3, {0, 0}), 0), InvalidArgument);
  d.add(DynkinLabels(3, {1, 1}), 2);
  d.add(DynkinLabels(3, {1, 1}), 3);
  CHECK(d.multiplicity(DynkinLabels(3, {1, 1})) == 5);
  CHECK(d.multiplicity(DynkinLabels(3, {1, 0})) == 0);
  CHECK(d.dimension_checksum() == 40);
}

TEST_CASE("verification of adjoint powers") {
  const auto five = verify_ad_power(5, 2);
  CHECK(five.passed());
  CHECK(five.constituents.size() == 6);
  const auto seven = verify_ad_power(7, 3);
  CHECK(seven.passed());
  const auto nine = verify_ad_power(9, 1);
  CHECK(nine.passed());
  REQUIRE(nine.constituents.size() == 1);
  CHECK(*nine.constituents.front().poly == CasimirPoly{2, 0, 0});
  CHECK(nine.constituents.front().direct == Rational(18));
  CHECK_THROWS_AS(verify_ad_power(4, 2), StableRangeError);

  for (const auto& c : seven.constituents) {
    REQUIRE(c.stable.has_value());
    CHECK(c.stable->k() <= 3);
    CHECK(c.balanced);
    CHECK(is_linear(*c.poly));
    CHECK(c.closed_form_matches);
  }
  CHECK(verify_ad_power(7, 2).stable_content() == verify_ad_power(9, 2).stable_content());
}

TEST_CASE("verification flags a decomposition that is not stable") {
  // (0,1,1,0) at su(5) is not stable for k=1; hand a fake ad^1 decomposition in.
  Decomposition fake(5);
  fake.add(DynkinLabels(5, {0, 1, 1, 0}), 1);
  const auto report = verify_decomposition(fake, 1);
  CHECK_FALSE(report.passed());
  REQUIRE(report.constituents.size() == 1);
  CHECK_FALSE(report.constituents.front().ok());
  CHECK_FALSE(report.constituents.front().stable.has_value());

  Decomposition unbalanced(5);
  unbalanced.add(DynkinLabels(5, {1, 0, 0, 0}), 24);
  const auto second = verify_decomposition(unbalanced, 1);
  CHECK(second.checksum_ok() == false);
  CHECK(second.constituents.front().problem.find("unbalanced") != std::string::npos);
}

}
