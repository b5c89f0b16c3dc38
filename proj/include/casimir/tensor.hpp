#pragma once

// Tensor products with the adjoint of su(n) by the Racah-Speiser (Klimyk) rule,
// powers of the adjoint, and the check that every constituent is a balanced
// stable representation with an N-linear Casimir eigenvalue.
//
// Weights are handled in epsilon coordinates: a weight with Dynkin labels a_1..a_{n-1}
// is the length-n vector e_i = a_i + ... + a_{n-1} (e_n = 0), defined up to a common
// shift. The shifted Weyl action is then a permutation of the e_i.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "casimir/casimir_poly.hpp"
#include "casimir/rational.hpp"
#include "casimir/young.hpp"

namespace casimir {

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// A possibly non-dominant weight in the fundamental-weight basis (n-1 coordinates).
struct Weight {
  std::vector<Label> coords;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

struct WeightMultiplicity {
  Weight weight;
  std::uint64_t multiplicity;
};

/// Multiset of irreps of su(n), iterated in lexicographic order of labels.
class Decomposition {
 public:
  using Map = std::map<DynkinLabels, std::uint64_t>;

  explicit Decomposition(int n) : n_(n) {}

  /// Throws InvalidArgument on an n mismatch or zero multiplicity.
  void add(const DynkinLabels& labels, std::uint64_t multiplicity);

  int n() const noexcept { return n_; }
  const Map& entries() const noexcept { return entries_; }
  std::size_t distinct() const noexcept { return entries_.size(); }
  std::uint64_t multiplicity(const DynkinLabels& labels) const;
  /// Number of constituents counted with multiplicity.
  std::uint64_t total_multiplicity() const;
  /// Sum of multiplicity * dimension.
  BigInt dimension_checksum() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  int n_;
  Map entries_;
};

/// Roots of su(n) with multiplicity 1 and the zero weight with multiplicity n-1.
std::vector<WeightMultiplicity> adjoint_weights(int n);

/// Weyl dimension formula, exact.
BigInt dimension(const DynkinLabels& labels);

std::vector<Label> to_epsilon(std::span<const Label> fundamental_coords);

/// Sorts a strictly-shifted weight (epsilon coordinates of lambda + mu + rho) into
/// the dominant chamber. Returns the Dynkin labels of the result minus rho together
/// with the permutation sign, or nullopt when two coordinates coincide (the weight
/// lies on a wall and cancels).
struct Reflected {
  DynkinLabels labels;
  int sign;
};
std::optional<Reflected> reflect_shifted(std::vector<Label> shifted_epsilon, int n);

/// labels (x) adjoint, the adjoint weights processed in parallel with OpenMP.
Decomposition tensor_with_adjoint(const DynkinLabels& labels);
/// Single-threaded reference for tensor_with_adjoint.
Decomposition tensor_with_adjoint_serial(const DynkinLabels& labels);

/// (input) (x) adjoint with multiplicities. Throws CapExceededError when the
/// constituent count (with multiplicity) of the result exceeds cap.
Decomposition tensor_with_adjoint(const Decomposition& input, std::uint64_t cap = kDefaultCap);

/// k-th tensor power of the adjoint. Throws CapExceededError when any intermediate
/// power has more than cap constituents counted with multiplicity.
Decomposition ad_power_decompose(int n, int k, std::uint64_t cap = kDefaultCap);

/// (n^2 - 1)^k
BigInt ad_power_dimension(int n, int k);

struct ConstituentFinding {
  DynkinLabels labels;
  std::uint64_t multiplicity = 0;
  BigInt dimension;
  std::optional<StableRep> stable;
  std::optional<CasimirPoly> poly;
  Rational direct;
  bool balanced = false;
  bool closed_form_matches = false;
  /// Empty when the constituent passes every check.
  std::string problem;

  bool ok() const { return problem.empty(); }
};

struct VerificationReport {
  int n = 0;
  int k = 0;
  std::vector<ConstituentFinding> constituents;
  BigInt checksum;
  BigInt expected_checksum;

  bool checksum_ok() const { return checksum == expected_checksum; }
  bool passed() const;
  /// Extracted stable reps with multiplicities, comparable across n.
  std::map<StableRep, std::uint64_t> stable_content() const;
};

/// Decomposes ad^k at su(n) and checks each constituent: it extracts to a stable
/// rep with k' <= k, is balanced, has am1 == 0, and its closed-form eigenvalue at
/// n equals the direct one. Throws StableRangeError when n < 2k + 1.
VerificationReport verify_ad_power(int n, int k, std::uint64_t cap = kDefaultCap);

/// The checks of verify_ad_power applied to an already computed ad^k decomposition.
VerificationReport verify_decomposition(const Decomposition& decomposition, int k);

}  // namespace casimir
