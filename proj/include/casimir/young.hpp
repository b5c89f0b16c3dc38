#pragma once

// Dynkin labels of su(N) irreps, N-independent stable representations, and
// the Young-diagram area bookkeeping behind the linearity criterion.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace casimir {

using Label = std::int64_t;

/// Highest weight of an su(n) irrep in the fundamental-weight basis.
/// Holds n-1 non-negative labels; index 0 is lambda_1.
class DynkinLabels {
 public:
  DynkinLabels(int n, std::vector<Label> labels);

  static DynkinLabels trivial(int n);
  static DynkinLabels fundamental(int n);
  static DynkinLabels adjoint(int n);

  int n() const noexcept { return n_; }
  std::span<const Label> labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  Label operator[](std::size_t index) const { return labels_[index]; }
  /// 1-based access, lambda_position.
  Label at_position(int position) const;

  bool is_trivial() const noexcept;
  /// Labels of the dual (conjugate) irrep: the sequence reversed.
  DynkinLabels conjugate() const;

  std::string to_string() const;

  friend bool operator==(const DynkinLabels&, const DynkinLabels&) = default;
  friend auto operator<=>(const DynkinLabels&, const DynkinLabels&) = default;

 private:
  int n_;
  std::vector<Label> labels_;
};

/// The N-independent datum of a stable sequence: the first k labels (head)
/// and the last k labels read from the right end inward (tail[i-1] = lambda_{N-i}).
/// All middle labels are zero.
class StableRep {
 public:
  StableRep(std::vector<Label> head, std::vector<Label> tail);

  static StableRep trivial() { return StableRep({0}, {0}); }

  int k() const noexcept { return static_cast<int>(head_.size()); }
  std::span<const Label> head() const noexcept { return head_; }
  std::span<const Label> tail() const noexcept { return tail_; }

  /// k minimal: head[k] or tail[k] nonzero, except the trivial rep (k=1, [0], [0]).
  bool is_canonical() const noexcept;
  StableRep canonical() const;
  /// Exchanges head and tail, i.e. the conjugate stable sequence.
  StableRep swapped() const { return StableRep(tail_, head_); }

  /// "k | head / tail", the batch line format.
  std::string to_string() const;

  friend bool operator==(const StableRep&, const StableRep&) = default;
  friend auto operator<=>(const StableRep&, const StableRep&) = default;

 private:
  std::vector<Label> head_;
  std::vector<Label> tail_;
};

StableRep canonicalize(const StableRep& rep);

/// Member of the stable sequence at su(n). Throws StableRangeError when n <= 2k.
DynkinLabels realize(const StableRep& rep, int n);

/// Reads the first and last k labels back into a canonical StableRep.
/// Throws StableRangeError when n <= 2k, MiddleLabelError for a nonzero label
/// at a position strictly between k and n-k.
StableRep extract_stable(const DynkinLabels& labels, int k);

/// Sum of i * head[i]: the area of the Young diagram described by the head labels.
Label area_head(const StableRep& rep);
/// Sum of i * tail[i].
Label area_tail(const StableRep& rep);

bool is_balanced(const StableRep& rep);

}  // namespace casimir
