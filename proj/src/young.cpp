#include "casimir/young.hpp"

#include <algorithm>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

void require_non_negative(std::span<const Label> values, const char* what) {
  if (std::any_of(values.begin(), values.end(), [](Label v) { return v < 0; })) {
    throw InvalidArgument(std::string(what) + " must be non-negative");
  }
}

std::string join(std::span<const Label> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

DynkinLabels::DynkinLabels(int n, std::vector<Label> labels) : n_(n), labels_(std::move(labels)) {
  if (n_ < 2) throw InvalidArgument("su(n) requires n >= 2, got " + std::to_string(n_));
  if (labels_.size() != static_cast<std::size_t>(n_ - 1)) {
    throw InvalidArgument("su(" + std::to_string(n_) + ") needs " + std::to_string(n_ - 1) +
                          " Dynkin labels, got " + std::to_string(labels_.size()));
  }
  require_non_negative(labels_, "Dynkin labels");
}

DynkinLabels DynkinLabels::trivial(int n) {
  return DynkinLabels(n, std::vector<Label>(n > 1 ? n - 1 : 0, 0));
}

DynkinLabels DynkinLabels::fundamental(int n) {
  std::vector<Label> labels(n > 1 ? n - 1 : 0, 0);
  if (!labels.empty()) labels.front() = 1;
  return DynkinLabels(n, std::move(labels));
}

DynkinLabels DynkinLabels::adjoint(int n) {
  std::vector<Label> labels(n > 1 ? n - 1 : 0, 0);
  if (!labels.empty()) {
    labels.front() += 1;
    labels.back() += 1;
  }
  return DynkinLabels(n, std::move(labels));
}

Label DynkinLabels::at_position(int position) const {
  if (position < 1 || position > n_ - 1) {
    throw InvalidArgument("label position " + std::to_string(position) + " out of range");
  }
  return labels_[position - 1];
}

bool DynkinLabels::is_trivial() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(), [](Label v) { return v == 0; });
}

DynkinLabels DynkinLabels::conjugate() const {
  return DynkinLabels(n_, std::vector<Label>(labels_.rbegin(), labels_.rend()));
}

std::string DynkinLabels::to_string() const { return "(" + join(labels_) + ")"; }

StableRep::StableRep(std::vector<Label> head, std::vector<Label> tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
  if (head_.empty()) throw InvalidArgument("stable rep needs k >= 1");
  if (head_.size() != tail_.size()) {
    throw InvalidArgument("head and tail lengths differ (" + std::to_string(head_.size()) +
                          " vs " + std::to_string(tail_.size()) + ")");
  }
  require_non_negative(head_, "head labels");
  require_non_negative(tail_, "tail labels");
}

bool StableRep::is_canonical() const noexcept {
  return k() == 1 || head_.back() != 0 || tail_.back() != 0;
}

StableRep StableRep::canonical() const {
  std::size_t k = head_.size();
  while (k > 1 && head_[k - 1] == 0 && tail_[k - 1] == 0) --k;
  return StableRep(std::vector<Label>(head_.begin(), head_.begin() + k),
                   std::vector<Label>(tail_.begin(), tail_.begin() + k));
}

std::string StableRep::to_string() const {
  return std::to_string(k()) + " | " + join(head_) + " / " + join(tail_);
}

StableRep canonicalize(const StableRep& rep) { return rep.canonical(); }

DynkinLabels realize(const StableRep& rep, int n) {
  const int k = rep.k();
  if (n < 2 * k + 1) throw StableRangeError(n, k);
  std::vector<Label> labels(n - 1, 0);
  for (int i = 1; i <= k; ++i) {
    labels[i - 1] = rep.head()[i - 1];
    labels[n - i - 1] = rep.tail()[i - 1];
  }
  return DynkinLabels(n, std::move(labels));
}

StableRep extract_stable(const DynkinLabels& labels, int k) {
  const int n = labels.n();
  if (k < 1) throw InvalidArgument("k must be >= 1");
  if (n < 2 * k + 1) throw StableRangeError(n, k);
  for (int position = k + 1; position < n - k; ++position) {
    if (labels.at_position(position) != 0) throw MiddleLabelError(position);
  }
  std::vector<Label> head(k);
  std::vector<Label> tail(k);
  for (int i = 1; i <= k; ++i) {
    head[i - 1] = labels.at_position(i);
    tail[i - 1] = labels.at_position(n - i);
  }
  return StableRep(std::move(head), std::move(tail)).canonical();
}

namespace {

Label weighted_area(std::span<const Label> values) {
  Label area = 0;
  for (std::size_t i = 0; i < values.size(); ++i) area += static_cast<Label>(i + 1) * values[i];
  return area;
}

}  // namespace

Label area_head(const StableRep& rep) { return weighted_area(rep.head()); }
Label area_tail(const StableRep& rep) { return weighted_area(rep.tail()); }

bool is_balanced(const StableRep& rep) { return area_head(rep) == area_tail(rep); }

}  // namespace casimir
