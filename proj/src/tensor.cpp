#include "casimir/tensor.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include <omp.h>

#include "casimir/errors.hpp"
#include "casimir/gram.hpp"

namespace casimir {

namespace {

using SignedMap = std::map<DynkinLabels, std::int64_t>;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw CapExceededError("multiplicity overflow");
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw CapExceededError("multiplicity overflow");
  return out;
}

std::vector<Label> rho_epsilon(int n) {
  std::vector<Label> rho(n);
  for (int i = 0; i < n; ++i) rho[i] = n - 1 - i;
  return rho;
}

// Adds the Racah-Speiser contribution of one adjoint weight to `acc`.
void accumulate(SignedMap& acc, std::span<const Label> lambda_rho, const WeightMultiplicity& w,
                int n) {
  std::vector<Label> shifted = to_epsilon(w.weight.coords);
  for (int i = 0; i < n; ++i) shifted[i] += lambda_rho[i];
  if (auto reflected = reflect_shifted(std::move(shifted), n)) {
    acc[reflected->labels] += reflected->sign * static_cast<std::int64_t>(w.multiplicity);
  }
}

Decomposition finish(const SignedMap& signed_terms, int n) {
  Decomposition out(n);
  for (const auto& [labels, mult] : signed_terms) {
    if (mult < 0) {
      throw std::logic_error("negative multiplicity for " + labels.to_string() +
                             " after Weyl cancellation");
    }
    if (mult > 0) out.add(labels, static_cast<std::uint64_t>(mult));
  }
  return out;
}

std::vector<Label> lambda_plus_rho(const DynkinLabels& labels) {
  std::vector<Label> out = to_epsilon(labels.labels());
  const auto rho = rho_epsilon(labels.n());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += rho[i];
  return out;
}

}  // namespace

void Decomposition::add(const DynkinLabels& labels, std::uint64_t multiplicity) {
  if (labels.n() != n_) {
    throw InvalidArgument("decomposition over su(" + std::to_string(n_) +
                          ") cannot hold an su(" + std::to_string(labels.n()) + ") irrep");
  }
  if (multiplicity == 0) throw InvalidArgument("multiplicity must be positive");
  auto [it, inserted] = entries_.try_emplace(labels, multiplicity);
  if (!inserted) it->second = checked_add(it->second, multiplicity);
}

std::uint64_t Decomposition::multiplicity(const DynkinLabels& labels) const {
  const auto it = entries_.find(labels);
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t Decomposition::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& [labels, mult] : entries_) total = checked_add(total, mult);
  return total;
}

BigInt Decomposition::dimension_checksum() const {
  BigInt total = 0;
  for (const auto& [labels, mult] : entries_) total += dimension(labels) * BigInt(mult);
  return total;
}

std::vector<WeightMultiplicity> adjoint_weights(int n) {
  if (n < 2) throw InvalidArgument("su(n) requires n >= 2, got " + std::to_string(n));
  std::vector<WeightMultiplicity> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) + 1);
  // Root e_a - e_b in the fundamental basis: coordinate i is v_i - v_{i+1}.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      std::vector<Label> eps(n, 0);
      eps[a] = 1;
      eps[b] = -1;
      std::vector<Label> coords(n - 1);
      for (int i = 0; i < n - 1; ++i) coords[i] = eps[i] - eps[i + 1];
      out.push_back({Weight{std::move(coords)}, 1});
    }
  }
  out.push_back({Weight{std::vector<Label>(n - 1, 0)}, static_cast<std::uint64_t>(n - 1)});
  std::sort(out.begin(), out.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.weight < rhs.weight; });
  return out;
}

std::vector<Label> to_epsilon(std::span<const Label> fundamental_coords) {
  std::vector<Label> eps(fundamental_coords.size() + 1, 0);
  for (std::size_t i = fundamental_coords.size(); i-- > 0;) {
    eps[i] = eps[i + 1] + fundamental_coords[i];
  }
  return eps;
}

std::optional<Reflected> reflect_shifted(std::vector<Label> shifted, int n) {
  // Insertion sort into strictly decreasing order; each swap is a transposition.
  int sign = 1;
  for (int i = 1; i < n; ++i) {
    for (int j = i; j > 0 && shifted[j - 1] < shifted[j]; --j) {
      std::swap(shifted[j - 1], shifted[j]);
      sign = -sign;
    }
  }
  std::vector<Label> labels(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    if (shifted[i] == shifted[i + 1]) return std::nullopt;
    labels[i] = shifted[i] - shifted[i + 1] - 1;
  }
  return Reflected{DynkinLabels(n, std::move(labels)), sign};
}

BigInt dimension(const DynkinLabels& labels) {
  const int n = labels.n();
  const auto eps = to_epsilon(labels.labels());
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      numerator *= BigInt(eps[i] - eps[j] + (j - i));
      denominator *= BigInt(j - i);
    }
  }
  return numerator / denominator;
}

Decomposition tensor_with_adjoint_serial(const DynkinLabels& labels) {
  const int n = labels.n();
  const auto shifted = lambda_plus_rho(labels);
  SignedMap acc;
  for (const auto& w : adjoint_weights(n)) accumulate(acc, shifted, w, n);
  return finish(acc, n);
}

Decomposition tensor_with_adjoint(const DynkinLabels& labels) {
  const int n = labels.n();
  const auto shifted = lambda_plus_rho(labels);
  const auto weights = adjoint_weights(n);
  const auto count = static_cast<std::ptrdiff_t>(weights.size());
  SignedMap total;
#pragma omp parallel
  {
    SignedMap local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t w = 0; w < count; ++w) accumulate(local, shifted, weights[w], n);
#pragma omp critical(casimir_tensor_merge)
    for (const auto& [key, mult] : local) total[key] += mult;
  }
  return finish(total, n);
}

Decomposition tensor_with_adjoint(const Decomposition& input, std::uint64_t cap) {
  const std::vector<std::pair<DynkinLabels, std::uint64_t>> items(input.entries().begin(),
                                                                   input.entries().end());
  const auto count = static_cast<std::ptrdiff_t>(items.size());
  std::vector<Decomposition> parts(items.size(), Decomposition(input.n()));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) parts[i] = tensor_with_adjoint_serial(items[i].first);

  Decomposition out(input.n());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (const auto& [labels, mult] : parts[i].entries()) {
      const std::uint64_t scaled = checked_mul(mult, items[i].second);
      total = checked_add(total, scaled);
      if (total > cap) {
        throw CapExceededError("decomposition exceeds the resource cap of " + std::to_string(cap) +
                               " constituents");
      }
      out.add(labels, scaled);
    }
  }
  return out;
}

Decomposition ad_power_decompose(int n, int k, std::uint64_t cap) {
  if (n < 2) throw InvalidArgument("su(n) requires n >= 2, got " + std::to_string(n));
  if (k < 1) throw InvalidArgument("tensor power k must be >= 1, got " + std::to_string(k));
  if (cap < 1) throw CapExceededError("resource cap of 0 admits no constituents");
  Decomposition current(n);
  current.add(DynkinLabels::adjoint(n), 1);
  for (int step = 1; step < k; ++step) current = tensor_with_adjoint(current, cap);
  return current;
}

BigInt ad_power_dimension(int n, int k) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(n) * n - 1,
                static_cast<unsigned long>(k));
  return out;
}

bool VerificationReport::passed() const {
  return !constituents.empty() && checksum_ok() &&
         std::all_of(constituents.begin(), constituents.end(),
                     [](const ConstituentFinding& c) { return c.ok(); });
}

std::map<StableRep, std::uint64_t> VerificationReport::stable_content() const {
  std::map<StableRep, std::uint64_t> out;
  for (const auto& c : constituents) {
    if (c.stable) out[*c.stable] += c.multiplicity;
  }
  return out;
}

VerificationReport verify_ad_power(int n, int k, std::uint64_t cap) {
  if (k < 1) throw InvalidArgument("tensor power k must be >= 1, got " + std::to_string(k));
  if (n < 2 * k + 1) throw StableRangeError(n, k);
  return verify_decomposition(ad_power_decompose(n, k, cap), k);
}

VerificationReport verify_decomposition(const Decomposition& decomposition, int k) {
  const int n = decomposition.n();
  if (k < 1) throw InvalidArgument("tensor power k must be >= 1, got " + std::to_string(k));
  if (n < 2 * k + 1) throw StableRangeError(n, k);

  VerificationReport report;
  report.n = n;
  report.k = k;
  report.expected_checksum = ad_power_dimension(n, k);
  report.checksum = 0;
  for (const auto& [labels, mult] : decomposition.entries()) {
    ConstituentFinding finding{.labels = labels,
                               .multiplicity = mult,
                               .dimension = dimension(labels),
                               .stable = std::nullopt,
                               .poly = std::nullopt,
                               .direct = casimir_direct(labels),
                               .balanced = false,
                               .closed_form_matches = false,
                               .problem = {}};
    report.checksum += finding.dimension * BigInt(mult);
    try {
      finding.stable = extract_stable(labels, k);
    } catch (const MiddleLabelError& e) {
      finding.problem = "theorem violation: " + labels.to_string() + " is not stable for k=" +
                        std::to_string(k) + " (" + e.what() + ")";
      report.constituents.push_back(std::move(finding));
      continue;
    }
    finding.poly = casimir_stable(*finding.stable);
    finding.balanced = is_balanced(*finding.stable);
    finding.closed_form_matches = evaluate(*finding.poly, n) == finding.direct;
    if (!finding.balanced) {
      finding.problem = "theorem violation: " + labels.to_string() + " is unbalanced";
    } else if (!is_linear(*finding.poly)) {
      finding.problem = "theorem violation: " + labels.to_string() + " has a 1/N term";
    } else if (!finding.closed_form_matches) {
      finding.problem = "closed form disagrees with the direct eigenvalue for " + labels.to_string();
    }
    report.constituents.push_back(std::move(finding));
  }
  return report;
}

}  // namespace casimir
