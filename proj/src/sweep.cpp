#include "casimir/sweep.hpp"

#include <algorithm>
#include <set>

#include "casimir/casimir_poly.hpp"
#include "casimir/errors.hpp"
#include "casimir/gram.hpp"
#include "casimir/rational.hpp"

namespace casimir {

namespace {

struct RepOutcome {
  std::size_t evaluations = 0;
  bool balanced = false;
  bool linear = false;
  std::size_t oracle_mismatches = 0;
  bool theorem_violation = false;
  bool square_violation = false;
  std::vector<std::string> messages;
};

RepOutcome check_rep(const StableRep& rep, std::span<const int> n_values) {
  RepOutcome out;
  const CasimirPoly poly = casimir_stable(rep);
  out.balanced = is_balanced(rep);
  out.linear = is_linear(poly);
  if (out.balanced != out.linear) {
    out.theorem_violation = true;
    out.messages.push_back("[" + rep.to_string() + "] linear=" + (out.linear ? "true" : "false") +
                           " but balanced=" + (out.balanced ? "true" : "false"));
  }
  const Label gap = area_head(rep) - area_tail(rep);
  const BigInt root = exact_sqrt_or_negative(-poly.am1);
  if (root < 0 || root * root != BigInt(gap) * BigInt(gap)) {
    out.square_violation = true;
    out.messages.push_back("[" + rep.to_string() + "] -am1=" + (-poly.am1).to_string() +
                           " is not the squared area gap " + std::to_string(gap * gap));
  }
  for (int n : n_values) {
    if (n < 2 * rep.k() + 1) continue;
    ++out.evaluations;
    const Rational closed = evaluate(poly, n);
    const Rational direct = casimir_direct(realize(rep, n));
    if (closed != direct) {
      ++out.oracle_mismatches;
      out.messages.push_back("[" + rep.to_string() + "] n=" + std::to_string(n) + ": closed form " +
                             closed.to_string() + " != direct " + direct.to_string());
    }
  }
  return out;
}

SweepSummary merge(std::span<const RepOutcome> outcomes) {
  SweepSummary summary;
  summary.reps = outcomes.size();
  for (const auto& o : outcomes) {
    summary.evaluations += o.evaluations;
    summary.balanced += o.balanced ? 1 : 0;
    summary.linear += o.linear ? 1 : 0;
    summary.oracle_mismatches += o.oracle_mismatches;
    summary.theorem_violations += o.theorem_violation ? 1 : 0;
    summary.square_violations += o.square_violation ? 1 : 0;
    for (const auto& m : o.messages) {
      if (summary.messages.size() < kMaxSweepMessages) summary.messages.push_back(m);
    }
  }
  return summary;
}

}  // namespace

std::vector<StableRep> enumerate_stable_reps(int k_max, Label bound) {
  if (k_max < 1) throw InvalidArgument("k_max must be >= 1");
  if (bound < 0) throw InvalidArgument("label bound must be non-negative");
  // Every rep with k <= k_max is some length-k_max vector pair after zero padding.
  std::set<StableRep> seen;
  std::vector<Label> digits(2 * static_cast<std::size_t>(k_max), 0);
  while (true) {
    std::vector<Label> head(digits.begin(), digits.begin() + k_max);
    std::vector<Label> tail(digits.begin() + k_max, digits.end());
    seen.insert(StableRep(std::move(head), std::move(tail)).canonical());
    std::size_t pos = 0;
    while (pos < digits.size() && digits[pos] == bound) digits[pos++] = 0;
    if (pos == digits.size()) break;
    ++digits[pos];
  }
  return {seen.begin(), seen.end()};
}

SweepSummary stable_sweep_serial(std::span<const StableRep> reps, std::span<const int> n_values) {
  std::vector<RepOutcome> outcomes;
  outcomes.reserve(reps.size());
  for (const auto& rep : reps) outcomes.push_back(check_rep(rep, n_values));
  return merge(outcomes);
}

SweepSummary stable_sweep(std::span<const StableRep> reps, std::span<const int> n_values) {
  std::vector<RepOutcome> outcomes(reps.size());
  const auto count = static_cast<std::ptrdiff_t>(reps.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < count; ++i) outcomes[i] = check_rep(reps[i], n_values);
  return merge(outcomes);
}

}  // namespace casimir
