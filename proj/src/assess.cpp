#include "qpb/assess.hpp"

#include <algorithm>
#include <cmath>

namespace qpb {

namespace {

void check_variants_complete(ProtocolId p,
                             const std::map<int, double>& by_variant) {
  for (const Variant& v : variants_of(p)) {
    if (!by_variant.count(v.index)) {
      throw ConfigError("missing variant " + v.label() + " for " +
                        to_string(p));
    }
  }
}

}  // namespace

double fidelity_from_success_probs(ProtocolId p,
                                   const std::map<int, double>& by_variant) {
  check_variants_complete(p, by_variant);
  switch (p) {
    case ProtocolId::transmit:
    case ProtocolId::do_nothing:
    case ProtocolId::teleportation:
    case ProtocolId::super_dense_coding:
    case ProtocolId::bell_state_transfer: {
      double sum = 0;
      for (const auto& [idx, prob] : by_variant) sum += prob;
      return sum / static_cast<double>(by_variant.size());
    }
    case ProtocolId::entanglement_swapping: {
      // predicates already estimate <XX>, -<YY, <ZZ> as 2p-1 each
      double acc = 1.0;
      for (const auto& [idx, prob] : by_variant) acc += 2.0 * prob - 1.0;
      return std::clamp(acc / 4.0, 0.0, 1.0);
    }
  }
  return 0.0;
}

FidelityEstimate estimate_fidelity(
    ProtocolId p, const Path& path,
    const std::vector<std::pair<Variant, ShotResult>>& per_variant) {
  std::map<int, double> probs;
  std::map<int, double> vars;  // variance of each per-variant estimate
  uint64_t total_shots = 0;
  for (const auto& [variant, result] : per_variant) {
    if (result.shots == 0) {
      throw ConfigError("variant " + variant.label() + " has zero shots");
    }
    SuccessPredicate pred = success_predicate(p, variant);
    double q = static_cast<double>(result.matching(pred)) /
               static_cast<double>(result.shots);
    probs[variant.index] = q;
    vars[variant.index] = q * (1.0 - q) / static_cast<double>(result.shots);
    total_shots += result.shots;
  }
  check_variants_complete(p, probs);

  FidelityEstimate est;
  est.protocol = p;
  est.path = path;
  est.shots_used = total_shots;
  est.value = fidelity_from_success_probs(p, probs);
  double var_sum = 0;
  for (const auto& [idx, v] : vars) var_sum += v;
  if (p == ProtocolId::entanglement_swapping) {
    // settings enter as 2p-1, so each contributes 4x its binomial variance
    est.stderr_ = std::sqrt(4.0 * var_sum) / 4.0;
  } else {
    est.stderr_ = std::sqrt(var_sum) / static_cast<double>(probs.size());
  }
  return est;
}

RectStats aggregate(const std::string& subchip_id, ProtocolId protocol,
                    Stage stage, std::vector<FidelityEstimate> estimates) {
  if (estimates.empty()) {
    throw ConfigError("cannot aggregate an empty estimate list");
  }
  RectStats stats;
  stats.subchip_id = subchip_id;
  stats.protocol = protocol;
  stats.stage = stage;
  // canonical path order makes the aggregation independent of arrival order,
  // including the floating-point sum and argmin ties
  std::sort(estimates.begin(), estimates.end(),
            [](const FidelityEstimate& a, const FidelityEstimate& b) {
              return a.path < b.path;
            });
  double sum = 0;
  stats.min = estimates.front().value;
  stats.max = estimates.front().value;
  stats.argmin = estimates.front().path;
  for (const auto& e : estimates) {
    sum += e.value;
    if (e.value < stats.min) {
      stats.min = e.value;
      stats.argmin = e.path;
    }
    stats.max = std::max(stats.max, e.value);
  }
  stats.mean = sum / static_cast<double>(estimates.size());
  stats.estimates = std::move(estimates);
  return stats;
}

bool pass_decision(const RectStats& stats, double threshold) {
  return stats.min >= threshold;
}

}  // namespace qpb
