#pragma once

#include <map>
#include <vector>

#include "qpb/protocols.hpp"
#include "qpb/sim.hpp"

namespace qpb {

struct FidelityEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  uint64_t shots_used = 0;
  Path path;
  ProtocolId protocol = ProtocolId::transmit;
};

/// Combines per-variant success probabilities into the protocol's fidelity
/// figure:
///   transmit / do-nothing / teleportation: unweighted mean over the six
///     cardinal states (state 2-design, equals the Haar average fidelity);
///   bell-state transfer: P(Phi+ outcome);
///   super-dense coding: mean over the four messages of P(decoded == sent);
///   entanglement swapping: witness (1 + <XX> - <YY> + <ZZ>)/4 with the
///     Bell-frame signs folded into the per-setting predicates, clamped to
///     [0,1].
double fidelity_from_success_probs(ProtocolId p,
                                   const std::map<int, double>& by_variant);

/// Per-path estimate from measured counts. Requires every template variant
/// with at least one shot. Standard errors are binomial, propagated through
/// the mean (witness: quadrature sum of the setting stderrs over 4).
FidelityEstimate estimate_fidelity(
    ProtocolId p, const Path& path,
    const std::vector<std::pair<Variant, ShotResult>>& per_variant);

struct RectStats {
  std::string subchip_id;
  ProtocolId protocol = ProtocolId::transmit;
  Stage stage = Stage::c2c;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  Path argmin;
  std::vector<FidelityEstimate> estimates;
};

RectStats aggregate(const std::string& subchip_id, ProtocolId protocol,
                    Stage stage, std::vector<FidelityEstimate> estimates);

/// Closed comparison: pass iff min >= threshold.
bool pass_decision(const RectStats& stats, double threshold);

}  // namespace qpb
