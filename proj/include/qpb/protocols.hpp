#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpb/circuit.hpp"
#include "qpb/topology.hpp"

namespace qpb {

/// Quantumness thresholds. Transmit, do-nothing and teleportation use the
/// 2/3 state-transmission bound; bell-state transfer uses the 0.5 Werner
/// bound. Super-dense coding and entanglement swapping have no stated bound
/// in the source material; 0.5 is the configurable default and reports flag
/// it as such.
double default_threshold(ProtocolId p);

using ThresholdOverrides = std::map<ProtocolId, double>;

/// Effective threshold; overrides win. Throws ConfigError outside [0,1].
double threshold(ProtocolId p, const ThresholdOverrides& overrides = {});

/// Shortest usable path per protocol. Teleportation and bell-state transfer
/// admit n=3 (zero transport swaps) when allow_zero_swap is set.
int min_path_len(ProtocolId p, bool allow_zero_swap = false);

/// Transport swap distance for a path of n qubits:
///   transmit, do-nothing      n-1
///   teleportation, bell-state n-3
///   super-dense coding        n-2
///   entanglement swapping     n-5
/// Throws CircuitError when n is below the protocol's structural minimum.
int swap_distance(ProtocolId p, int n);

/// Total SWAP gates the default template emits for a path of n qubits.
/// Round-trip and two-half transports exceed the reported swap distance:
/// do-nothing runs two n-1 legs, bell-state transfer and super-dense coding
/// move both halves (2(n-2) each).
int template_swap_count(ProtocolId p, int n);

const std::vector<Variant>& variants_of(ProtocolId p);

SuccessPredicate success_predicate(ProtocolId p, const Variant& v);

struct BuildOptions {
  CorrectionMode corrections = CorrectionMode::deferred;
  bool allow_zero_swap = false;
};

/// Protocol gate programs are data: a JSON step list interpreted against the
/// path length and variant. The built-in registry holds the default
/// templates; a protocol definition document may replace a program per
/// template (see README for the step schema).
class TemplateRegistry {
 public:
  static const TemplateRegistry& builtin();
  /// Returns a copy with programs replaced from a definition document:
  ///   {"schema_version":1, "templates": {"<protocol>": {"program": [...]}}}
  TemplateRegistry with_overrides(const std::string& json_text) const;

  const std::string& program_text(ProtocolId p) const;

  Circuit build(ProtocolId p, const Path& path, const Variant& v,
                const BuildOptions& opts = {}) const;

 private:
  TemplateRegistry();
  std::map<ProtocolId, std::string> programs_;
};

/// Builds the template circuit using the built-in registry.
Circuit build_circuit(ProtocolId p, const Path& path, const Variant& v,
                      const BuildOptions& opts = {});

}  // namespace qpb
