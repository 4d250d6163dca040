#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpb/errors.hpp"
#include "qpb/topology.hpp"

namespace qpb {

enum class ProtocolId {
  transmit,
  do_nothing,
  teleportation,
  bell_state_transfer,
  super_dense_coding,
  entanglement_swapping,
};

inline constexpr ProtocolId kAllProtocols[] = {
    ProtocolId::transmit,
    ProtocolId::do_nothing,
    ProtocolId::teleportation,
    ProtocolId::bell_state_transfer,
    ProtocolId::super_dense_coding,
    ProtocolId::entanglement_swapping,
};

std::string to_string(ProtocolId p);
ProtocolId protocol_from_string(const std::string& s);

/// One experiment setting of a protocol: a prepared cardinal state, an
/// encoded message, or a witness measurement basis.
struct Variant {
  enum class Kind { prepared_state, message, measurement_setting };
  Kind kind = Kind::prepared_state;
  int index = 0;

  bool operator<(const Variant& o) const { return index < o.index; }
  bool operator==(const Variant& o) const {
    return kind == o.kind && index == o.index;
  }
  std::string label() const;
};

/// Maps a measured bitstring to success/other. Either an exact match on a
/// subset of classical bits, or a parity condition over them.
struct SuccessPredicate {
  enum class Mode { equals, parity };
  Mode mode = Mode::equals;
  std::vector<int> cbits;
  std::vector<int> expected;  // equals: one value per cbit
  int parity = 0;             // parity: required xor over cbits

  bool matches(const std::string& bits) const;
};

/// Gate alphabet. Two-qubit unitaries (cx, swap) act on adjacent path
/// positions only. cc_x / cc_z are the classically controlled teleportation
/// corrections: the control is a classical bit, carried either as a deferred
/// control qubit (default) or applied after a mid-circuit measurement.
struct Gate {
  enum class Kind { reset, prep, h, x, z, s, sdg, cx, swap, measure, cc_x, cc_z };
  Kind kind;
  int q0 = -1;         // target position
  int q1 = -1;         // second position (cx control=q0 target=q1, swap pair,
                       // cc_*: source qubit of the controlling bit)
  int param = -1;      // prep: cardinal state index
  int cbit = -1;       // measure: destination bit; cc_*: controlling bit
};

std::string to_string(Gate::Kind k);

enum class CorrectionMode { deferred, feedforward };

/// A concrete experiment circuit over a path. Gates address path positions
/// 0..n-1; `path` maps positions to physical qubits.
struct Circuit {
  ProtocolId protocol = ProtocolId::transmit;
  Variant variant;
  Path path;
  std::vector<Gate> gates;
  int num_measured = 0;
  SuccessPredicate success;
  uint64_t seed = 0;  // per-circuit seed; 0 lets the backend derive one
  CorrectionMode corrections = CorrectionMode::deferred;

  int qubit_count() const { return path.length(); }
  int swap_count() const;
  std::string id() const;
  /// Ordered gate list as structured text (the documented export schema).
  std::string to_json_text() const;

  /// Throws CircuitError on non-adjacent two-qubit gates, position overflow,
  /// or a missing final measurement.
  void validate() const;

  /// ASAP layering; used for per-layer idle amplitude damping.
  std::vector<std::vector<int>> layers() const;
};

/// Inverse of Circuit::to_json_text (the documented export schema).
Circuit circuit_from_json_text(const std::string& text);

}  // namespace qpb
