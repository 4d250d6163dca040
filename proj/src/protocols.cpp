#include "qpb/protocols.hpp"

#include <algorithm>

#include <json.hpp>

namespace qpb {

using nlohmann::json;

double default_threshold(ProtocolId p) {
  switch (p) {
    case ProtocolId::transmit:
    case ProtocolId::do_nothing:
    case ProtocolId::teleportation:
      return 2.0 / 3.0;
    case ProtocolId::bell_state_transfer:
    case ProtocolId::super_dense_coding:
    case ProtocolId::entanglement_swapping:
      return 0.5;
  }
  return 0.5;
}

double threshold(ProtocolId p, const ThresholdOverrides& overrides) {
  auto it = overrides.find(p);
  if (it == overrides.end()) return default_threshold(p);
  if (it->second < 0.0 || it->second > 1.0) {
    throw ConfigError("threshold override for " + to_string(p) +
                      " outside [0,1]");
  }
  return it->second;
}

int min_path_len(ProtocolId p, bool allow_zero_swap) {
  switch (p) {
    case ProtocolId::transmit:
    case ProtocolId::do_nothing:
      return 2;
    case ProtocolId::super_dense_coding:
      return 3;
    case ProtocolId::teleportation:
    case ProtocolId::bell_state_transfer:
      return allow_zero_swap ? 3 : 4;
    case ProtocolId::entanglement_swapping:
      return 5;
  }
  return 2;
}

int swap_distance(ProtocolId p, int n) {
  if (n < min_path_len(p, /*allow_zero_swap=*/true)) {
    throw CircuitError("path length " + std::to_string(n) +
                       " below minimum for " + to_string(p));
  }
  switch (p) {
    case ProtocolId::transmit:
    case ProtocolId::do_nothing:
      return n - 1;
    case ProtocolId::teleportation:
    case ProtocolId::bell_state_transfer:
      return n - 3;
    case ProtocolId::super_dense_coding:
      return n - 2;
    case ProtocolId::entanglement_swapping:
      return n - 5;
  }
  return 0;
}

int template_swap_count(ProtocolId p, int n) {
  switch (p) {
    case ProtocolId::transmit: return n - 1;
    case ProtocolId::do_nothing: return 2 * (n - 1);
    case ProtocolId::teleportation: return n - 3;
    case ProtocolId::bell_state_transfer: return 2 * (n - 2);
    case ProtocolId::super_dense_coding: return 2 * (n - 2);
    case ProtocolId::entanglement_swapping: return n - 5;
  }
  return 0;
}

const std::vector<Variant>& variants_of(ProtocolId p) {
  static const std::vector<Variant> cardinal = [] {
    std::vector<Variant> v;
    for (int k = 0; k < 6; ++k) {
      v.push_back({Variant::Kind::prepared_state, k});
    }
    return v;
  }();
  static const std::vector<Variant> bell{{Variant::Kind::prepared_state, 0}};
  static const std::vector<Variant> messages = [] {
    std::vector<Variant> v;
    for (int k = 0; k < 4; ++k) v.push_back({Variant::Kind::message, k});
    return v;
  }();
  static const std::vector<Variant> settings = [] {
    std::vector<Variant> v;
    for (int k = 0; k < 3; ++k) {
      v.push_back({Variant::Kind::measurement_setting, k});
    }
    return v;
  }();
  switch (p) {
    case ProtocolId::transmit:
    case ProtocolId::do_nothing:
    case ProtocolId::teleportation:
      return cardinal;
    case ProtocolId::bell_state_transfer:
      return bell;
    case ProtocolId::super_dense_coding:
      return messages;
    case ProtocolId::entanglement_swapping:
      return settings;
  }
  return cardinal;
}

SuccessPredicate success_predicate(ProtocolId p, const Variant& v) {
  SuccessPredicate sp;
  switch (p) {
    case ProtocolId::transmit:
    case ProtocolId::do_nothing:
      sp.cbits = {0};
      sp.expected = {0};
      break;
    case ProtocolId::teleportation:
      sp.cbits = {2};
      sp.expected = {0};
      break;
    case ProtocolId::bell_state_transfer:
      sp.cbits = {0, 1};
      sp.expected = {0, 0};
      break;
    case ProtocolId::super_dense_coding:
      sp.cbits = {0, 1};
      sp.expected = {(v.index >> 1) & 1, v.index & 1};
      break;
    case ProtocolId::entanglement_swapping:
      sp.mode = SuccessPredicate::Mode::parity;
      // Bell-measurement outcome bits fold the frame correction into the
      // witness parity: c2 flips X-type outcomes, c3 flips Z-type, and the
      // YY witness expects odd parity (the target state is a -1 eigenstate
      // of YY).
      switch (v.index) {
        case 0: sp.cbits = {0, 1, 2}; sp.parity = 0; break;       // XX
        case 1: sp.cbits = {0, 1, 2, 3}; sp.parity = 1; break;    // YY
        case 2: sp.cbits = {0, 1, 3}; sp.parity = 0; break;       // ZZ
        default: throw CircuitError("unknown witness setting");
      }
      break;
  }
  return sp;
}

namespace {

// Default gate programs. Positions are integers or "n-k" expressions
// evaluated against the path length.
constexpr const char* kTransmitProgram = R"([
  {"op":"reset_all"},
  {"op":"prep","q":0},
  {"op":"swap_chain","from":0,"to":"n-1"},
  {"op":"decode","q":"n-1"},
  {"op":"measure","q":"n-1","cbit":0}
])";

constexpr const char* kDoNothingProgram = R"([
  {"op":"reset_all"},
  {"op":"prep","q":0},
  {"op":"swap_chain","from":0,"to":"n-1"},
  {"op":"swap_chain","from":"n-1","to":0},
  {"op":"decode","q":0},
  {"op":"measure","q":0,"cbit":0}
])";

constexpr const char* kTeleportationProgram = R"([
  {"op":"reset_all"},
  {"op":"prep","q":0},
  {"op":"bell_prep","q":[1,2]},
  {"op":"swap_chain","from":2,"to":"n-1"},
  {"op":"bell_measure","q":[0,1],"cbits":[0,1],
   "corrections":[{"gate":"x","target":"n-1","cbit":1},
                  {"gate":"z","target":"n-1","cbit":0}]},
  {"op":"decode","q":"n-1"},
  {"op":"measure","q":"n-1","cbit":2}
])";

constexpr const char* kBellStateTransferProgram = R"([
  {"op":"reset_all"},
  {"op":"bell_prep","q":[0,1]},
  {"op":"swap_chain","from":1,"to":"n-1"},
  {"op":"swap_chain","from":0,"to":"n-2"},
  {"op":"bell_measure","q":["n-2","n-1"],"cbits":[0,1],"corrections":[]}
])";

constexpr const char* kSuperDenseCodingProgram = R"([
  {"op":"reset_all"},
  {"op":"bell_prep","q":[0,1]},
  {"op":"swap_chain","from":1,"to":"n-1"},
  {"op":"encode_message","q":0},
  {"op":"swap_chain","from":0,"to":"n-2"},
  {"op":"bell_measure","q":["n-2","n-1"],"cbits":[0,1],"corrections":[]}
])";

constexpr const char* kEntanglementSwappingProgram = R"([
  {"op":"reset_all"},
  {"op":"bell_prep","q":[0,1]},
  {"op":"bell_prep","q":[2,3]},
  {"op":"bell_measure","q":[1,2],"cbits":[2,3],"corrections":[]},
  {"op":"swap_chain","from":3,"to":"n-2"},
  {"op":"witness_rot","q":[0,"n-2"]},
  {"op":"measure","q":0,"cbit":0},
  {"op":"measure","q":"n-2","cbit":1}
])";

int eval_pos(const json& j, int n) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "n") return n;
    if (s.rfind("n-", 0) == 0) return n - std::stoi(s.substr(2));
    if (s.rfind("n+", 0) == 0) return n + std::stoi(s.substr(2));
    return std::stoi(s);
  }
  throw CircuitError("bad position expression in protocol program");
}

// Decode sequences inverting each cardinal preparation, in time order.
const std::vector<Gate::Kind>& decode_sequence(int state) {
  static const std::vector<Gate::Kind> seqs[6] = {
      {},
      {Gate::Kind::x},
      {Gate::Kind::h},
      {Gate::Kind::h, Gate::Kind::x},
      {Gate::Kind::sdg, Gate::Kind::h},
      {Gate::Kind::s, Gate::Kind::h},
  };
  if (state < 0 || state > 5) throw CircuitError("unknown cardinal state");
  return seqs[state];
}

struct ProgramBuilder {
  Circuit& c;
  int n;
  const Variant& variant;
  CorrectionMode mode;
  std::vector<std::pair<int, int>> pending;  // (cbit, qubit)

  void gate1(Gate::Kind k, int q) { c.gates.push_back({k, q, -1, -1, -1}); }

  void run_step(const json& step) {
    const std::string op = step.at("op").get<std::string>();
    if (op == "reset_all") {
      for (int q = 0; q < n; ++q) {
        c.gates.push_back({Gate::Kind::reset, q, -1, -1, -1});
      }
    } else if (op == "prep") {
      if (variant.kind != Variant::Kind::prepared_state) {
        throw CircuitError("prep step needs a prepared-state variant");
      }
      c.gates.push_back({Gate::Kind::prep, eval_pos(step.at("q"), n), -1,
                         variant.index, -1});
    } else if (op == "decode") {
      int q = eval_pos(step.at("q"), n);
      for (Gate::Kind k : decode_sequence(variant.index)) gate1(k, q);
    } else if (op == "gate") {
      const std::string name = step.at("name").get<std::string>();
      int q = eval_pos(step.at("q"), n);
      if (name == "h") gate1(Gate::Kind::h, q);
      else if (name == "x") gate1(Gate::Kind::x, q);
      else if (name == "z") gate1(Gate::Kind::z, q);
      else if (name == "s") gate1(Gate::Kind::s, q);
      else if (name == "sdg") gate1(Gate::Kind::sdg, q);
      else throw CircuitError("unknown gate name: " + name);
    } else if (op == "cx") {
      int a = eval_pos(step.at("q").at(0), n);
      int b = eval_pos(step.at("q").at(1), n);
      c.gates.push_back({Gate::Kind::cx, a, b, -1, -1});
    } else if (op == "bell_prep") {
      int a = eval_pos(step.at("q").at(0), n);
      int b = eval_pos(step.at("q").at(1), n);
      gate1(Gate::Kind::h, a);
      c.gates.push_back({Gate::Kind::cx, a, b, -1, -1});
    } else if (op == "swap_chain") {
      int from = eval_pos(step.at("from"), n);
      int to = eval_pos(step.at("to"), n);
      int dir = to > from ? 1 : -1;
      for (int q = from; q != to; q += dir) {
        c.gates.push_back({Gate::Kind::swap, q, q + dir, -1, -1});
      }
    } else if (op == "encode_message") {
      if (variant.kind != Variant::Kind::message) {
        throw CircuitError("encode_message step needs a message variant");
      }
      int q = eval_pos(step.at("q"), n);
      if (variant.index & 1) gate1(Gate::Kind::x, q);
      if (variant.index & 2) gate1(Gate::Kind::z, q);
    } else if (op == "bell_measure") {
      int a = eval_pos(step.at("q").at(0), n);
      int b = eval_pos(step.at("q").at(1), n);
      int ca = step.at("cbits").at(0).get<int>();
      int cb = step.at("cbits").at(1).get<int>();
      c.gates.push_back({Gate::Kind::cx, a, b, -1, -1});
      gate1(Gate::Kind::h, a);
      if (mode == CorrectionMode::feedforward) {
        c.gates.push_back({Gate::Kind::measure, a, -1, -1, ca});
        c.gates.push_back({Gate::Kind::measure, b, -1, -1, cb});
      } else {
        pending.push_back({ca, a});
        pending.push_back({cb, b});
      }
      for (const auto& corr : step.at("corrections")) {
        const std::string g = corr.at("gate").get<std::string>();
        int target = eval_pos(corr.at("target"), n);
        int cbit = corr.at("cbit").get<int>();
        int source = cbit == ca ? a : b;
        Gate::Kind k = g == "x" ? Gate::Kind::cc_x : Gate::Kind::cc_z;
        c.gates.push_back({k, target, source, -1, cbit});
      }
    } else if (op == "witness_rot") {
      if (variant.kind != Variant::Kind::measurement_setting) {
        throw CircuitError("witness_rot step needs a measurement setting");
      }
      for (const auto& jq : step.at("q")) {
        int q = eval_pos(jq, n);
        if (variant.index == 0) {  // XX
          gate1(Gate::Kind::h, q);
        } else if (variant.index == 1) {  // YY
          gate1(Gate::Kind::sdg, q);
          gate1(Gate::Kind::h, q);
        }  // ZZ: computational basis
      }
    } else if (op == "measure") {
      int q = eval_pos(step.at("q"), n);
      int cbit = step.at("cbit").get<int>();
      pending.push_back({cbit, q});
    } else {
      throw CircuitError("unknown protocol program op: " + op);
    }
  }

  void flush_measures() {
    std::sort(pending.begin(), pending.end());
    for (const auto& [cbit, q] : pending) {
      c.gates.push_back({Gate::Kind::measure, q, -1, -1, cbit});
    }
    pending.clear();
  }
};

}  // namespace

TemplateRegistry::TemplateRegistry() {
  programs_[ProtocolId::transmit] = kTransmitProgram;
  programs_[ProtocolId::do_nothing] = kDoNothingProgram;
  programs_[ProtocolId::teleportation] = kTeleportationProgram;
  programs_[ProtocolId::bell_state_transfer] = kBellStateTransferProgram;
  programs_[ProtocolId::super_dense_coding] = kSuperDenseCodingProgram;
  programs_[ProtocolId::entanglement_swapping] = kEntanglementSwappingProgram;
}

const TemplateRegistry& TemplateRegistry::builtin() {
  static const TemplateRegistry reg;
  return reg;
}

TemplateRegistry TemplateRegistry::with_overrides(
    const std::string& json_text) const {
  TemplateRegistry out = *this;
  json doc;
  try {
    doc = json::parse(json_text);
    if (doc.at("schema_version").get<int>() != 1) {
      throw ConfigError("unsupported template document schema_version");
    }
    for (const auto& [name, body] : doc.at("templates").items()) {
      ProtocolId p = protocol_from_string(name);
      out.programs_[p] = body.at("program").dump();
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed template document: ") + e.what());
  }
  return out;
}

const std::string& TemplateRegistry::program_text(ProtocolId p) const {
  return programs_.at(p);
}

Circuit TemplateRegistry::build(ProtocolId p, const Path& path,
                                const Variant& v,
                                const BuildOptions& opts) const {
  int n = path.length();
  if (n < min_path_len(p, opts.allow_zero_swap)) {
    throw CircuitError("path of " + std::to_string(n) +
                       " qubits is too short for " + to_string(p));
  }
  const auto& allowed = variants_of(p);
  if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
    throw CircuitError("unknown variant for " + to_string(p));
  }
  Circuit c;
  c.protocol = p;
  c.variant = v;
  c.path = path;
  c.corrections = opts.corrections;
  c.success = success_predicate(p, v);
  ProgramBuilder pb{c, n, v, opts.corrections, {}};
  json program = json::parse(programs_.at(p));
  int max_cbit = -1;
  for (const auto& step : program) pb.run_step(step);
  pb.flush_measures();
  for (const Gate& g : c.gates) {
    if (g.kind == Gate::Kind::measure) max_cbit = std::max(max_cbit, g.cbit);
  }
  c.num_measured = max_cbit + 1;
  c.validate();
  return c;
}

Circuit build_circuit(ProtocolId p, const Path& path, const Variant& v,
                      const BuildOptions& opts) {
  return TemplateRegistry::builtin().build(p, path, v, opts);
}

}  // namespace qpb
