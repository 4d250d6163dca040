#include "qpb/circuit.hpp"

#include <algorithm>
#include <cstdlib>

#include <json.hpp>

#include "qpb/protocols.hpp"

namespace qpb {

using nlohmann::json;

std::string to_string(ProtocolId p) {
  switch (p) {
    case ProtocolId::transmit: return "transmit";
    case ProtocolId::do_nothing: return "do-nothing";
    case ProtocolId::teleportation: return "teleportation";
    case ProtocolId::bell_state_transfer: return "bell-state-transfer";
    case ProtocolId::super_dense_coding: return "super-dense-coding";
    case ProtocolId::entanglement_swapping: return "entanglement-swapping";
  }
  return "?";
}

ProtocolId protocol_from_string(const std::string& s) {
  std::string k = s;
  std::replace(k.begin(), k.end(), '_', '-');
  for (ProtocolId p : kAllProtocols) {
    if (k == to_string(p)) return p;
  }
  throw ConfigError("unknown protocol: " + s);
}

std::string Variant::label() const {
  switch (kind) {
    case Kind::prepared_state: {
      static const char* names[] = {"+Z", "-Z", "+X", "-X", "+Y", "-Y"};
      if (index >= 0 && index < 6) return std::string("state") + names[index];
      break;
    }
    case Kind::message: {
      std::string b;
      b.push_back(index & 2 ? '1' : '0');
      b.push_back(index & 1 ? '1' : '0');
      return "msg" + b;
    }
    case Kind::measurement_setting: {
      static const char* names[] = {"XX", "YY", "ZZ"};
      if (index >= 0 && index < 3) return std::string("meas") + names[index];
      break;
    }
  }
  return "variant" + std::to_string(index);
}

bool SuccessPredicate::matches(const std::string& bits) const {
  if (mode == Mode::equals) {
    for (size_t k = 0; k < cbits.size(); ++k) {
      int b = bits.at(cbits[k]) - '0';
      if (b != expected[k]) return false;
    }
    return true;
  }
  int acc = 0;
  for (int c : cbits) acc ^= bits.at(c) - '0';
  return acc == parity;
}

std::string to_string(Gate::Kind k) {
  switch (k) {
    case Gate::Kind::reset: return "reset";
    case Gate::Kind::prep: return "prep";
    case Gate::Kind::h: return "h";
    case Gate::Kind::x: return "x";
    case Gate::Kind::z: return "z";
    case Gate::Kind::s: return "s";
    case Gate::Kind::sdg: return "sdg";
    case Gate::Kind::cx: return "cx";
    case Gate::Kind::swap: return "swap";
    case Gate::Kind::measure: return "measure";
    case Gate::Kind::cc_x: return "cc_x";
    case Gate::Kind::cc_z: return "cc_z";
  }
  return "?";
}

int Circuit::swap_count() const {
  return static_cast<int>(std::count_if(
      gates.begin(), gates.end(),
      [](const Gate& g) { return g.kind == Gate::Kind::swap; }));
}

std::string Circuit::id() const {
  return to_string(protocol) + "/" + variant.label() + "/" + path.to_string();
}

void Circuit::validate() const {
  int n = qubit_count();
  bool measured = false;
  auto in_range = [&](int q) { return q >= 0 && q < n; };
  for (const Gate& g : gates) {
    if (!in_range(g.q0)) throw CircuitError("gate position out of range");
    switch (g.kind) {
      case Gate::Kind::cx:
      case Gate::Kind::swap:
        if (!in_range(g.q1)) throw CircuitError("gate position out of range");
        if (std::abs(g.q0 - g.q1) != 1) {
          throw CircuitError(
              "two-qubit gate on non-adjacent path positions " +
              std::to_string(g.q0) + "," + std::to_string(g.q1));
        }
        break;
      case Gate::Kind::cc_x:
      case Gate::Kind::cc_z:
        // classical control: source qubit recorded but no coupler involved
        if (!in_range(g.q1) || g.cbit < 0) {
          throw CircuitError("classically controlled gate needs a source");
        }
        break;
      case Gate::Kind::measure:
        if (g.cbit < 0) throw CircuitError("measure without classical bit");
        measured = true;
        break;
      default:
        break;
    }
  }
  if (!measured) throw CircuitError("circuit has no measurement");
}

std::vector<std::vector<int>> Circuit::layers() const {
  std::vector<std::vector<int>> out;
  std::vector<int> busy_until(qubit_count(), -1);
  for (size_t gi = 0; gi < gates.size(); ++gi) {
    const Gate& g = gates[gi];
    std::vector<int> qubits{g.q0};
    if (g.q1 >= 0) qubits.push_back(g.q1);
    int layer = 0;
    for (int q : qubits) layer = std::max(layer, busy_until[q] + 1);
    if (static_cast<size_t>(layer) >= out.size()) out.resize(layer + 1);
    out[layer].push_back(static_cast<int>(gi));
    for (int q : qubits) busy_until[q] = layer;
  }
  return out;
}

namespace {

const char* variant_kind_name(Variant::Kind k) {
  switch (k) {
    case Variant::Kind::prepared_state: return "prepared_state";
    case Variant::Kind::message: return "message";
    case Variant::Kind::measurement_setting: return "measurement_setting";
  }
  return "?";
}

Variant::Kind variant_kind_from_name(const std::string& s) {
  if (s == "prepared_state") return Variant::Kind::prepared_state;
  if (s == "message") return Variant::Kind::message;
  if (s == "measurement_setting") return Variant::Kind::measurement_setting;
  throw CircuitError("unknown variant kind: " + s);
}

}  // namespace

std::string Circuit::to_json_text() const {
  json doc;
  doc["schema_version"] = 1;
  doc["protocol"] = to_string(protocol);
  doc["variant"] = {{"kind", variant_kind_name(variant.kind)},
                    {"index", variant.index},
                    {"label", variant.label()}};
  doc["path"] = path.qubits;
  doc["seed"] = seed;
  doc["corrections"] =
      corrections == CorrectionMode::deferred ? "deferred" : "feedforward";
  json gl = json::array();
  for (const Gate& g : gates) {
    json jg;
    jg["g"] = to_string(g.kind);
    json q = json::array();
    q.push_back(g.q0);
    if (g.q1 >= 0) q.push_back(g.q1);
    jg["q"] = q;
    if (g.param >= 0) jg["state"] = g.param;
    if (g.cbit >= 0) jg["c"] = g.cbit;
    gl.push_back(jg);
  }
  doc["gates"] = gl;
  return doc.dump();
}

Circuit circuit_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CircuitError(std::string("malformed circuit document: ") + e.what());
  }
  try {
    Circuit c;
    c.protocol = protocol_from_string(doc.at("protocol").get<std::string>());
    c.variant.kind =
        variant_kind_from_name(doc.at("variant").at("kind").get<std::string>());
    c.variant.index = doc.at("variant").at("index").get<int>();
    for (const auto& q : doc.at("path")) c.path.qubits.push_back(q.get<int>());
    c.seed = doc.at("seed").get<uint64_t>();
    c.corrections = doc.at("corrections").get<std::string>() == "feedforward"
                        ? CorrectionMode::feedforward
                        : CorrectionMode::deferred;
    int max_cbit = -1;
    for (const auto& jg : doc.at("gates")) {
      Gate g;
      const std::string name = jg.at("g").get<std::string>();
      static const Gate::Kind kinds[] = {
          Gate::Kind::reset, Gate::Kind::prep, Gate::Kind::h, Gate::Kind::x,
          Gate::Kind::z, Gate::Kind::s, Gate::Kind::sdg, Gate::Kind::cx,
          Gate::Kind::swap, Gate::Kind::measure, Gate::Kind::cc_x,
          Gate::Kind::cc_z};
      bool found = false;
      for (Gate::Kind k : kinds) {
        if (name == to_string(k)) {
          g.kind = k;
          found = true;
          break;
        }
      }
      if (!found) throw CircuitError("unknown gate in circuit document");
      const auto& q = jg.at("q");
      g.q0 = q.at(0).get<int>();
      if (q.size() > 1) g.q1 = q.at(1).get<int>();
      if (jg.contains("state")) g.param = jg.at("state").get<int>();
      if (jg.contains("c")) g.cbit = jg.at("c").get<int>();
      if (g.kind == Gate::Kind::measure) max_cbit = std::max(max_cbit, g.cbit);
      c.gates.push_back(g);
    }
    c.num_measured = max_cbit + 1;
    c.success = success_predicate(c.protocol, c.variant);
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw CircuitError(std::string("malformed circuit document: ") + e.what());
  }
}

}  // namespace qpb
