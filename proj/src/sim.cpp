#include "qpb/sim.hpp"

#include <algorithm>
#include <cmath>

namespace qpb {

void NoiseModel::validate() const {
  for (double p : {p1, p2, readout_eps, idle_damping}) {
    if (p < 0.0 || p > 1.0) {
      throw ConfigError("noise probabilities must lie in [0,1]");
    }
  }
}

uint64_t ShotResult::matching(const SuccessPredicate& p) const {
  uint64_t n = 0;
  for (const auto& [bits, count] : counts) {
    if (p.matches(bits)) n += count;
  }
  return n;
}

namespace detail {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

Mat2 prep_matrix(int s) {
  switch (s) {
    case 0: return {{{1, 0}, {0, 1}}};                                  // |0>
    case 1: return {{{0, 1}, {1, 0}}};                                  // |1>
    case 2: return {{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}}; // |+>
    case 3: return {{{kInvSqrt2, kInvSqrt2}, {-kInvSqrt2, kInvSqrt2}}}; // |->
    case 4:
      return {{{kInvSqrt2, kInvSqrt2}, {kI * kInvSqrt2, -kI * kInvSqrt2}}};
    case 5:
      return {{{kInvSqrt2, kInvSqrt2}, {-kI * kInvSqrt2, kI * kInvSqrt2}}};
  }
  throw CircuitError("unknown cardinal state index");
}

Mat2 gate_matrix_1q(Gate::Kind k, int param) {
  switch (k) {
    case Gate::Kind::prep: return prep_matrix(param);
    case Gate::Kind::h:
      return {{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}};
    case Gate::Kind::x: return {{{0, 1}, {1, 0}}};
    case Gate::Kind::z: return {{{1, 0}, {0, -1}}};
    case Gate::Kind::s: return {{{1, 0}, {0, kI}}};
    case Gate::Kind::sdg: return {{{1, 0}, {0, -kI}}};
    case Gate::Kind::cc_x: return {{{0, 1}, {1, 0}}};
    case Gate::Kind::cc_z: return {{{1, 0}, {0, -1}}};
    default: throw CircuitError("not a one-qubit unitary");
  }
}

StateVector::StateVector(int n) : n_(n), amp_(size_t(1) << n) { reset_all(); }

void StateVector::reset_all() {
  std::fill(amp_.begin(), amp_.end(), std::complex<double>{0, 0});
  amp_[0] = 1.0;
}

void StateVector::apply_1q(const Mat2& u, int q) {
  const size_t bit = size_t(1) << q;
  const size_t dim = amp_.size();
  for (size_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    auto a0 = amp_[i];
    auto a1 = amp_[i | bit];
    amp_[i] = u.m[0][0] * a0 + u.m[0][1] * a1;
    amp_[i | bit] = u.m[1][0] * a0 + u.m[1][1] * a1;
  }
}

void StateVector::apply_cx(int control, int target) {
  const size_t cb = size_t(1) << control;
  const size_t tb = size_t(1) << target;
  const size_t dim = amp_.size();
  for (size_t i = 0; i < dim; ++i) {
    if ((i & cb) && !(i & tb)) std::swap(amp_[i], amp_[i | tb]);
  }
}

void StateVector::apply_swap(int a, int b) {
  const size_t ab = size_t(1) << a;
  const size_t bb = size_t(1) << b;
  const size_t dim = amp_.size();
  for (size_t i = 0; i < dim; ++i) {
    if ((i & ab) && !(i & bb)) std::swap(amp_[i], amp_[(i & ~ab) | bb]);
  }
}

void StateVector::apply_controlled_1q(const Mat2& u, int control, int target) {
  const size_t cb = size_t(1) << control;
  const size_t tb = size_t(1) << target;
  const size_t dim = amp_.size();
  for (size_t i = 0; i < dim; ++i) {
    if (!(i & cb) || (i & tb)) continue;
    auto a0 = amp_[i];
    auto a1 = amp_[i | tb];
    amp_[i] = u.m[0][0] * a0 + u.m[0][1] * a1;
    amp_[i | tb] = u.m[1][0] * a0 + u.m[1][1] * a1;
  }
}

void StateVector::apply_pauli(int which, int q) {
  const size_t bit = size_t(1) << q;
  const size_t dim = amp_.size();
  switch (which) {
    case 1:
      for (size_t i = 0; i < dim; ++i) {
        if (!(i & bit)) std::swap(amp_[i], amp_[i | bit]);
      }
      break;
    case 2:
      for (size_t i = 0; i < dim; ++i) {
        if (!(i & bit)) {
          auto a0 = amp_[i];
          amp_[i] = -kI * amp_[i | bit];
          amp_[i | bit] = kI * a0;
        }
      }
      break;
    case 3:
      for (size_t i = 0; i < dim; ++i) {
        if (i & bit) amp_[i] = -amp_[i];
      }
      break;
    default:
      throw CircuitError("bad Pauli index");
  }
}

double StateVector::prob_one(int q) const {
  const size_t bit = size_t(1) << q;
  double p = 0;
  for (size_t i = 0; i < amp_.size(); ++i) {
    if (i & bit) p += std::norm(amp_[i]);
  }
  return p;
}

int StateVector::measure_collapse(int q, Rng& rng) {
  double p1 = prob_one(q);
  int bit = rng.next_double() < p1 ? 1 : 0;
  const size_t mask = size_t(1) << q;
  double keep = bit ? p1 : 1.0 - p1;
  double scale = keep > 0 ? 1.0 / std::sqrt(keep) : 0.0;
  for (size_t i = 0; i < amp_.size(); ++i) {
    bool is_one = (i & mask) != 0;
    if (is_one == (bit != 0)) {
      amp_[i] *= scale;
    } else {
      amp_[i] = 0.0;
    }
  }
  return bit;
}

void StateVector::project_reset(int q, Rng& rng) {
  int bit = measure_collapse(q, rng);
  if (bit) apply_pauli(1, q);
}

void StateVector::damp(int q, double gamma, Rng& rng) {
  // Amplitude damping as a two-outcome Kraus sample.
  double p_emit = gamma * prob_one(q);
  const size_t bit = size_t(1) << q;
  if (rng.next_double() < p_emit) {
    // K1 = sqrt(gamma) |0><1|
    double scale = 1.0 / std::sqrt(prob_one(q));
    for (size_t i = 0; i < amp_.size(); ++i) {
      if (!(i & bit)) {
        amp_[i] = amp_[i | bit] * scale;
        amp_[i | bit] = 0.0;
      }
    }
  } else {
    // K0 = diag(1, sqrt(1-gamma)), renormalized
    double f = std::sqrt(1.0 - gamma);
    for (size_t i = 0; i < amp_.size(); ++i) {
      if (i & bit) amp_[i] *= f;
    }
    double n2 = norm_sq();
    double scale = 1.0 / std::sqrt(n2);
    for (auto& a : amp_) a *= scale;
  }
}

double StateVector::norm_sq() const {
  double s = 0;
  for (const auto& a : amp_) s += std::norm(a);
  return s;
}

std::map<std::string, double> StateVector::joint_distribution(
    const std::vector<std::pair<int, int>>& qubit_to_cbit,
    int num_cbits) const {
  std::map<std::string, double> dist;
  for (size_t i = 0; i < amp_.size(); ++i) {
    double p = std::norm(amp_[i]);
    if (p <= 0.0) continue;
    std::string bits(num_cbits, '0');
    for (const auto& [q, c] : qubit_to_cbit) {
      if (i & (size_t(1) << q)) bits[c] = '1';
    }
    dist[bits] += p;
  }
  return dist;
}

std::vector<Gate> effective_gates(const Circuit& c, const NoiseModel& noise) {
  if (!noise.decompose_swap) return c.gates;
  std::vector<Gate> out;
  out.reserve(c.gates.size() * 2);
  for (const Gate& g : c.gates) {
    if (g.kind == Gate::Kind::swap) {
      out.push_back({Gate::Kind::cx, g.q0, g.q1, -1, -1});
      out.push_back({Gate::Kind::cx, g.q1, g.q0, -1, -1});
      out.push_back({Gate::Kind::cx, g.q0, g.q1, -1, -1});
    } else {
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace detail

namespace {

using detail::StateVector;

struct LayerMarks {
  // gate index -> list of idle qubits to damp after that gate completes the
  // layer; empty unless idle_damping is configured
  std::vector<std::vector<int>> idle_after;
};

LayerMarks idle_damping_plan(const Circuit& c, const std::vector<Gate>& gates) {
  LayerMarks marks;
  marks.idle_after.resize(gates.size());
  Circuit tmp = c;
  tmp.gates = gates;
  auto layers = tmp.layers();
  for (const auto& layer : layers) {
    if (layer.empty()) continue;
    std::vector<char> active(c.qubit_count(), 0);
    for (int gi : layer) {
      const Gate& g = gates[gi];
      active[g.q0] = 1;
      if (g.q1 >= 0) active[g.q1] = 1;
    }
    int last = layer.back();
    for (int q = 0; q < c.qubit_count(); ++q) {
      if (!active[q]) marks.idle_after[last].push_back(q);
    }
  }
  return marks;
}

void apply_two_qubit_noise(StateVector& sv, double p2, int a, int b,
                           Rng& rng) {
  if (p2 <= 0.0 || !rng.bernoulli(p2)) return;
  uint32_t pick = rng.next_below(15) + 1;  // 1..15, skipping identity x identity
  int pa = pick / 4;
  int pb = pick % 4;
  if (pa) sv.apply_pauli(pa, a);
  if (pb) sv.apply_pauli(pb, b);
}

void apply_one_qubit_noise(StateVector& sv, double p1, int q, Rng& rng) {
  if (p1 <= 0.0 || !rng.bernoulli(p1)) return;
  sv.apply_pauli(rng.next_below(3) + 1, q);
}

}  // namespace

ShotResult run_trajectories(const Circuit& c, const NoiseModel& noise,
                            uint64_t shots, uint64_t seed,
                            const SimLimits& limits) {
  noise.validate();
  c.validate();
  if (shots < 1) throw ConfigError("shots must be at least 1");
  if (c.qubit_count() > limits.max_qubits) {
    throw CircuitError("register of " + std::to_string(c.qubit_count()) +
                       " qubits exceeds the configured simulator limit of " +
                       std::to_string(limits.max_qubits));
  }
  ShotResult result;
  result.shots = shots;
  result.circuit_id = c.id();
  result.seed = seed;
  result.backend_id = "sim";

  const std::vector<Gate> gates = detail::effective_gates(c, noise);
  Rng rng(seed);
  StateVector sv(c.qubit_count());

  // Fully noiseless circuits whose measurements are terminal evolve once;
  // the shots are then a multinomial draw from the exact distribution.
  bool measures_terminal = true;
  {
    bool seen_measure = false;
    for (const Gate& g : gates) {
      if (g.kind == Gate::Kind::measure) {
        seen_measure = true;
      } else if (seen_measure) {
        measures_terminal = false;
        break;
      }
    }
  }
  if (noise.is_noiseless() && measures_terminal) {
    std::vector<std::pair<int, int>> measured;
    for (const Gate& g : gates) {
      switch (g.kind) {
        case Gate::Kind::reset:
          break;
        case Gate::Kind::prep:
        case Gate::Kind::h:
        case Gate::Kind::x:
        case Gate::Kind::z:
        case Gate::Kind::s:
        case Gate::Kind::sdg:
          sv.apply_1q(detail::gate_matrix_1q(g.kind, g.param), g.q0);
          break;
        case Gate::Kind::cx:
          sv.apply_cx(g.q0, g.q1);
          break;
        case Gate::Kind::swap:
          sv.apply_swap(g.q0, g.q1);
          break;
        case Gate::Kind::cc_x:
        case Gate::Kind::cc_z:
          sv.apply_controlled_1q(detail::gate_matrix_1q(g.kind, -1), g.q1,
                                 g.q0);
          break;
        case Gate::Kind::measure:
          measured.push_back({g.q0, g.cbit});
          break;
      }
    }
    auto dist = sv.joint_distribution(measured, c.num_measured);
    std::vector<std::pair<std::string, double>> cdf(dist.begin(), dist.end());
    for (uint64_t s = 0; s < shots; ++s) {
      double r = rng.next_double();
      double acc = 0;
      const std::string* chosen = &cdf.back().first;
      for (const auto& [bits, p] : cdf) {
        acc += p;
        if (r < acc) {
          chosen = &bits;
          break;
        }
      }
      ++result.counts[*chosen];
    }
    return result;
  }

  LayerMarks damping;
  if (noise.idle_damping > 0.0) damping = idle_damping_plan(c, gates);

  std::vector<int> cbits(c.num_measured, 0);
  std::vector<char> cbit_known(c.num_measured, 0);
  for (uint64_t s = 0; s < shots; ++s) {
    sv.reset_all();
    std::fill(cbits.begin(), cbits.end(), 0);
    std::fill(cbit_known.begin(), cbit_known.end(), 0);
    for (size_t gi = 0; gi < gates.size(); ++gi) {
      const Gate& g = gates[gi];
      switch (g.kind) {
        case Gate::Kind::reset:
          sv.project_reset(g.q0, rng);
          break;
        case Gate::Kind::prep:
        case Gate::Kind::h:
        case Gate::Kind::x:
        case Gate::Kind::z:
        case Gate::Kind::s:
        case Gate::Kind::sdg:
          sv.apply_1q(detail::gate_matrix_1q(g.kind, g.param), g.q0);
          apply_one_qubit_noise(sv, noise.p1, g.q0, rng);
          break;
        case Gate::Kind::cx:
          sv.apply_cx(g.q0, g.q1);
          apply_two_qubit_noise(sv, noise.p2, g.q0, g.q1, rng);
          break;
        case Gate::Kind::swap:
          sv.apply_swap(g.q0, g.q1);
          apply_two_qubit_noise(sv, noise.p2, g.q0, g.q1, rng);
          break;
        case Gate::Kind::cc_x:
        case Gate::Kind::cc_z: {
          // Classically conditioned frame correction; noiseless by contract.
          auto u = detail::gate_matrix_1q(g.kind, -1);
          if (g.cbit >= 0 && cbit_known[g.cbit]) {
            if (cbits[g.cbit]) sv.apply_1q(u, g.q0);
          } else {
            sv.apply_controlled_1q(u, g.q1, g.q0);
          }
          break;
        }
        case Gate::Kind::measure: {
          int bit = sv.measure_collapse(g.q0, rng);
          if (noise.readout_eps > 0.0 && rng.bernoulli(noise.readout_eps)) {
            bit ^= 1;
          }
          cbits[g.cbit] = bit;
          cbit_known[g.cbit] = 1;
          break;
        }
      }
      if (noise.idle_damping > 0.0) {
        for (int q : damping.idle_after[gi]) {
          sv.damp(q, noise.idle_damping, rng);
        }
      }
    }
    std::string bits(c.num_measured, '0');
    for (int k = 0; k < c.num_measured; ++k) {
      if (cbits[k]) bits[k] = '1';
    }
    ++result.counts[bits];
  }
  return result;
}

}  // namespace qpb
