#include "qpb/oracle.hpp"

#include <cmath>

namespace qpb {

namespace {

using detail::Mat2;
using Cplx = std::complex<double>;

/// Density matrix over n qubits, row-major dim x dim.
class DensityMatrix {
 public:
  explicit DensityMatrix(int n) : n_(n), dim_(size_t(1) << n),
                                  rho_(dim_ * dim_, Cplx{0, 0}) {
    rho_[0] = 1.0;
  }

  Cplx& at(size_t r, size_t c) { return rho_[r * dim_ + c]; }
  const Cplx& at(size_t r, size_t c) const { return rho_[r * dim_ + c]; }

  void apply_1q(const Mat2& u, int q) {
    const size_t bit = size_t(1) << q;
    // rows: rho <- U rho
    for (size_t r = 0; r < dim_; ++r) {
      if (r & bit) continue;
      for (size_t c = 0; c < dim_; ++c) {
        Cplx a0 = at(r, c);
        Cplx a1 = at(r | bit, c);
        at(r, c) = u.m[0][0] * a0 + u.m[0][1] * a1;
        at(r | bit, c) = u.m[1][0] * a0 + u.m[1][1] * a1;
      }
    }
    // cols: rho <- rho U+
    for (size_t c = 0; c < dim_; ++c) {
      if (c & bit) continue;
      for (size_t r = 0; r < dim_; ++r) {
        Cplx a0 = at(r, c);
        Cplx a1 = at(r, c | bit);
        at(r, c) = a0 * std::conj(u.m[0][0]) + a1 * std::conj(u.m[0][1]);
        at(r, c | bit) = a0 * std::conj(u.m[1][0]) + a1 * std::conj(u.m[1][1]);
      }
    }
  }

  void apply_controlled_1q(const Mat2& u, int control, int target) {
    const size_t cb = size_t(1) << control;
    const size_t tb = size_t(1) << target;
    for (size_t r = 0; r < dim_; ++r) {
      if (!(r & cb) || (r & tb)) continue;
      for (size_t c = 0; c < dim_; ++c) {
        Cplx a0 = at(r, c);
        Cplx a1 = at(r | tb, c);
        at(r, c) = u.m[0][0] * a0 + u.m[0][1] * a1;
        at(r | tb, c) = u.m[1][0] * a0 + u.m[1][1] * a1;
      }
    }
    for (size_t c = 0; c < dim_; ++c) {
      if (!(c & cb) || (c & tb)) continue;
      for (size_t r = 0; r < dim_; ++r) {
        Cplx a0 = at(r, c);
        Cplx a1 = at(r, c | tb);
        at(r, c) = a0 * std::conj(u.m[0][0]) + a1 * std::conj(u.m[0][1]);
        at(r, c | tb) = a0 * std::conj(u.m[1][0]) + a1 * std::conj(u.m[1][1]);
      }
    }
  }

  // rho <- P rho P for an index permutation (cx and swap are involutions)
  template <typename Perm>
  void apply_permutation(Perm perm) {
    std::vector<Cplx> next(rho_.size());
    for (size_t r = 0; r < dim_; ++r) {
      size_t pr = perm(r);
      for (size_t c = 0; c < dim_; ++c) {
        next[pr * dim_ + perm(c)] = rho_[r * dim_ + c];
      }
    }
    rho_.swap(next);
  }

  void apply_cx(int control, int target) {
    const size_t cb = size_t(1) << control;
    const size_t tb = size_t(1) << target;
    apply_permutation([&](size_t i) { return (i & cb) ? (i ^ tb) : i; });
  }

  void apply_swap(int a, int b) {
    const size_t ab = size_t(1) << a;
    const size_t bb = size_t(1) << b;
    apply_permutation([&](size_t i) {
      bool ba = (i & ab) != 0;
      bool bbit = (i & bb) != 0;
      if (ba == bbit) return i;
      return i ^ ab ^ bb;
    });
  }

  // rho <- sum_k K_k rho K_k+ for 2x2 Kraus set on one qubit
  void apply_kraus_1q(const std::vector<Mat2>& kraus, int q) {
    DensityMatrix acc(n_);
    std::fill(acc.rho_.begin(), acc.rho_.end(), Cplx{0, 0});
    for (const Mat2& k : kraus) {
      DensityMatrix tmp = *this;
      tmp.apply_1q(k, q);
      for (size_t i = 0; i < rho_.size(); ++i) acc.rho_[i] += tmp.rho_[i];
    }
    rho_.swap(acc.rho_);
  }

  void depolarize_1q(double p, int q) {
    if (p <= 0) return;
    DensityMatrix acc = *this;
    acc.scale(1.0 - p);
    for (int pauli = 1; pauli <= 3; ++pauli) {
      DensityMatrix tmp = *this;
      tmp.apply_pauli(pauli, q);
      acc.add_scaled(tmp, p / 3.0);
    }
    rho_.swap(acc.rho_);
  }

  void depolarize_2q(double p, int a, int b) {
    if (p <= 0) return;
    DensityMatrix acc = *this;
    acc.scale(1.0 - p);
    for (int pick = 1; pick < 16; ++pick) {
      DensityMatrix tmp = *this;
      int pa = pick / 4;
      int pb = pick % 4;
      if (pa) tmp.apply_pauli(pa, a);
      if (pb) tmp.apply_pauli(pb, b);
      acc.add_scaled(tmp, p / 15.0);
    }
    rho_.swap(acc.rho_);
  }

  void apply_pauli(int which, int q) {
    static const Mat2 paulis[4] = {
        {{{1, 0}, {0, 1}}},
        {{{0, 1}, {1, 0}}},
        {{{0, Cplx{0, -1}}, {Cplx{0, 1}, 0}}},
        {{{1, 0}, {0, -1}}},
    };
    apply_1q(paulis[which], q);
  }

  void reset(int q) {
    // rho <- P0 rho P0 + X P1 rho P1 X
    const Mat2 p0{{{1, 0}, {0, 0}}};
    const Mat2 xp1{{{0, 1}, {0, 0}}};  // X * |1><1|
    std::vector<Mat2> kraus{p0, xp1};
    apply_kraus_1q(kraus, q);
  }

  void damp(double gamma, int q) {
    double s = std::sqrt(1.0 - gamma);
    double g = std::sqrt(gamma);
    Mat2 k0{{{1, 0}, {0, s}}};
    Mat2 k1{{{0, g}, {0, 0}}};
    apply_kraus_1q({k0, k1}, q);
  }

  void scale(double f) {
    for (auto& v : rho_) v *= f;
  }

  void add_scaled(const DensityMatrix& o, double f) {
    for (size_t i = 0; i < rho_.size(); ++i) rho_[i] += o.rho_[i] * f;
  }

  double diagonal(size_t i) const { return at(i, i).real(); }
  size_t dim() const { return dim_; }
  int n() const { return n_; }

 private:
  int n_;
  size_t dim_;
  std::vector<Cplx> rho_;
};

}  // namespace

std::map<std::string, double> run_density_matrix(const Circuit& c,
                                                 const NoiseModel& noise,
                                                 int max_qubits) {
  noise.validate();
  c.validate();
  if (c.qubit_count() > max_qubits) {
    throw CircuitError("register of " + std::to_string(c.qubit_count()) +
                       " qubits exceeds the oracle limit of " +
                       std::to_string(max_qubits));
  }
  const std::vector<Gate> gates = detail::effective_gates(c, noise);
  // all measurements must be terminal for exact channel composition
  {
    bool seen_measure = false;
    for (const Gate& g : gates) {
      if (g.kind == Gate::Kind::measure) {
        seen_measure = true;
      } else if (seen_measure) {
        throw CircuitError(
            "density-matrix oracle requires terminal measurements; build the "
            "circuit with deferred corrections");
      }
    }
  }

  std::vector<std::vector<int>> idle_after;
  if (noise.idle_damping > 0.0) {
    Circuit tmp = c;
    tmp.gates = gates;
    auto layers = tmp.layers();
    idle_after.resize(gates.size());
    for (const auto& layer : layers) {
      if (layer.empty()) continue;
      std::vector<char> active(c.qubit_count(), 0);
      for (int gi : layer) {
        active[gates[gi].q0] = 1;
        if (gates[gi].q1 >= 0) active[gates[gi].q1] = 1;
      }
      for (int q = 0; q < c.qubit_count(); ++q) {
        if (!active[q]) idle_after[layer.back()].push_back(q);
      }
    }
  }

  DensityMatrix rho(c.qubit_count());
  std::vector<std::pair<int, int>> measured;
  for (size_t gi = 0; gi < gates.size(); ++gi) {
    const Gate& g = gates[gi];
    switch (g.kind) {
      case Gate::Kind::reset:
        rho.reset(g.q0);
        break;
      case Gate::Kind::prep:
      case Gate::Kind::h:
      case Gate::Kind::x:
      case Gate::Kind::z:
      case Gate::Kind::s:
      case Gate::Kind::sdg:
        rho.apply_1q(detail::gate_matrix_1q(g.kind, g.param), g.q0);
        rho.depolarize_1q(noise.p1, g.q0);
        break;
      case Gate::Kind::cx:
        rho.apply_cx(g.q0, g.q1);
        rho.depolarize_2q(noise.p2, g.q0, g.q1);
        break;
      case Gate::Kind::swap:
        rho.apply_swap(g.q0, g.q1);
        rho.depolarize_2q(noise.p2, g.q0, g.q1);
        break;
      case Gate::Kind::cc_x:
      case Gate::Kind::cc_z:
        rho.apply_controlled_1q(detail::gate_matrix_1q(g.kind, -1), g.q1,
                                g.q0);
        break;
      case Gate::Kind::measure:
        measured.push_back({g.q0, g.cbit});
        break;
    }
    if (noise.idle_damping > 0.0) {
      for (int q : idle_after[gi]) rho.damp(noise.idle_damping, q);
    }
  }

  std::map<std::string, double> dist;
  for (size_t i = 0; i < rho.dim(); ++i) {
    double p = rho.diagonal(i);
    if (p <= 0.0) continue;
    std::string bits(c.num_measured, '0');
    for (const auto& [q, cb] : measured) {
      if (i & (size_t(1) << q)) bits[cb] = '1';
    }
    dist[bits] += p;
  }
  if (noise.readout_eps > 0.0) {
    for (int cb = 0; cb < c.num_measured; ++cb) {
      std::map<std::string, double> next;
      for (const auto& [bits, p] : dist) {
        std::string flipped = bits;
        flipped[cb] = bits[cb] == '0' ? '1' : '0';
        next[bits] += p * (1.0 - noise.readout_eps);
        next[flipped] += p * noise.readout_eps;
      }
      dist.swap(next);
    }
  }
  return dist;
}

double oracle_success_probability(const Circuit& c, const NoiseModel& noise,
                                  int max_qubits) {
  auto dist = run_density_matrix(c, noise, max_qubits);
  double p = 0;
  for (const auto& [bits, prob] : dist) {
    if (c.success.matches(bits)) p += prob;
  }
  return p;
}

}  // namespace qpb
