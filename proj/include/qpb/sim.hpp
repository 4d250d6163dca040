#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpb/circuit.hpp"
#include "qpb/rng.hpp"

namespace qpb {

/// Synthetic stand-in noise. Depolarizing is inserted after each gate: with
/// probability p1 (one-qubit gates) or p2 (two-qubit gates, both qubits) a
/// uniformly chosen non-identity Pauli lands on the affected qubits.
/// Classically controlled corrections are treated as noiseless frame
/// adjustments. Readout flips each measured bit independently. Optional
/// amplitude damping hits idle qubits once per circuit layer.
struct NoiseModel {
  double p1 = 0.0;
  double p2 = 0.0;
  double readout_eps = 0.0;
  double idle_damping = 0.0;
  /// Decompose each SWAP into 3 CX so p2 applies three times per hop.
  bool decompose_swap = false;

  void validate() const;
  bool is_noiseless() const {
    return p1 == 0.0 && p2 == 0.0 && readout_eps == 0.0 && idle_damping == 0.0;
  }
};

struct ShotResult {
  std::map<std::string, uint64_t> counts;  // bitstring (cbit 0 first) -> n
  uint64_t shots = 0;
  std::string circuit_id;
  uint64_t seed = 0;
  std::string backend_id;

  uint64_t matching(const SuccessPredicate& p) const;
};

struct SimLimits {
  int max_qubits = 24;
};

/// Monte Carlo trajectory execution. Identical (circuit, noise, shots, seed)
/// always produce bit-identical counts.
ShotResult run_trajectories(const Circuit& c, const NoiseModel& noise,
                            uint64_t shots, uint64_t seed,
                            const SimLimits& limits = {});

namespace detail {

struct Mat2 {
  std::complex<double> m[2][2];
};

Mat2 prep_matrix(int cardinal_state);
Mat2 gate_matrix_1q(Gate::Kind k, int param);

/// Statevector register over n qubits (qubit q = bit q of the index).
class StateVector {
 public:
  explicit StateVector(int n);
  void reset_all();
  int n() const { return n_; }
  void apply_1q(const Mat2& u, int q);
  void apply_cx(int control, int target);
  void apply_swap(int a, int b);
  void apply_controlled_1q(const Mat2& u, int control, int target);
  void apply_pauli(int which, int q);  // 1=X, 2=Y, 3=Z
  double prob_one(int q) const;
  int measure_collapse(int q, Rng& rng);
  void project_reset(int q, Rng& rng);
  void damp(int q, double gamma, Rng& rng);
  double norm_sq() const;

  /// Joint outcome distribution over (qubit, cbit) assignments; only valid
  /// when nothing acts after the measurements being marginalized.
  std::map<std::string, double> joint_distribution(
      const std::vector<std::pair<int, int>>& qubit_to_cbit,
      int num_cbits) const;

 private:
  int n_;
  std::vector<std::complex<double>> amp_;
};

/// Expands SWAPs into CX triples when the noise model asks for it.
std::vector<Gate> effective_gates(const Circuit& c, const NoiseModel& noise);

}  // namespace detail

}  // namespace qpb
