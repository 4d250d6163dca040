// throwaway pre-build sanity harness (deleted before commit)
#include <cmath>
#include <cstdio>

#include "qpb/oracle.hpp"
#include "qpb/protocols.hpp"

using namespace qpb;

int main() {
  // 1. transmit decay closed form vs oracle: F(d) = (1 + lambda^d)/2,
  //    lambda = 1 - (16/15) p2
  double p2 = 0.03;
  double lambda = 1.0 - 16.0 / 15.0 * p2;
  NoiseModel noise;
  noise.p2 = p2;
  double worst = 0;
  for (int d = 1; d <= 6; ++d) {
    int n = d + 1;
    Path path;
    for (int q = 0; q < n; ++q) path.qubits.push_back(q);
    double avg = 0;
    for (const Variant& v : variants_of(ProtocolId::transmit)) {
      Circuit c = build_circuit(ProtocolId::transmit, path, v);
      avg += oracle_success_probability(c, noise);
    }
    avg /= 6.0;
    double closed = (1.0 + std::pow(lambda, d)) / 2.0;
    worst = std::max(worst, std::fabs(avg - closed));
    printf("d=%d oracle=%.12f closed=%.12f diff=%.3e\n", d, avg, closed,
           std::fabs(avg - closed));
  }
  printf("lambda check worst diff = %.3e (need < 1e-9)\n", worst);

  // 2. noiseless correctness of every protocol/variant at small n
  NoiseModel clean;
  double worst2 = 0;
  for (ProtocolId p : kAllProtocols) {
    int nmin = min_path_len(p, true);
    for (int n = nmin; n <= 8; ++n) {
      Path path;
      for (int q = 0; q < n; ++q) path.qubits.push_back(q);
      for (const Variant& v : variants_of(p)) {
        Circuit c = build_circuit(p, path, v, {CorrectionMode::deferred, true});
        double ps = oracle_success_probability(c, clean);
        worst2 = std::max(worst2, std::fabs(1.0 - ps));
        if (std::fabs(1.0 - ps) > 1e-9) {
          printf("FAIL %s %s n=%d p=%.6f\n", to_string(p).c_str(),
                 v.label().c_str(), n, ps);
        }
      }
    }
  }
  printf("noiseless correctness worst |1-p| = %.3e\n", worst2);
  return (worst < 1e-9 && worst2 < 1e-9) ? 0 : 1;
}
