#pragma once

#include <map>
#include <string>

#include "qpb/sim.hpp"

namespace qpb {

/// Exact channel composition on a density matrix; the verification oracle for
/// the trajectory engine. Circuits must keep their measurements terminal
/// (the default deferred-correction form does). Limited to small registers.
std::map<std::string, double> run_density_matrix(const Circuit& c,
                                                 const NoiseModel& noise,
                                                 int max_qubits = 10);

/// Probability mass of outcomes the circuit's success predicate accepts.
double oracle_success_probability(const Circuit& c, const NoiseModel& noise,
                                  int max_qubits = 10);

}  // namespace qpb
