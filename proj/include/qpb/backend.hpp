#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpb/sim.hpp"

namespace qpb {

struct BackendJob {
  enum class Status { queued, running, done, cancelled, partial };
  std::string id;
  Status status = Status::queued;
  uint64_t shots = 0;
  /// Index-aligned with the submitted batch; nullopt for cancelled circuits.
  std::vector<std::optional<ShotResult>> results;
  std::vector<size_t> cancelled_indices;
};

std::string to_string(BackendJob::Status s);

/// Execution backends share one job contract: submit a batch, poll until it
/// stops moving, read per-circuit counts. The simulator completes
/// synchronously; the mock remote provider persists job documents in a
/// directory and can inject cancellations to exercise partial-result
/// handling.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual const std::string& id() const = 0;
  virtual BackendJob submit(const std::vector<Circuit>& batch,
                            uint64_t shots) = 0;
  virtual BackendJob poll(const std::string& job_id) = 0;

  /// URIs: sim://default, mock://<directory>[?cancel_rate=<r>].
  /// QPB_SEED-derived seeds are used for circuits that do not carry one.
  static std::unique_ptr<Backend> open(const std::string& uri,
                                       const NoiseModel& noise,
                                       uint64_t base_seed, int threads = 0);
};

/// Runs a batch on the local trajectory engine with a worker pool.
/// seeds[i]==0 falls back to derive_seed(base_seed, job "/" index).
std::vector<ShotResult> run_batch(const std::vector<Circuit>& batch,
                                  const NoiseModel& noise, uint64_t shots,
                                  const std::vector<uint64_t>& seeds,
                                  int threads);

}  // namespace qpb
