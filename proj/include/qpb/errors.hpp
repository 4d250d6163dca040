#pragma once

#include <stdexcept>
#include <string>

namespace qpb {

/// Invalid run configuration, flags, or threshold overrides.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent topology document.
struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Circuit construction or execution rejected an input.
struct CircuitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Backend unreachable, empty batch, or job store failure.
struct BackendError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Corrupt, truncated, or mismatching journal.
struct JournalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Workflow state machine misuse (unplanned task, stage mismatch, bad merge).
struct WorkflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qpb
