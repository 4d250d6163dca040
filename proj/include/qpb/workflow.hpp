#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpb/assess.hpp"
#include "qpb/journal.hpp"
#include "qpb/topology.hpp"

namespace qpb {

/// strict reproduces the staged selection: do-nothing c2c first on every
/// rectangle, the other protocols gated by that result, transmit reported
/// alongside but never part of the selection. independent runs every
/// protocol ladder ungated.
enum class WorkflowMode { strict, independent };
std::string to_string(WorkflowMode m);
WorkflowMode workflow_mode_from_string(const std::string& s);

struct WorkflowConfig {
  WorkflowMode mode = WorkflowMode::strict;
  uint64_t shots = 1024;
  uint64_t seed = 1;
  std::vector<ProtocolId> protocols;  // empty = all six
  ThresholdOverrides thresholds;
  bool allow_zero_swap = false;
  CorrectionMode corrections = CorrectionMode::deferred;
  std::string epoch_label;  // empty: derived from seed/config/topology

  std::vector<ProtocolId> protocol_list() const;
  std::string canonical_json() const;
};

struct Task {
  SubChip subchip;
  ProtocolId protocol = ProtocolId::transmit;
  Stage stage = Stage::c2c;
  PathSet paths;      // what still needs to run
  bool rerun = false; // residual paths of an open (partial) task
  std::string subchip_id() const { return subchip.id(); }
};

struct PathRecord {
  FidelityEstimate est;
  std::string epoch;
  uint64_t seq = 0;
  int attempt = 0;
};

struct StageOutcome {
  RectStats stats;
  bool passed = false;
};

struct Ladder {
  std::map<Stage, StageOutcome> closed;
  std::optional<Stage> failed_at;
  std::optional<Stage> open_stage;
  std::map<std::string, PathRecord> open_results;  // key: Path::to_string()
};

/// Persistent staged workflow state. All mutations are journaled as
/// line-delimited records; replaying a journal reproduces the state
/// bit-exactly (checked by digest).
class AssessmentState {
 public:
  AssessmentState(const ChipTopology& topo, const WorkflowConfig& cfg);

  const ChipTopology& topology() const { return *topo_; }
  const WorkflowConfig& config() const { return cfg_; }
  const std::string& epoch() const { return epoch_; }

  /// Next runnable tasks, deterministically ordered by (protocol, sub-chip,
  /// stage). Empty when every ladder is terminal.
  std::vector<Task> plan() const;

  /// Records per-path estimates for a planned task. When the estimates cover
  /// the stage's full path set the stage closes (pass/fail); otherwise
  /// `partial` must be set and the task stays open listing the missing paths.
  void record(const Task& task, const std::vector<FidelityEstimate>& estimates,
              bool partial = false);

  /// Unions rerun results (missing paths of the open task) into the stage.
  /// Overlapping paths are journaled as conflicts; the newest result wins.
  void merge(const std::string& subchip_id, ProtocolId protocol, Stage stage,
             const std::vector<FidelityEstimate>& estimates);

  /// Reconstructs state by replaying a journal; refuses topology mismatches
  /// and verifies the trailing digest when present.
  static AssessmentState resume(const std::filesystem::path& journal_file,
                                const ChipTopology& topo);

  void attach_journal(JournalWriter* writer);

  std::string digest() const;

  const std::map<std::pair<std::string, int>, Ladder>& ladders() const {
    return ladders_;
  }
  const Ladder* find_ladder(const std::string& subchip_id,
                            ProtocolId p) const;
  const SubChip& subchip(const std::string& subchip_id) const;
  const std::map<std::string, SubChip>& subchips() const { return subchips_; }

  bool stage_passed(const std::string& subchip_id, ProtocolId p,
                    Stage s) const;

  /// Full path set of a stage for a sub-chip under this config (A-L honors
  /// the protocol's minimum path length).
  PathSet stage_paths(const SubChip& sc, ProtocolId p, Stage s) const;

  /// Missing paths of an open task (empty when none open).
  std::vector<Path> missing_paths(const std::string& subchip_id, ProtocolId p,
                                  Stage s) const;

  /// Deterministic per-path / per-circuit seeds: run seed x (sub-chip,
  /// protocol, stage, path, attempt), then x variant. Reruns of an
  /// already-present path get a fresh attempt index; first results of a path
  /// always use attempt 0, which is what makes split runs merge bit-exactly.
  int next_attempt(const std::string& subchip_id, ProtocolId p, Stage s,
                   const Path& path) const;
  uint64_t path_seed(const std::string& subchip_id, ProtocolId p, Stage s,
                     const Path& path, int attempt) const;
  uint64_t circuit_seed(const std::string& subchip_id, ProtocolId p, Stage s,
                        const Path& path, const Variant& v) const;

  /// Gating soundness checks; throws WorkflowError on violation. Exercised
  /// heavily by the property suite.
  void check_invariants() const;

 private:
  void write_header_once();
  void journal_line(const std::string& text);
  void emit_path_result(const std::string& subchip_id, ProtocolId p, Stage s,
                        const FidelityEstimate& est);
  void apply_path_result(const std::string& subchip_id, ProtocolId p, Stage s,
                         const PathRecord& rec, bool from_replay);
  void apply_stage_close(const std::string& subchip_id, ProtocolId p, Stage s,
                         bool passed, bool from_replay,
                         const RectStats* expect = nullptr);
  void close_if_complete(const std::string& subchip_id, ProtocolId p, Stage s);
  std::optional<Task> next_task(const std::string& subchip_id,
                                ProtocolId p) const;
  bool gate_open(const std::string& subchip_id, ProtocolId p) const;
  std::vector<Stage> stage_order(const SubChip& sc) const;

  const ChipTopology* topo_;
  WorkflowConfig cfg_;
  std::string epoch_;
  std::map<std::string, SubChip> subchips_;
  std::vector<std::string> single_ids_;  // by rectangle index
  std::vector<std::string> pair_ids_;    // by (i,j)
  std::map<std::pair<std::string, int>, Ladder> ladders_;
  JournalWriter* journal_ = nullptr;
  bool header_written_ = false;
  uint64_t seq_ = 0;
};

/// Parses a journal header into the config it was written with.
WorkflowConfig config_from_journal_header(const std::string& header_line);

}  // namespace qpb
