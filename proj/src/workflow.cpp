#include "qpb/workflow.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "qpb/sha256.hpp"

namespace qpb {

using nlohmann::json;

std::string to_string(WorkflowMode m) {
  return m == WorkflowMode::strict ? "strict" : "independent";
}

WorkflowMode workflow_mode_from_string(const std::string& s) {
  if (s == "strict") return WorkflowMode::strict;
  if (s == "independent") return WorkflowMode::independent;
  throw ConfigError("unknown workflow mode: " + s);
}

std::vector<ProtocolId> WorkflowConfig::protocol_list() const {
  if (!protocols.empty()) return protocols;
  return {kAllProtocols, kAllProtocols + 6};
}

std::string WorkflowConfig::canonical_json() const {
  json doc;
  doc["mode"] = to_string(mode);
  doc["shots"] = shots;
  doc["seed"] = seed;
  json protos = json::array();
  for (ProtocolId p : protocol_list()) protos.push_back(to_string(p));
  doc["protocols"] = protos;
  json th = json::object();
  for (const auto& [p, t] : thresholds) th[to_string(p)] = t;
  doc["thresholds"] = th;
  doc["allow_zero_swap"] = allow_zero_swap;
  doc["corrections"] =
      corrections == CorrectionMode::deferred ? "deferred" : "feedforward";
  return doc.dump();
}

namespace {

int protocol_rank(ProtocolId p) { return static_cast<int>(p); }

int stage_rank(Stage s) { return static_cast<int>(s); }

std::string fmt_exact(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

json path_to_json(const Path& p) {
  json j = json::array();
  for (QubitId q : p.qubits) j.push_back(q);
  return j;
}

Path path_from_json(const json& j) {
  Path p;
  for (const auto& q : j) p.qubits.push_back(q.get<int>());
  return p;
}

}  // namespace

AssessmentState::AssessmentState(const ChipTopology& topo,
                                 const WorkflowConfig& cfg)
    : topo_(&topo), cfg_(cfg) {
  if (cfg_.shots < 1) throw ConfigError("shots must be at least 1");
  for (const auto& [p, t] : cfg_.thresholds) {
    threshold(p, cfg_.thresholds);  // validates range
  }
  epoch_ = cfg_.epoch_label.empty()
               ? Sha256::hex_digest(cfg_.canonical_json() + topo.digest())
                     .substr(0, 12)
               : cfg_.epoch_label;
  for (const Rectangle& r : topo.rectangles()) {
    SubChip sc = make_subchip(topo, {r.index});
    single_ids_.push_back(sc.id());
    subchips_[sc.id()] = std::move(sc);
  }
  for (const auto& [i, j] : topo.rect_adjacency()) {
    SubChip sc = make_subchip(topo, {i, j});
    pair_ids_.push_back(sc.id());
    subchips_[sc.id()] = std::move(sc);
  }
}

const SubChip& AssessmentState::subchip(const std::string& subchip_id) const {
  auto it = subchips_.find(subchip_id);
  if (it == subchips_.end()) {
    throw WorkflowError("unknown sub-chip: " + subchip_id);
  }
  return it->second;
}

const Ladder* AssessmentState::find_ladder(const std::string& subchip_id,
                                           ProtocolId p) const {
  auto it = ladders_.find({subchip_id, static_cast<int>(p)});
  return it == ladders_.end() ? nullptr : &it->second;
}

bool AssessmentState::stage_passed(const std::string& subchip_id, ProtocolId p,
                                   Stage s) const {
  const Ladder* l = find_ladder(subchip_id, p);
  if (!l) return false;
  auto it = l->closed.find(s);
  return it != l->closed.end() && it->second.passed;
}

std::vector<Stage> AssessmentState::stage_order(const SubChip& sc) const {
  if (sc.kind == SubChip::Kind::pair) return {Stage::c2c, Stage::al};
  return {Stage::c2c, Stage::ml, Stage::al};
}

PathSet AssessmentState::stage_paths(const SubChip& sc, ProtocolId p,
                                     Stage s) const {
  int min_len = std::max(2, min_path_len(p, cfg_.allow_zero_swap));
  return enumerate_paths(sc, s, min_len, /*allow_pair_ml=*/false);
}

bool AssessmentState::gate_open(const std::string& subchip_id,
                                ProtocolId p) const {
  const SubChip& sc = subchip(subchip_id);
  if (sc.kind == SubChip::Kind::pair) {
    for (int rect : sc.rect_indices) {
      if (!stage_passed("rect" + std::to_string(rect), p, Stage::al)) {
        return false;
      }
    }
    return true;
  }
  if (cfg_.mode == WorkflowMode::independent) return true;
  if (p == ProtocolId::transmit || p == ProtocolId::do_nothing) return true;
  return stage_passed(subchip_id, ProtocolId::do_nothing, Stage::c2c);
}

std::vector<Path> AssessmentState::missing_paths(const std::string& subchip_id,
                                                 ProtocolId p,
                                                 Stage s) const {
  const Ladder* l = find_ladder(subchip_id, p);
  std::vector<Path> missing;
  if (!l || l->open_stage != s) return missing;
  PathSet full = stage_paths(subchip(subchip_id), p, s);
  for (const Path& path : full.paths) {
    if (!l->open_results.count(path.to_string())) missing.push_back(path);
  }
  return missing;
}

std::optional<Task> AssessmentState::next_task(const std::string& subchip_id,
                                               ProtocolId p) const {
  const SubChip& sc = subchip(subchip_id);
  const Ladder* l = find_ladder(subchip_id, p);
  if (l && l->failed_at) return std::nullopt;
  if (l && l->open_stage) {
    Task t;
    t.subchip = sc;
    t.protocol = p;
    t.stage = *l->open_stage;
    t.rerun = true;
    t.paths.subchip_id = subchip_id;
    t.paths.stage = t.stage;
    t.paths.paths = missing_paths(subchip_id, p, t.stage);
    if (t.paths.paths.empty()) return std::nullopt;
    return t;
  }
  for (Stage s : stage_order(sc)) {
    if (l && l->closed.count(s)) continue;
    if (!gate_open(subchip_id, p)) return std::nullopt;
    Task t;
    t.subchip = sc;
    t.protocol = p;
    t.stage = s;
    t.paths = stage_paths(sc, p, s);
    if (t.paths.paths.empty()) return std::nullopt;
    return t;
  }
  return std::nullopt;
}

std::vector<Task> AssessmentState::plan() const {
  std::vector<Task> tasks;
  auto protocols = cfg_.protocol_list();
  bool has_dn = std::find(protocols.begin(), protocols.end(),
                          ProtocolId::do_nothing) != protocols.end();
  if (cfg_.mode == WorkflowMode::strict && has_dn) {
    // the gate wave: do-nothing c2c across every rectangle comes first
    for (const std::string& id : single_ids_) {
      const Ladder* l = find_ladder(id, ProtocolId::do_nothing);
      if (l && l->closed.count(Stage::c2c)) continue;
      auto t = next_task(id, ProtocolId::do_nothing);
      if (t && t->stage == Stage::c2c) tasks.push_back(std::move(*t));
    }
    if (!tasks.empty()) return tasks;
  }
  for (const auto& ids : {single_ids_, pair_ids_}) {
    for (const std::string& id : ids) {
      for (ProtocolId p : protocols) {
        auto t = next_task(id, p);
        if (t) tasks.push_back(std::move(*t));
      }
    }
  }
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    auto key = [](const Task& t) {
      return std::make_tuple(protocol_rank(t.protocol),
                             t.subchip.kind == SubChip::Kind::pair ? 1 : 0,
                             t.subchip.rect_indices, stage_rank(t.stage));
    };
    return key(a) < key(b);
  });
  return tasks;
}

void AssessmentState::attach_journal(JournalWriter* writer) {
  journal_ = writer;
  write_header_once();
}

void AssessmentState::write_header_once() {
  if (header_written_ || !journal_) return;
  json doc;
  doc["type"] = "header";
  doc["schema_version"] = 1;
  doc["topology"] = topo_->name();
  doc["topology_digest"] = topo_->digest();
  doc["mode"] = to_string(cfg_.mode);
  doc["seed"] = cfg_.seed;
  doc["shots"] = cfg_.shots;
  json protos = json::array();
  for (ProtocolId p : cfg_.protocol_list()) protos.push_back(to_string(p));
  doc["protocols"] = protos;
  json th = json::object();
  for (const auto& [p, t] : cfg_.thresholds) th[to_string(p)] = t;
  doc["thresholds"] = th;
  doc["allow_zero_swap"] = cfg_.allow_zero_swap;
  doc["corrections"] =
      cfg_.corrections == CorrectionMode::deferred ? "deferred" : "feedforward";
  doc["epoch"] = epoch_;
  journal_->write_line(doc.dump());
  header_written_ = true;
}

void AssessmentState::journal_line(const std::string& text) {
  if (!journal_) return;
  write_header_once();
  journal_->write_line(text);
}

int AssessmentState::next_attempt(const std::string& subchip_id, ProtocolId p,
                                  Stage s, const Path& path) const {
  if (const Ladder* l = find_ladder(subchip_id, p);
      l && l->open_stage == s) {
    auto it = l->open_results.find(path.to_string());
    if (it != l->open_results.end()) return it->second.attempt + 1;
  }
  return 0;
}

uint64_t AssessmentState::path_seed(const std::string& subchip_id, ProtocolId p,
                                    Stage s, const Path& path,
                                    int attempt) const {
  std::string identity = topo_->digest() + "|" + subchip_id + "|" +
                         to_string(p) + "|" + to_string(s) + "|" +
                         path.to_string() + "|" + std::to_string(attempt);
  return derive_seed(cfg_.seed, identity);
}

uint64_t AssessmentState::circuit_seed(const std::string& subchip_id,
                                       ProtocolId p, Stage s, const Path& path,
                                       const Variant& v) const {
  int attempt = next_attempt(subchip_id, p, s, path);
  return derive_seed(path_seed(subchip_id, p, s, path, attempt), v.label());
}

void AssessmentState::apply_path_result(const std::string& subchip_id,
                                        ProtocolId p, Stage s,
                                        const PathRecord& rec,
                                        bool from_replay) {
  Ladder& l = ladders_[{subchip_id, static_cast<int>(p)}];
  if (l.failed_at) {
    throw WorkflowError("result for a terminally failed ladder: " +
                        subchip_id + "/" + to_string(p));
  }
  if (l.open_stage && *l.open_stage != s) {
    throw WorkflowError("stage mismatch for open task on " + subchip_id);
  }
  if (!l.open_stage) l.open_stage = s;
  l.open_results[rec.est.path.to_string()] = rec;
  (void)from_replay;
}

void AssessmentState::apply_stage_close(const std::string& subchip_id,
                                        ProtocolId p, Stage s, bool passed,
                                        bool from_replay,
                                        const RectStats* expect) {
  Ladder& l = ladders_[{subchip_id, static_cast<int>(p)}];
  if (l.open_stage != s) {
    throw WorkflowError("closing a stage that is not open on " + subchip_id);
  }
  std::vector<FidelityEstimate> estimates;
  estimates.reserve(l.open_results.size());
  for (const auto& [key, rec] : l.open_results) estimates.push_back(rec.est);
  RectStats stats = aggregate(subchip_id, p, s, std::move(estimates));
  if (expect) {
    bool same = stats.min == expect->min && stats.mean == expect->mean &&
                stats.max == expect->max &&
                stats.estimates.size() == expect->estimates.size();
    if (!same) {
      throw JournalError("journal stage summary does not match the replayed "
                         "path results for " + subchip_id + "/" +
                         to_string(p) + "/" + to_string(s));
    }
  }
  bool expect_pass = pass_decision(stats, threshold(p, cfg_.thresholds));
  if (!from_replay) {
    passed = expect_pass;
  } else if (passed != expect_pass) {
    throw JournalError("journal pass flag contradicts the recorded threshold "
                       "for " + subchip_id + "/" + to_string(p));
  }
  l.closed[s] = {std::move(stats), passed};
  if (!passed) l.failed_at = s;
  l.open_stage.reset();
  l.open_results.clear();
}

void AssessmentState::close_if_complete(const std::string& subchip_id,
                                        ProtocolId p, Stage s) {
  Ladder& l = ladders_[{subchip_id, static_cast<int>(p)}];
  PathSet full = stage_paths(subchip(subchip_id), p, s);
  if (l.open_results.size() < full.paths.size()) return;
  RectStats preview = [&] {
    std::vector<FidelityEstimate> ests;
    for (const auto& [key, rec] : l.open_results) ests.push_back(rec.est);
    return aggregate(subchip_id, p, s, std::move(ests));
  }();
  bool passed = pass_decision(preview, threshold(p, cfg_.thresholds));
  json doc;
  doc["type"] = "stage_close";
  doc["subchip"] = subchip_id;
  doc["protocol"] = to_string(p);
  doc["stage"] = to_string(s);
  doc["pass"] = passed;
  doc["min"] = preview.min;
  doc["mean"] = preview.mean;
  doc["max"] = preview.max;
  doc["argmin"] = path_to_json(preview.argmin);
  doc["paths"] = preview.estimates.size();
  doc["threshold"] = threshold(p, cfg_.thresholds);
  doc["seq"] = seq_++;
  journal_line(doc.dump());
  apply_stage_close(subchip_id, p, s, passed, /*from_replay=*/false);
  json dj;
  dj["type"] = "state_digest";
  dj["digest"] = digest();
  dj["seq"] = seq_++;
  journal_line(dj.dump());
}

void AssessmentState::record(const Task& task,
                             const std::vector<FidelityEstimate>& estimates,
                             bool partial) {
  const std::string subchip_id = task.subchip_id();
  auto planned = next_task(subchip_id, task.protocol);
  if (!planned || planned->stage != task.stage) {
    throw WorkflowError("task was not planned: " + subchip_id + "/" +
                        to_string(task.protocol) + "/" +
                        to_string(task.stage));
  }
  std::set<std::string> allowed;
  for (const Path& p : task.paths.paths) allowed.insert(p.to_string());
  std::set<std::string> full;
  for (const Path& p :
       stage_paths(task.subchip, task.protocol, task.stage).paths) {
    full.insert(p.to_string());
  }
  for (const auto& est : estimates) {
    if (!allowed.count(est.path.to_string()) ||
        !full.count(est.path.to_string())) {
      throw WorkflowError("estimate for a path outside the planned task: " +
                          est.path.to_string());
    }
    if (est.protocol != task.protocol) {
      throw WorkflowError("estimate protocol does not match the task");
    }
  }
  for (const auto& est : estimates) {
    emit_path_result(subchip_id, task.protocol, task.stage, est);
  }
  const Ladder& l = ladders_[{subchip_id, static_cast<int>(task.protocol)}];
  PathSet fullset = stage_paths(task.subchip, task.protocol, task.stage);
  if (l.open_results.size() < fullset.paths.size() && !partial) {
    throw WorkflowError(
        "stats cover only part of the path set; record with partial=true");
  }
  close_if_complete(subchip_id, task.protocol, task.stage);
}

void AssessmentState::merge(const std::string& subchip_id, ProtocolId protocol,
                            Stage stage,
                            const std::vector<FidelityEstimate>& estimates) {
  const Ladder* l = find_ladder(subchip_id, protocol);
  if (!l || l->open_stage != stage) {
    throw WorkflowError("no open " + to_string(stage) + " task on " +
                        subchip_id + " to merge into");
  }
  std::set<std::string> full;
  for (const Path& p :
       stage_paths(subchip(subchip_id), protocol, stage).paths) {
    full.insert(p.to_string());
  }
  for (const auto& est : estimates) {
    if (!full.count(est.path.to_string())) {
      throw WorkflowError("rerun path lies outside the sub-chip stage: " +
                          est.path.to_string());
    }
  }
  for (const auto& est : estimates) {
    auto it = l->open_results.find(est.path.to_string());
    if (it != l->open_results.end()) {
      json conflict;
      conflict["type"] = "conflict";
      conflict["subchip"] = subchip_id;
      conflict["protocol"] = to_string(protocol);
      conflict["stage"] = to_string(stage);
      conflict["path"] = path_to_json(est.path);
      conflict["kept"] = "newest";
      conflict["previous_seq"] = it->second.seq;
      conflict["seq"] = seq_;
      journal_line(conflict.dump());
    }
    emit_path_result(subchip_id, protocol, stage, est);
  }
  close_if_complete(subchip_id, protocol, stage);
}

void AssessmentState::emit_path_result(const std::string& subchip_id,
                                       ProtocolId protocol, Stage stage,
                                       const FidelityEstimate& est) {
  PathRecord rec;
  rec.est = est;
  rec.epoch = epoch_;
  rec.seq = seq_++;
  rec.attempt = next_attempt(subchip_id, protocol, stage, est.path);
  json doc;
  doc["type"] = "path_result";
  doc["subchip"] = subchip_id;
  doc["protocol"] = to_string(protocol);
  doc["stage"] = to_string(stage);
  doc["path"] = path_to_json(est.path);
  doc["value"] = est.value;
  doc["stderr"] = est.stderr_;
  doc["shots"] = est.shots_used;
  doc["seed"] = path_seed(subchip_id, protocol, stage, est.path, rec.attempt);
  doc["epoch"] = rec.epoch;
  doc["seq"] = rec.seq;
  doc["attempt"] = rec.attempt;
  journal_line(doc.dump());
  apply_path_result(subchip_id, protocol, stage, rec, /*from_replay=*/false);
}

std::string AssessmentState::digest() const {
  std::string acc;
  for (const auto& [key, l] : ladders_) {
    acc += key.first + "|" + std::to_string(key.second) + "{";
    for (const auto& [s, outcome] : l.closed) {
      acc += "C" + to_string(s) + ":" + (outcome.passed ? "P" : "F") + ":" +
             fmt_exact(outcome.stats.min) + ":" + fmt_exact(outcome.stats.mean) +
             ":" + fmt_exact(outcome.stats.max) + ":" +
             outcome.stats.argmin.to_string() + ":" +
             std::to_string(outcome.stats.estimates.size()) + ";";
    }
    if (l.open_stage) {
      acc += "O" + to_string(*l.open_stage) + ":";
      for (const auto& [pk, rec] : l.open_results) {
        acc += pk + "=" + fmt_exact(rec.est.value) + "," +
               fmt_exact(rec.est.stderr_) + "," +
               std::to_string(rec.est.shots_used) + "," +
               std::to_string(rec.attempt) + ";";
      }
    }
    acc += "}";
  }
  return Sha256::hex_digest(acc);
}

WorkflowConfig config_from_journal_header(const std::string& header_line) {
  json doc;
  try {
    doc = json::parse(header_line);
    if (doc.at("type") != "header" || doc.at("schema_version") != 1) {
      throw JournalError("journal does not start with a supported header");
    }
    WorkflowConfig cfg;
    cfg.mode = workflow_mode_from_string(doc.at("mode").get<std::string>());
    cfg.seed = doc.at("seed").get<uint64_t>();
    cfg.shots = doc.at("shots").get<uint64_t>();
    for (const auto& p : doc.at("protocols")) {
      cfg.protocols.push_back(protocol_from_string(p.get<std::string>()));
    }
    for (const auto& [name, t] : doc.at("thresholds").items()) {
      cfg.thresholds[protocol_from_string(name)] = t.get<double>();
    }
    cfg.allow_zero_swap = doc.at("allow_zero_swap").get<bool>();
    cfg.corrections =
        doc.at("corrections").get<std::string>() == "feedforward"
            ? CorrectionMode::feedforward
            : CorrectionMode::deferred;
    cfg.epoch_label = doc.at("epoch").get<std::string>();
    return cfg;
  } catch (const json::exception& e) {
    throw JournalError(std::string("malformed journal header: ") + e.what());
  }
}

AssessmentState AssessmentState::resume(
    const std::filesystem::path& journal_file, const ChipTopology& topo) {
  auto lines = read_journal(journal_file);
  if (lines.empty() || lines.front().type != "header") {
    throw JournalError("journal has no header: " + journal_file.string());
  }
  json header = json::parse(lines.front().raw);
  const std::string digest = header.at("topology_digest").get<std::string>();
  if (digest != topo.digest()) {
    throw JournalError(
        "journal was written against topology '" +
        header.at("topology").get<std::string>() + "' (digest " +
        digest.substr(0, 12) + "...) which does not match the supplied '" +
        topo.name() + "' file (digest " + topo.digest().substr(0, 12) +
        "...); refusing to mix results across chips");
  }
  WorkflowConfig cfg = config_from_journal_header(lines.front().raw);
  AssessmentState state(topo, cfg);
  state.header_written_ = true;
  std::string last_digest;
  for (size_t i = 1; i < lines.size(); ++i) {
    json doc = json::parse(lines[i].raw);
    const std::string& type = lines[i].type;
    try {
      if (type == "path_result") {
        PathRecord rec;
        rec.est.path = path_from_json(doc.at("path"));
        rec.est.value = doc.at("value").get<double>();
        rec.est.stderr_ = doc.at("stderr").get<double>();
        rec.est.shots_used = doc.at("shots").get<uint64_t>();
        rec.est.protocol =
            protocol_from_string(doc.at("protocol").get<std::string>());
        rec.epoch = doc.at("epoch").get<std::string>();
        rec.seq = doc.at("seq").get<uint64_t>();
        rec.attempt = doc.at("attempt").get<int>();
        state.apply_path_result(doc.at("subchip").get<std::string>(),
                                rec.est.protocol,
                                stage_from_string(
                                    doc.at("stage").get<std::string>()),
                                rec, /*from_replay=*/true);
        state.seq_ = std::max(state.seq_, rec.seq + 1);
      } else if (type == "stage_close") {
        RectStats expect;
        expect.min = doc.at("min").get<double>();
        expect.mean = doc.at("mean").get<double>();
        expect.max = doc.at("max").get<double>();
        expect.estimates.resize(doc.at("paths").get<size_t>());
        state.apply_stage_close(
            doc.at("subchip").get<std::string>(),
            protocol_from_string(doc.at("protocol").get<std::string>()),
            stage_from_string(doc.at("stage").get<std::string>()),
            doc.at("pass").get<bool>(), /*from_replay=*/true, &expect);
        state.seq_ =
            std::max(state.seq_, doc.at("seq").get<uint64_t>() + 1);
      } else if (type == "state_digest") {
        last_digest = doc.at("digest").get<std::string>();
        state.seq_ =
            std::max(state.seq_, doc.at("seq").get<uint64_t>() + 1);
      } else if (type == "conflict") {
        // informational only
      } else {
        throw JournalError("unknown journal record type: " + type);
      }
    } catch (const json::exception& e) {
      throw JournalError("corrupt journal line " + std::to_string(i + 1) +
                         " (last valid entry: line " + std::to_string(i) +
                         "): " + e.what());
    }
  }
  if (!last_digest.empty() && last_digest != state.digest()) {
    throw JournalError(
        "journal digest mismatch after replay; the journal does not describe "
        "the state it claims");
  }
  return state;
}

void AssessmentState::check_invariants() const {
  auto require = [](bool cond, const std::string& what) {
    if (!cond) throw WorkflowError("gating violation: " + what);
  };
  for (const auto& [key, l] : ladders_) {
    const std::string& id = key.first;
    ProtocolId p = static_cast<ProtocolId>(key.second);
    const SubChip& sc = subchip(id);
    bool is_pair = sc.kind == SubChip::Kind::pair;
    auto passed = [&](Stage s) {
      auto it = l.closed.find(s);
      return it != l.closed.end() && it->second.passed;
    };
    if (is_pair) {
      require(!l.closed.count(Stage::ml) && l.open_stage != Stage::ml,
              "M-L run on pair " + id);
      if (l.closed.count(Stage::al) || l.open_stage == Stage::al) {
        require(passed(Stage::c2c), "pair A-L without passed c2c on " + id);
      }
      if (!l.closed.empty() || l.open_stage) {
        for (int rect : sc.rect_indices) {
          require(stage_passed("rect" + std::to_string(rect), p, Stage::al),
                  "pair task before both singles passed A-L on " + id);
        }
        require(topo_->adjacent_rects(sc.rect_indices[0], sc.rect_indices[1]),
                "pair over non-adjacent rectangles " + id);
      }
    } else {
      if (l.closed.count(Stage::ml) || l.open_stage == Stage::ml) {
        require(passed(Stage::c2c), "M-L without passed c2c on " + id);
      }
      if (l.closed.count(Stage::al) || l.open_stage == Stage::al) {
        require(passed(Stage::ml), "A-L without passed M-L on " + id);
      }
      if (cfg_.mode == WorkflowMode::strict && p != ProtocolId::transmit &&
          p != ProtocolId::do_nothing &&
          (!l.closed.empty() || l.open_stage)) {
        require(stage_passed(id, ProtocolId::do_nothing, Stage::c2c),
                to_string(p) + " scheduled before the do-nothing gate on " +
                    id);
      }
    }
    if (l.failed_at) {
      auto it = l.closed.find(*l.failed_at);
      require(it != l.closed.end() && !it->second.passed,
              "failed_at without a failing stage record on " + id);
      for (const auto& [s, outcome] : l.closed) {
        require(stage_rank(s) <= stage_rank(*l.failed_at),
                "stage recorded after terminal failure on " + id);
      }
      require(!l.open_stage, "open task on a failed ladder " + id);
    }
  }
}

}  // namespace qpb
