#include "qpb/backend.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qpb/sha256.hpp"

namespace qpb {

namespace fs = std::filesystem;
using nlohmann::json;

std::string to_string(BackendJob::Status s) {
  switch (s) {
    case BackendJob::Status::queued: return "queued";
    case BackendJob::Status::running: return "running";
    case BackendJob::Status::done: return "done";
    case BackendJob::Status::cancelled: return "cancelled";
    case BackendJob::Status::partial: return "partial";
  }
  return "?";
}

namespace {

BackendJob::Status status_from_string(const std::string& s) {
  for (auto st : {BackendJob::Status::queued, BackendJob::Status::running,
                  BackendJob::Status::done, BackendJob::Status::cancelled,
                  BackendJob::Status::partial}) {
    if (s == to_string(st)) return st;
  }
  throw BackendError("unknown job status: " + s);
}

std::string batch_hash(const std::vector<Circuit>& batch, uint64_t shots) {
  Sha256 h;
  for (const Circuit& c : batch) h.update(c.to_json_text());
  std::string sh = std::to_string(shots);
  h.update(sh);
  return to_hex(h.finish());
}

}  // namespace

std::vector<ShotResult> run_batch(const std::vector<Circuit>& batch,
                                  const NoiseModel& noise, uint64_t shots,
                                  const std::vector<uint64_t>& seeds,
                                  int threads) {
  std::vector<ShotResult> results(batch.size());
  if (batch.empty()) return results;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = std::min<int>(threads, static_cast<int>(batch.size()));
  std::atomic<size_t> next{0};
  std::vector<std::string> errors(threads);
  auto worker = [&](int t) {
    try {
      for (size_t i = next.fetch_add(1); i < batch.size();
           i = next.fetch_add(1)) {
        results[i] = run_trajectories(batch[i], noise, shots, seeds[i]);
      }
    } catch (const std::exception& e) {
      errors[t] = e.what();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw BackendError("batch execution failed: " + e);
  }
  return results;
}

namespace {

class SimBackend : public Backend {
 public:
  SimBackend(const NoiseModel& noise, uint64_t base_seed, int threads)
      : noise_(noise), base_seed_(base_seed), threads_(threads),
        id_("sim://default") {}

  const std::string& id() const override { return id_; }

  BackendJob submit(const std::vector<Circuit>& batch,
                    uint64_t shots) override {
    if (batch.empty()) throw BackendError("cannot submit an empty batch");
    BackendJob job;
    job.id = "sim-" +
             batch_hash(batch, shots).substr(0, 16) + "-" +
             std::to_string(counter_++);
    job.shots = shots;
    std::vector<uint64_t> seeds(batch.size());
    for (size_t i = 0; i < batch.size(); ++i) {
      seeds[i] = batch[i].seed != 0
                     ? batch[i].seed
                     : derive_seed(base_seed_,
                                   job.id + "/" + std::to_string(i));
    }
    auto results = run_batch(batch, noise_, shots, seeds, threads_);
    job.results.reserve(results.size());
    for (auto& r : results) {
      r.backend_id = id_;
      job.results.push_back(std::move(r));
    }
    job.status = BackendJob::Status::done;
    jobs_[job.id] = job;
    return job;
  }

  BackendJob poll(const std::string& job_id) override {
    auto it = jobs_.find(job_id);
    if (it == jobs_.end()) throw BackendError("unknown job id: " + job_id);
    return it->second;
  }

 private:
  NoiseModel noise_;
  uint64_t base_seed_;
  int threads_;
  std::string id_;
  uint64_t counter_ = 0;
  std::map<std::string, BackendJob> jobs_;
};

/// File-backed stand-in for a remote provider. Jobs are JSON documents in a
/// directory; completion happens on poll, with per-circuit cancellations
/// drawn deterministically from the job id.
class MockRemoteBackend : public Backend {
 public:
  MockRemoteBackend(const fs::path& dir, double cancel_rate,
                    const NoiseModel& noise, uint64_t base_seed, int threads)
      : dir_(dir), cancel_rate_(cancel_rate), noise_(noise),
        base_seed_(base_seed), threads_(threads),
        id_("mock://" + dir.string()) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_)) {
      throw BackendError("mock backend directory unavailable: " +
                         dir_.string());
    }
  }

  const std::string& id() const override { return id_; }

  BackendJob submit(const std::vector<Circuit>& batch,
                    uint64_t shots) override {
    if (batch.empty()) throw BackendError("cannot submit an empty batch");
    size_t existing = 0;
    for (const auto& e : fs::directory_iterator(dir_)) {
      if (e.path().extension() == ".json") ++existing;
    }
    std::string hash = batch_hash(batch, shots);
    std::string job_id =
        "mock-" + hash.substr(0, 16) + "-" + std::to_string(existing);
    json doc;
    doc["job_id"] = job_id;
    doc["status"] = "queued";
    doc["batch_hash"] = hash;
    doc["shots"] = shots;
    doc["cancel_rate"] = cancel_rate_;
    json circuits = json::array();
    for (const Circuit& c : batch) circuits.push_back(c.to_json_text());
    doc["circuits"] = circuits;
    doc["counts"] = json::array();
    write_doc(job_id, doc);
    BackendJob job;
    job.id = job_id;
    job.status = BackendJob::Status::queued;
    job.shots = shots;
    job.results.resize(batch.size());
    return job;
  }

  BackendJob poll(const std::string& job_id) override {
    json doc = read_doc(job_id);
    if (doc.at("status") == "queued") {
      complete(doc);
      write_doc(job_id, doc);
    }
    BackendJob job;
    job.id = job_id;
    job.shots = doc.at("shots").get<uint64_t>();
    job.status = status_from_string(doc.at("status").get<std::string>());
    const auto& counts = doc.at("counts");
    for (size_t i = 0; i < counts.size(); ++i) {
      if (counts.at(i).is_null()) {
        job.results.push_back(std::nullopt);
        job.cancelled_indices.push_back(i);
        continue;
      }
      ShotResult r;
      r.shots = job.shots;
      r.backend_id = id_;
      const auto& entry = counts.at(i);
      r.circuit_id = entry.at("circuit_id").get<std::string>();
      r.seed = entry.at("seed").get<uint64_t>();
      for (const auto& [bits, n] : entry.at("counts").items()) {
        r.counts[bits] = n.get<uint64_t>();
      }
      job.results.push_back(std::move(r));
    }
    return job;
  }

 private:
  void complete(json& doc) {
    const std::string job_id = doc.at("job_id").get<std::string>();
    uint64_t shots = doc.at("shots").get<uint64_t>();
    std::vector<Circuit> batch;
    for (const auto& text : doc.at("circuits")) {
      batch.push_back(circuit_from_json_text(text.get<std::string>()));
    }
    uint64_t cancel_seed = derive_seed(base_seed_, job_id + "/cancellations");
    Rng cancel_rng(cancel_seed);
    std::vector<size_t> keep;
    std::vector<char> cancelled(batch.size(), 0);
    for (size_t i = 0; i < batch.size(); ++i) {
      if (cancel_rng.bernoulli(cancel_rate_)) {
        cancelled[i] = 1;
      } else {
        keep.push_back(i);
      }
    }
    std::vector<Circuit> to_run;
    std::vector<uint64_t> seeds;
    for (size_t i : keep) {
      to_run.push_back(batch[i]);
      seeds.push_back(batch[i].seed != 0
                          ? batch[i].seed
                          : derive_seed(base_seed_,
                                        job_id + "/" + std::to_string(i)));
    }
    auto results = run_batch(to_run, noise_, shots, seeds, threads_);
    json counts = json::array();
    size_t k = 0;
    for (size_t i = 0; i < batch.size(); ++i) {
      if (cancelled[i]) {
        counts.push_back(nullptr);
        continue;
      }
      const ShotResult& r = results[k++];
      json entry;
      entry["circuit_id"] = r.circuit_id;
      entry["seed"] = r.seed;
      json cm = json::object();
      for (const auto& [bits, n] : r.counts) cm[bits] = n;
      entry["counts"] = cm;
      counts.push_back(entry);
    }
    doc["counts"] = counts;
    size_t n_cancelled = batch.size() - keep.size();
    doc["status"] = n_cancelled == 0
                        ? "done"
                        : (keep.empty() ? "cancelled" : "partial");
  }

  json read_doc(const std::string& job_id) const {
    fs::path p = dir_ / (job_id + ".json");
    std::ifstream in(p);
    if (!in) throw BackendError("unknown job id: " + job_id);
    try {
      return json::parse(in);
    } catch (const json::exception& e) {
      throw BackendError("corrupt job document " + p.string() + ": " +
                         e.what());
    }
  }

  void write_doc(const std::string& job_id, const json& doc) const {
    fs::path p = dir_ / (job_id + ".json");
    std::ofstream out(p);
    if (!out) throw BackendError("cannot write job document: " + p.string());
    out << doc.dump();
  }

  fs::path dir_;
  double cancel_rate_;
  NoiseModel noise_;
  uint64_t base_seed_;
  int threads_;
  std::string id_;
};

}  // namespace

std::unique_ptr<Backend> Backend::open(const std::string& uri,
                                       const NoiseModel& noise,
                                       uint64_t base_seed, int threads) {
  noise.validate();
  if (uri == "sim://default" || uri == "sim://") {
    return std::make_unique<SimBackend>(noise, base_seed, threads);
  }
  const std::string mock_prefix = "mock://";
  if (uri.rfind(mock_prefix, 0) == 0) {
    std::string rest = uri.substr(mock_prefix.size());
    double cancel_rate = 0.0;
    auto qpos = rest.find('?');
    if (qpos != std::string::npos) {
      std::string query = rest.substr(qpos + 1);
      rest = rest.substr(0, qpos);
      std::istringstream qs(query);
      std::string kv;
      while (std::getline(qs, kv, '&')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
          throw BackendError("bad backend URI parameter: " + kv);
        }
        std::string key = kv.substr(0, eq);
        std::string value = kv.substr(eq + 1);
        if (key == "cancel_rate") {
          cancel_rate = std::stod(value);
          if (cancel_rate < 0.0 || cancel_rate > 1.0) {
            throw BackendError("cancel_rate must lie in [0,1]");
          }
        } else {
          throw BackendError("unknown backend URI parameter: " + key);
        }
      }
    }
    if (rest.empty()) throw BackendError("mock backend needs a directory");
    return std::make_unique<MockRemoteBackend>(rest, cancel_rate, noise,
                                               base_seed, threads);
  }
  throw BackendError("unknown backend URI: " + uri);
}

}  // namespace qpb
