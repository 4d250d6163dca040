#include "qpb/topology.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "qpb/bundled.hpp"
#include "qpb/sha256.hpp"

namespace qpb {

using nlohmann::json;

ChipTopology ChipTopology::from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw TopologyError(std::string("malformed topology document: ") +
                        e.what());
  }
  ChipTopology t;
  t.digest_ = Sha256::hex_digest(text);
  try {
    if (doc.at("schema_version").get<int>() != 1) {
      throw TopologyError("unsupported topology schema_version");
    }
    t.name_ = doc.at("name").get<std::string>();
    t.qubit_count_ = doc.at("qubit_count").get<int>();
    for (const auto& e : doc.at("edges")) {
      QubitId a = e.at(0).get<int>();
      QubitId b = e.at(1).get<int>();
      if (a == b) throw TopologyError("self-loop edge in topology");
      t.edges_.insert({std::min(a, b), std::max(a, b)});
    }
    for (const auto& r : doc.at("rectangles")) {
      Rectangle rect;
      rect.index = r.at("index").get<int>();
      const auto& cyc = r.at("cycle");
      if (cyc.size() != 12) {
        throw TopologyError("rectangle " + std::to_string(rect.index) +
                            ": cycle must have exactly 12 qubits, got " +
                            std::to_string(cyc.size()));
      }
      for (size_t k = 0; k < 12; ++k) rect.cycle[k] = cyc.at(k).get<int>();
      const auto& cor = r.at("corners");
      if (cor.size() != 4) {
        throw TopologyError("rectangle " + std::to_string(rect.index) +
                            ": exactly 4 corners required");
      }
      for (size_t k = 0; k < 4; ++k) rect.corners[k] = cor.at(k).get<int>();
      t.rectangles_.push_back(rect);
    }
    for (const auto& p : doc.at("adjacency")) {
      int i = p.at(0).get<int>();
      int j = p.at(1).get<int>();
      t.rect_adjacency_.insert({std::min(i, j), std::max(i, j)});
    }
  } catch (const json::exception& e) {
    throw TopologyError(std::string("malformed topology document: ") +
                        e.what());
  }
  t.adj_.assign(t.qubit_count_ > 0 ? t.qubit_count_ : 0, {});
  for (const auto& [a, b] : t.edges_) {
    if (a < 0 || b >= t.qubit_count_) {
      throw TopologyError("edge endpoint out of range");
    }
    t.adj_[a].push_back(b);
    t.adj_[b].push_back(a);
  }
  for (auto& nb : t.adj_) std::sort(nb.begin(), nb.end());
  t.validate();
  return t;
}

ChipTopology ChipTopology::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw TopologyError("cannot open topology file: " + file.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

ChipTopology ChipTopology::named(const std::string& name_or_path) {
  if (name_or_path == "eagle") return from_json_text(kEagleTopologyJson);
  if (name_or_path == "heron") return from_json_text(kHeronTopologyJson);
  return load(name_or_path);
}

void ChipTopology::validate() const {
  if (qubit_count_ <= 0) throw TopologyError("qubit_count must be positive");
  // connectivity
  std::vector<char> seen(qubit_count_, 0);
  std::deque<QubitId> q{0};
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    QubitId u = q.front();
    q.pop_front();
    for (QubitId v : adj_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push_back(v);
      }
    }
  }
  if (reached != qubit_count_) {
    throw TopologyError("coupling graph is not connected");
  }
  std::set<int> indices;
  for (const auto& r : rectangles_) {
    if (!indices.insert(r.index).second) {
      throw TopologyError("duplicate rectangle index " +
                          std::to_string(r.index));
    }
    std::set<QubitId> members(r.cycle.begin(), r.cycle.end());
    if (members.size() != 12) {
      throw TopologyError("rectangle " + std::to_string(r.index) +
                          ": cycle qubits are not distinct");
    }
    for (int k = 0; k < 12; ++k) {
      QubitId a = r.cycle[k];
      QubitId b = r.cycle[(k + 1) % 12];
      if (a < 0 || a >= qubit_count_) {
        throw TopologyError("rectangle cycle qubit out of range");
      }
      if (!has_edge(a, b)) {
        throw TopologyError("rectangle " + std::to_string(r.index) +
                            ": cycle is not closed in the edge set between " +
                            std::to_string(a) + " and " + std::to_string(b));
      }
    }
    std::map<QubitId, int> pos;
    for (int k = 0; k < 12; ++k) pos[r.cycle[k]] = k;
    for (QubitId c : r.corners) {
      if (!pos.count(c)) {
        throw TopologyError("rectangle " + std::to_string(r.index) +
                            ": corner " + std::to_string(c) +
                            " is not on the cycle");
      }
    }
    if ((pos.at(r.corners[0]) + 6) % 12 != pos.at(r.corners[2]) ||
        (pos.at(r.corners[1]) + 6) % 12 != pos.at(r.corners[3])) {
      throw TopologyError("rectangle " + std::to_string(r.index) +
                          ": corners do not form two antipodal pairs");
    }
  }
  for (const auto& [i, j] : rect_adjacency_) {
    const Rectangle& a = rectangle(i);
    const Rectangle& b = rectangle(j);
    std::set<QubitId> qa(a.cycle.begin(), a.cycle.end());
    bool shares = std::any_of(b.cycle.begin(), b.cycle.end(),
                              [&](QubitId q2) { return qa.count(q2) > 0; });
    if (!shares) {
      throw TopologyError("adjacency pair {" + std::to_string(i) + "," +
                          std::to_string(j) + "} shares no qubit");
    }
  }
}

const Rectangle& ChipTopology::rectangle(int index) const {
  for (const auto& r : rectangles_) {
    if (r.index == index) return r;
  }
  throw TopologyError("no rectangle with index " + std::to_string(index));
}

bool ChipTopology::has_edge(QubitId a, QubitId b) const {
  return edges_.count({std::min(a, b), std::max(a, b)}) > 0;
}

const std::vector<QubitId>& ChipTopology::neighbors(QubitId q) const {
  if (q < 0 || q >= qubit_count_) throw TopologyError("qubit id out of range");
  return adj_[q];
}

bool ChipTopology::adjacent_rects(int i, int j) const {
  return rect_adjacency_.count({std::min(i, j), std::max(i, j)}) > 0;
}

bool SubChip::contains(QubitId q) const {
  return std::binary_search(qubits.begin(), qubits.end(), q);
}

const std::vector<QubitId>& SubChip::neighbors(QubitId q) const {
  auto it = adj.find(q);
  if (it == adj.end()) throw TopologyError("qubit not in sub-chip");
  return it->second;
}

std::string SubChip::id() const {
  if (kind == Kind::single) return "rect" + std::to_string(rect_indices[0]);
  return "pair" + std::to_string(rect_indices[0]) + "-" +
         std::to_string(rect_indices[1]);
}

namespace {

// The four corner-to-corner arcs of a rectangle, as qubit sets.
std::vector<std::set<QubitId>> rectangle_sides(const Rectangle& r) {
  std::map<QubitId, int> pos;
  for (int k = 0; k < 12; ++k) pos[r.cycle[k]] = k;
  std::vector<int> cuts;
  for (QubitId c : r.corners) cuts.push_back(pos.at(c));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::set<QubitId>> sides;
  for (size_t k = 0; k < cuts.size(); ++k) {
    int from = cuts[k];
    int to = cuts[(k + 1) % cuts.size()];
    std::set<QubitId> side;
    for (int p = from; ; p = (p + 1) % 12) {
      side.insert(r.cycle[p]);
      if (p == to) break;
    }
    sides.push_back(std::move(side));
  }
  return sides;
}

}  // namespace

SubChip make_subchip(const ChipTopology& topo, const std::vector<int>& rects) {
  if (rects.empty() || rects.size() > 2) {
    throw TopologyError("a sub-chip is one rectangle or an adjacent pair");
  }
  SubChip sc;
  sc.rect_indices = rects;
  std::sort(sc.rect_indices.begin(), sc.rect_indices.end());
  if (sc.rect_indices.size() == 2 &&
      sc.rect_indices[0] == sc.rect_indices[1]) {
    throw TopologyError("pair sub-chip needs two distinct rectangles");
  }
  std::set<QubitId> members;
  for (int idx : sc.rect_indices) {
    const Rectangle& r = topo.rectangle(idx);
    members.insert(r.cycle.begin(), r.cycle.end());
    sc.corner_sets.push_back(r.corners);
  }
  if (sc.rect_indices.size() == 2) {
    sc.kind = SubChip::Kind::pair;
    if (!topo.adjacent_rects(sc.rect_indices[0], sc.rect_indices[1])) {
      throw TopologyError("rectangles " + std::to_string(sc.rect_indices[0]) +
                          " and " + std::to_string(sc.rect_indices[1]) +
                          " are not adjacent");
    }
    auto sides_a = rectangle_sides(topo.rectangle(sc.rect_indices[0]));
    auto sides_b = rectangle_sides(topo.rectangle(sc.rect_indices[1]));
    bool shared_side = false;
    for (const auto& sa : sides_a) {
      for (const auto& sb : sides_b) {
        if (sa == sb) shared_side = true;
      }
    }
    sc.geometry = shared_side ? PairGeometry::side_by_side
                              : PairGeometry::diagonal;
  }
  sc.qubits.assign(members.begin(), members.end());
  for (QubitId a : sc.qubits) {
    for (QubitId b : topo.neighbors(a)) {
      if (a < b && members.count(b)) sc.edges.push_back({a, b});
    }
  }
  std::sort(sc.edges.begin(), sc.edges.end());
  for (QubitId q : sc.qubits) sc.adj[q] = {};
  for (const auto& [a, b] : sc.edges) {
    sc.adj[a].push_back(b);
    sc.adj[b].push_back(a);
  }
  for (auto& [q, nb] : sc.adj) std::sort(nb.begin(), nb.end());
  return sc;
}

std::string Path::to_string() const {
  std::string s;
  for (size_t k = 0; k < qubits.size(); ++k) {
    if (k) s.push_back('-');
    s += std::to_string(qubits[k]);
  }
  return s;
}

std::string to_string(Stage s) {
  switch (s) {
    case Stage::c2c: return "c2c";
    case Stage::ml: return "M-L";
    case Stage::al: return "A-L";
  }
  return "?";
}

Stage stage_from_string(const std::string& s) {
  if (s == "c2c") return Stage::c2c;
  if (s == "M-L" || s == "ml" || s == "m-l") return Stage::ml;
  if (s == "A-L" || s == "al" || s == "a-l") return Stage::al;
  throw ConfigError("unknown stage: " + s);
}

namespace {

std::map<QubitId, int> bfs_distances(const SubChip& sc, QubitId from) {
  std::map<QubitId, int> dist;
  dist[from] = 0;
  std::deque<QubitId> q{from};
  while (!q.empty()) {
    QubitId u = q.front();
    q.pop_front();
    for (QubitId v : sc.neighbors(u)) {
      if (!dist.count(v)) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

int subchip_distance(const SubChip& sc, QubitId a, QubitId b) {
  if (!sc.contains(a) || !sc.contains(b)) {
    throw TopologyError("qubit not in sub-chip");
  }
  auto dist = bfs_distances(sc, a);
  auto it = dist.find(b);
  return it == dist.end() ? -1 : it->second;
}

std::vector<Path> all_shortest_paths(const SubChip& sc, QubitId a, QubitId b) {
  if (!sc.contains(a) || !sc.contains(b)) {
    throw TopologyError("qubit not in sub-chip");
  }
  if (a == b) throw TopologyError("path endpoints must differ");
  auto dist = bfs_distances(sc, a);
  std::vector<Path> out;
  if (!dist.count(b)) return out;
  std::vector<QubitId> tail;
  std::function<void(QubitId)> back = [&](QubitId v) {
    tail.push_back(v);
    if (v == a) {
      Path p;
      p.qubits.assign(tail.rbegin(), tail.rend());
      out.push_back(std::move(p));
    } else {
      for (QubitId u : sc.neighbors(v)) {
        auto it = dist.find(u);
        if (it != dist.end() && it->second == dist.at(v) - 1) back(u);
      }
    }
    tail.pop_back();
  };
  back(b);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Corner pairs at maximal graph distance within the sub-chip. All corner sets
// of the member rectangles are candidates.
std::vector<std::pair<QubitId, QubitId>> max_distance_corner_pairs(
    const SubChip& sc) {
  std::set<QubitId> corners;
  for (const auto& cs : sc.corner_sets) corners.insert(cs.begin(), cs.end());
  std::vector<QubitId> cv(corners.begin(), corners.end());
  int dmax = -1;
  std::vector<std::pair<QubitId, QubitId>> best;
  for (size_t i = 0; i < cv.size(); ++i) {
    auto dist = bfs_distances(sc, cv[i]);
    for (size_t j = i + 1; j < cv.size(); ++j) {
      int d = dist.at(cv[j]);
      if (d > dmax) {
        dmax = d;
        best.clear();
      }
      if (d == dmax) best.push_back({cv[i], cv[j]});
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

void append_both_directions(const SubChip& sc, QubitId a, QubitId b,
                            std::vector<Path>& out) {
  for (auto& p : all_shortest_paths(sc, a, b)) out.push_back(std::move(p));
  for (auto& p : all_shortest_paths(sc, b, a)) out.push_back(std::move(p));
}

}  // namespace

PathSet enumerate_paths(const SubChip& sc, Stage stage, int min_len,
                        bool allow_pair_ml) {
  if (min_len < 2) throw TopologyError("min_len must be at least 2");
  if (stage == Stage::ml && sc.kind == SubChip::Kind::pair && !allow_pair_ml) {
    throw TopologyError(
        "M-L is not scheduled for pair sub-chips in the staged workflow");
  }
  PathSet ps;
  ps.subchip_id = sc.id();
  ps.stage = stage;
  std::vector<Path> paths;
  switch (stage) {
    case Stage::c2c: {
      auto pairs = max_distance_corner_pairs(sc);
      if (sc.kind == SubChip::Kind::pair &&
          sc.geometry == PairGeometry::diagonal && !pairs.empty()) {
        // only the two most distant corners; lowest-id pair on ties
        pairs.resize(1);
      }
      for (const auto& [a, b] : pairs) append_both_directions(sc, a, b, paths);
      break;
    }
    case Stage::ml: {
      int dmax = 0;
      std::map<QubitId, std::map<QubitId, int>> dists;
      for (QubitId q : sc.qubits) {
        dists[q] = bfs_distances(sc, q);
        for (const auto& kv : dists[q]) dmax = std::max(dmax, kv.second);
      }
      for (QubitId a : sc.qubits) {
        for (QubitId b : sc.qubits) {
          if (a != b && dists.at(a).at(b) == dmax) {
            for (auto& p : all_shortest_paths(sc, a, b)) {
              paths.push_back(std::move(p));
            }
          }
        }
      }
      break;
    }
    case Stage::al: {
      for (QubitId a : sc.qubits) {
        for (QubitId b : sc.qubits) {
          if (a == b) continue;
          for (auto& p : all_shortest_paths(sc, a, b)) {
            paths.push_back(std::move(p));
          }
        }
      }
      break;
    }
  }
  std::erase_if(paths, [&](const Path& p) { return p.length() < min_len; });
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  ps.paths = std::move(paths);
  return ps;
}

}  // namespace qpb
