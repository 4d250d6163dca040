#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpb/errors.hpp"

namespace qpb {

using QubitId = int;

/// A 12-qubit cycle unit of the lattice. `cycle` is the qubit loop in order;
/// `corners` are four cycle members forming two antipodal pairs (cycle
/// distance 6).
struct Rectangle {
  int index = 0;  // 1-based
  std::array<QubitId, 12> cycle{};
  std::array<QubitId, 4> corners{};
};

/// Validated chip coupling graph with its rectangle decomposition.
///
/// The document format is a versioned JSON object:
///   {schema_version, name, qubit_count, edges:[[a,b],...],
///    rectangles:[{index, cycle:[12 ids], corners:[4 ids]},...],
///    adjacency:[[i,j],...]}
/// Adjacency is recorded in the file (pairs sharing at least one qubit on the
/// bundled chips) so alternative neighbourhood definitions need no code
/// change.
class ChipTopology {
 public:
  static ChipTopology from_json_text(const std::string& text);
  static ChipTopology load(const std::filesystem::path& file);
  /// Resolves "eagle"/"heron" to the bundled documents, otherwise treats the
  /// argument as a file path.
  static ChipTopology named(const std::string& name_or_path);

  const std::string& name() const { return name_; }
  int qubit_count() const { return qubit_count_; }
  const std::set<std::pair<QubitId, QubitId>>& edges() const { return edges_; }
  const std::vector<Rectangle>& rectangles() const { return rectangles_; }
  const std::set<std::pair<int, int>>& rect_adjacency() const {
    return rect_adjacency_;
  }
  const Rectangle& rectangle(int index) const;
  bool has_edge(QubitId a, QubitId b) const;
  const std::vector<QubitId>& neighbors(QubitId q) const;
  bool adjacent_rects(int i, int j) const;

  /// SHA-256 of the document text this topology was parsed from. Journals
  /// record it so results can never be replayed against a different chip.
  const std::string& digest() const { return digest_; }

 private:
  void validate() const;
  std::string name_;
  int qubit_count_ = 0;
  std::set<std::pair<QubitId, QubitId>> edges_;
  std::vector<std::vector<QubitId>> adj_;
  std::vector<Rectangle> rectangles_;
  std::set<std::pair<int, int>> rect_adjacency_;
  std::string digest_;
};

enum class PairGeometry { side_by_side, diagonal };

/// A sub-chip under assessment: one rectangle or an adjacent pair, with the
/// induced sub-graph.
struct SubChip {
  enum class Kind { single, pair };
  Kind kind = Kind::single;
  std::vector<int> rect_indices;
  std::vector<QubitId> qubits;                       // sorted
  std::vector<std::pair<QubitId, QubitId>> edges;    // induced, a<b, sorted
  std::optional<PairGeometry> geometry;              // pairs only
  std::vector<std::array<QubitId, 4>> corner_sets;   // per member rectangle

  bool contains(QubitId q) const;
  const std::vector<QubitId>& neighbors(QubitId q) const;
  /// "rect3" or "pair3-7"; stable identifier used in journals and reports.
  std::string id() const;

  // filled by make_subchip
  std::map<QubitId, std::vector<QubitId>> adj;
};

SubChip make_subchip(const ChipTopology& topo, const std::vector<int>& rects);

/// An ordered sequence of distinct, consecutively coupled qubits.
struct Path {
  std::vector<QubitId> qubits;
  int length() const { return static_cast<int>(qubits.size()); }
  bool operator==(const Path& o) const { return qubits == o.qubits; }
  bool operator<(const Path& o) const { return qubits < o.qubits; }
  std::string to_string() const;
};

enum class Stage { c2c, ml, al };
std::string to_string(Stage s);
Stage stage_from_string(const std::string& s);

struct PathSet {
  std::string subchip_id;
  Stage stage = Stage::c2c;
  std::vector<Path> paths;  // lexicographic, no duplicates
};

/// Every shortest path from a to b inside the sub-chip, lexicographic order.
std::vector<Path> all_shortest_paths(const SubChip& sc, QubitId a, QubitId b);

/// Graph distance within the sub-chip (-1 if unreachable).
int subchip_distance(const SubChip& sc, QubitId a, QubitId b);

/// Stage path enumerators.
///   c2c  - corner pairs at maximal corner distance (single rectangles: both
///          antipodal pairs; side-by-side pairs: the long rectangle's two
///          opposing pairs; diagonal pairs: the single most distant pair,
///          ties broken by lowest qubit id), both directions.
///   M-L  - all shortest paths between every ordered qubit pair at maximal
///          graph distance.
///   A-L  - all shortest paths between every ordered qubit pair, keeping
///          paths with at least min_len qubits.
/// Pair sub-chips only run c2c and A-L in the staged workflow; pass
/// allow_pair_ml=true to inspect the degenerate pair M-L set anyway.
PathSet enumerate_paths(const SubChip& sc, Stage stage, int min_len,
                        bool allow_pair_ml = true);

}  // namespace qpb
