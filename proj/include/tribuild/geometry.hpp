#pragma once

// Bipartite point/line incidence structures and the quadrangle GQ(2,2).

#include <array>
#include <bitset>
#include <string>
#include <utility>
#include <vector>

#include "tribuild/canon.hpp"

namespace tribuild::geometry {

inline constexpr int kMaxPolygonVertices = 128;

/// Points are vertices 0..P-1, lines are vertices P..P+L-1.  Flags form a
/// multiset: repeated flags are kept (links of degenerate complexes can have
/// parallel corners) and make the graph fail every generalized-polygon test.
class GeneralizedPolygonGraph {
 public:
  using Flag = std::pair<int, int>;  // (point, line)
  using Row = std::bitset<kMaxPolygonVertices>;

  GeneralizedPolygonGraph() = default;
  GeneralizedPolygonGraph(int point_count, int line_count, std::vector<Flag> flags);

  int point_count() const { return points_; }
  int line_count() const { return lines_; }
  int vertex_count() const { return points_ + lines_; }
  int line_vertex(int line) const { return points_ + line; }
  bool is_point(int v) const { return v < points_; }

  /// Sorted flag multiset.
  const std::vector<Flag>& flags() const { return flags_; }
  bool has_repeated_flags() const { return repeated_; }
  bool incident(int point, int line) const { return adjacency_[point][points_ + line]; }

  const Row& adjacency(int v) const { return adjacency_[v]; }
  /// Distinct neighbors in increasing order.
  std::vector<int> neighbors(int v) const;
  std::vector<int> points_on(int line) const;
  std::vector<int> lines_through(int point) const;

  /// Points colored 0, lines colored 1 (or everything 0 when !colored).
  canon::ColoredGraph to_colored_graph(bool colored = true) const;

  friend bool operator==(const GeneralizedPolygonGraph&, const GeneralizedPolygonGraph&) = default;

 private:
  int points_ = 0;
  int lines_ = 0;
  std::vector<Flag> flags_;
  bool repeated_ = false;
  std::vector<Row> adjacency_;
};

/// When swaps_colors is false, point p goes to point point_map[p] and line l
/// to line line_map[l].  When true, point p goes to line point_map[p] and
/// line l to point line_map[l].
struct GraphAutomorphism {
  std::vector<int> point_map;
  std::vector<int> line_map;
  bool swaps_colors = false;

  static GraphAutomorphism identity(int points, int lines);
  /// (*this) after `first`.
  GraphAutomorphism after(const GraphAutomorphism& first) const;
  GraphAutomorphism inverse() const;
  /// Image of the flag set, sorted.
  std::vector<GeneralizedPolygonGraph::Flag> apply(
      const std::vector<GeneralizedPolygonGraph::Flag>& flags) const;

  friend auto operator<=>(const GraphAutomorphism&, const GraphAutomorphism&) = default;
};

/// Points are the pairs of {1..6} in lexicographic order, lines the perfect
/// matchings, lines ordered by their sorted point triples.
GeneralizedPolygonGraph build_gq22();

/// Points of each line of GQ(2,2), 0-based, rows in table order.
const std::array<std::array<int, 3>, 15>& gq22_lines();

/// The pair {i, j} (1-based) encoded by GQ(2,2) point p (0-based).
std::pair<int, int> gq22_point_pair(int p);

/// -1 for unreachable vertices.
std::vector<int> distances_from(const GeneralizedPolygonGraph& g, int v);
/// -1 when disconnected.
int diameter(const GeneralizedPolygonGraph& g);
/// Length of a shortest cycle; 2 if there are repeated flags, 0 if acyclic.
int girth(const GeneralizedPolygonGraph& g);

bool is_generalized_m_gon(const GeneralizedPolygonGraph& g, int m);

/// Every automorphism, sorted; with include_dualities also the maps that
/// exchange points and lines.  Assumes g is connected.
std::vector<GraphAutomorphism> automorphism_group(const GeneralizedPolygonGraph& g,
                                                  bool include_dualities);

/// `point line` per flag (0-based), one per line.
std::string to_edge_list(const GeneralizedPolygonGraph& g);
std::string to_dot(const GeneralizedPolygonGraph& g, const std::string& name = "G");

/// The 2m-cycle as a thin generalized m-gon.
GeneralizedPolygonGraph thin_polygon(int m);

}  // namespace tribuild::geometry
