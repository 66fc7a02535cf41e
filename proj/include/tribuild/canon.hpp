#pragma once

// Canonical labeling and isomorphism testing for small vertex-colored graphs.
//
// The engine follows the individualization-refinement scheme: an ordered
// partition of the vertices is refined to an equitable one, a vertex of the
// first largest non-singleton cell is individualized, and the search recurses
// until the partition is discrete.  Automorphisms discovered at the leaves
// prune equivalent branches.  The certificate is the extremal leaf over the
// search tree, ordered first by the refinement trace and then by the relabeled
// edge list, which makes it a class function of the colored graph.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tribuild::canon {

inline constexpr int kMaxVertices = 4096;

class SizeBoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Undirected simple graph with a color value per vertex.  Isomorphisms must
/// preserve color values, and the certificate records them.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// Duplicate edges are merged.  Loops and out-of-range endpoints throw
  /// std::invalid_argument.  An empty `colors` means every vertex has color 0.
  ColoredGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
               std::vector<int> colors = {});

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }
  std::span<const int> neighbors(int v) const {
    return {adjacency_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  int color(int v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }
  bool has_edge(int u, int v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// The graph obtained by renaming vertex v to perm[v].
  ColoredGraph relabeled(std::span<const int> perm) const;

 private:
  int n_ = 0;
  std::vector<int> offsets_{0};
  std::vector<int> adjacency_;
  std::vector<int> colors_;
};

/// Canonical byte string: vertex count, the color sequence in canonical order
/// and the sorted canonical edge list, all as little-endian 32-bit words.
class Certificate {
 public:
  Certificate() = default;
  explicit Certificate(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::string hex() const;
  /// SHA-256 of the bytes, lowercase hex.
  std::string digest() const;
  static Certificate from_hex(std::string_view hex);

  friend auto operator<=>(const Certificate&, const Certificate&) = default;
  friend bool operator==(const Certificate&, const Certificate&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

/// Ordered partition: cell index per vertex, cells numbered 0..k-1 in order.
using CellIndex = std::vector<int>;

/// The coarsest equitable refinement of `partition`.  Cells keep their
/// relative order; split cells are ordered by neighbor counts, so the result
/// is isomorphism-invariant.
CellIndex refine(const ColoredGraph& g, const CellIndex& partition);

/// Partition of the vertices by color value, cells in increasing color order.
CellIndex color_partition(const ColoredGraph& g);

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t generators = 0;
};

struct CanonicalLabeling {
  /// canonical_position[v] is the position of vertex v in canonical order.
  std::vector<int> canonical_position;
  Certificate certificate;
  /// Automorphisms found during the search (vertex maps); they generate a
  /// subgroup of the automorphism group, usually all of it.
  std::vector<std::vector<int>> generators;
  SearchStats stats;
};

CanonicalLabeling canonical_labeling(const ColoredGraph& g);
Certificate canonical_form(const ColoredGraph& g);

/// Short-circuits on vertex/edge counts, color multisets and degree
/// sequences before comparing certificates.
bool are_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

/// Classes of indices into `graphs`, each class sorted ascending; classes are
/// ordered by certificate bytes.
std::vector<std::vector<int>> partition_by_isomorphism(const std::vector<ColoredGraph>& graphs,
                                                       int workers = 1);

/// Calls `visit` with every color-preserving isomorphism a -> b (as a vertex
/// map).  Returning false from `visit` stops the enumeration.
void enumerate_isomorphisms(const ColoredGraph& a, const ColoredGraph& b,
                            const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace tribuild::canon
