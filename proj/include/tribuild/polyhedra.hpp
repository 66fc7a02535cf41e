#pragma once

// Polygonal complexes built from presentations: faces glued along letters,
// vertex links, the index-3 expansion, dual graphs and group presentations.

#include <array>
#include <compare>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tribuild/canon.hpp"
#include "tribuild/geometry.hpp"
#include "tribuild/presentations.hpp"

namespace tribuild::polyhedra {

/// Each letter is an oriented edge.  A face with boundary word z_1 ... z_k
/// glues the end of z_i to the start of z_{i+1} (cyclically).  Vertices are
/// the resulting classes of letter ends, numbered by their smallest end
/// (start of letter l is end 2l, its end is 2l + 1).
class Polyhedron {
 public:
  Polyhedron(int letter_count, std::vector<std::vector<int>> faces);

  int letter_count() const { return letters_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int vertex_count() const { return vertices_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }

  int start(int letter) const { return vertex_of_end_[2 * letter]; }
  int end(int letter) const { return vertex_of_end_[2 * letter + 1]; }
  /// Number of face sides carrying the letter.
  int thickness(int letter) const { return thickness_[letter]; }
  int euler_characteristic() const { return vertices_ - letters_ + face_count(); }

  Polyhedron without_face(int face) const;

 private:
  int letters_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> vertex_of_end_;
  std::vector<int> thickness_;
  int vertices_ = 0;
};

/// Link of a vertex: outgoing letter germs are points, incoming germs are
/// lines, and the corner between z_i and z_{i+1} is the flag
/// (out z_{i+1}, in z_i).
struct VertexLink {
  geometry::GeneralizedPolygonGraph graph;
  std::vector<int> point_letter;  // letter of each point (outgoing germ)
  std::vector<int> line_letter;   // letter of each line (incoming germ)
};

VertexLink vertex_link(const Polyhedron& x, int vertex);

// ------------------------------------------------------------- expansion --

/// x_point^(sup + 1).
struct SuperLetter {
  int point = 0;
  int sup = 0;
  friend auto operator<=>(const SuperLetter&, const SuperLetter&) = default;
};

using SuperTuple = std::vector<SuperLetter>;

/// Smallest rotation of a cyclic tuple.
SuperTuple min_rotation(SuperTuple t);

class ExpandedPresentation {
 public:
  ExpandedPresentation() = default;
  /// Normalizes rotations, sorts and removes repeats.
  explicit ExpandedPresentation(std::vector<SuperTuple> triples);

  const std::vector<SuperTuple>& triples() const { return triples_; }
  int size() const { return static_cast<int>(triples_.size()); }

  friend bool operator==(const ExpandedPresentation&, const ExpandedPresentation&) = default;

 private:
  std::vector<SuperTuple> triples_;
};

/// (a, b, c) becomes (a^1, b^2, c^3), (a^2, b^3, c^1), (a^3, b^1, c^2);
/// (a, a, a) becomes the single triple (a^1, a^2, a^3).
ExpandedPresentation expand_index3(const TrianglePresentation& k);

/// Adds `shift` to every superscript (mod 3).
ExpandedPresentation rotate_superscripts(const ExpandedPresentation& e, int shift);

/// 45 triples, every superscripted letter used exactly three times.
bool has_expanded_shape(const ExpandedPresentation& e);

/// Letter x_p^(s+1) of an m-superscript alphabet is m * p + s.
inline int super_letter_id(const SuperLetter& x, int m) { return m * x.point + x.sup; }

/// Faces are the tuples of the presentation over 15 * m letters.
Polyhedron build_polyhedron(const std::vector<SuperTuple>& tuples, int m);
Polyhedron build_polyhedron(const ExpandedPresentation& e);
/// One face per triple over the 15 letters.
Polyhedron build_polyhedron(const TrianglePresentation& k);

// ------------------------------------------------------------ dual graph --

/// Nodes 0..L-1 are letters in sorted order, nodes L.. are faces in sorted
/// order; a letter node is joined to every face it bounds.
struct DualGraph {
  std::vector<SuperLetter> letters;
  std::vector<SuperTuple> faces;
  std::vector<std::pair<int, int>> edges;  // sorted, (letter node, face node)

  int node_count() const { return static_cast<int>(letters.size() + faces.size()); }
  /// With side_colors, letter nodes get color 0 and face nodes color 1.
  canon::ColoredGraph to_colored_graph(bool side_colors = true) const;
  /// JSON header line with the part sizes, then one `u v` line per edge.
  std::string serialize() const;
};

DualGraph dual_graph(const ExpandedPresentation& e);

/// 3-regular, bipartite, 90 nodes, 135 edges.
bool has_dual_graph_shape(const DualGraph& g);

// ------------------------------------------------------ group presentation --

struct GroupPresentation {
  int generator_count = 0;
  /// Relators as words of 0-based generator indices.
  std::vector<std::vector<int>> relators;

  /// ASCII `<x1,...,x15 | x1*x1*x1, x10*x2*x1, ...>`.
  std::string to_text() const;
};

GroupPresentation group_presentation(const TrianglePresentation& k);
/// Inverse of group_presentation on length-3 relators.
TrianglePresentation presentation_from_relators(const GroupPresentation& g);

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
std::vector<BigInt> smith_invariants(IntMatrix m);

struct Abelianization {
  /// Elementary divisors (including 1s).
  std::vector<BigInt> divisors;
  int free_rank = 0;

  /// e.g. "Z^1 + Z/3"; "0" for the trivial group.
  std::string to_string() const;
};

/// Exponent-sum matrix of the relators, diagonalized.
Abelianization abelianization(const GroupPresentation& g);

}  // namespace tribuild::polyhedra
