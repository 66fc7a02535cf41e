#pragma once

// Radius-2 balls in the universal cover of the expanded polyhedron, and the
// building classes they separate.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "tribuild/canon.hpp"
#include "tribuild/presentations.hpp"

namespace tribuild::building {

class ConsistencyViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cells of the ball.  Letters are ids of the expanded alphabet
/// (3 * point + superscript index); faces refer to the expanded polyhedron.
struct BasedBall {
  struct Edge {
    int tail, head, letter;
  };
  struct Face {
    int face;                  // face of the expanded polyhedron
    std::array<int, 3> edges;  // in boundary-word order
  };

  int base = 0;
  std::vector<int> projection;  // vertex of the expanded polyhedron
  std::vector<int> distance;    // combinatorial distance from the base (0, 1, 2)
  std::vector<Edge> edges;
  std::vector<Face> faces;

  int vertex_count() const { return static_cast<int>(projection.size()); }

  /// Vertex, edge and face nodes joined by incidence.  Colors: base,
  /// distance-1 vertices, distance-2 vertices, edges, faces.  Letters and
  /// orientations are dropped.
  canon::ColoredGraph incidence_graph() const;
};

/// Develops the universal cover of the expanded polyhedron around a lift of
/// vertex `base_vertex` (0, 1 or 2): the star of the base, then the full
/// star of every neighbor.  Cells are only shared along common faces; any
/// other coincidence throws ConsistencyViolation.
BasedBall develop_two_ball(const TrianglePresentation& k, int base_vertex = 0);

canon::Certificate building_invariant(const BasedBall& b);

/// Invariant of the presentation tagged (1) in the embedded table (T24),
/// which names building class 1.
const canon::Certificate& class_one_invariant();

class MoreThanTwoClasses : public std::runtime_error {
 public:
  MoreThanTwoClasses(const std::string& what, std::vector<std::size_t> offending)
      : std::runtime_error(what), offending(std::move(offending)) {}
  /// One input index per surplus invariant value.
  std::vector<std::size_t> offending;
};

struct BuildingClassification {
  std::vector<int> building;  // 1 or 2 per input
  std::vector<canon::Certificate> invariants;
};

/// Inputs sharing the class-one invariant get 1, all others 2.
BuildingClassification classify_buildings(const std::vector<TrianglePresentation>& ks, int workers = 1);

}  // namespace tribuild::building
