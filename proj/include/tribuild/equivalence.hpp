#pragma once

// Equivalence of triangle presentations under automorphisms of GQ(2,2).

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "tribuild/geometry.hpp"
#include "tribuild/presentations.hpp"

namespace tribuild {

/// ColorPreserving: point permutations induced by collineations act on the
/// letters of every triple.  WithDualities: dualities act as well, sending
/// (a, b, c) to (p(c), p(b), p(a)) where p(x) is the point the duality
/// assigns to the line y_x.
enum class EquivalenceVariant { ColorPreserving, WithDualities };

std::string_view to_string(EquivalenceVariant v);
/// "color" or "dual"; throws std::invalid_argument.
EquivalenceVariant parse_equivalence(std::string_view s);

class ActionIncompatible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Automorphisms of GQ(2,2) realizing the variant (720 or 1440 elements).
const std::vector<geometry::GraphAutomorphism>& equivalence_group(EquivalenceVariant v);

TrianglePresentation act(const geometry::GraphAutomorphism& phi, const TrianglePresentation& k,
                         EquivalenceVariant v);

/// Smallest image of k over the variant's group.
TrianglePresentation canonical_rep(const TrianglePresentation& k, EquivalenceVariant v);

struct ClassReduction {
  /// Index of the first member of each class, in input order.
  std::vector<std::size_t> representatives;
  /// Class index of every input.
  std::vector<std::size_t> class_of;
  /// Full orbit size of each class (images need not all be in the input).
  std::vector<std::size_t> orbit_sizes;
};

/// Groups presentations into equivalence classes by marking whole orbits.
ClassReduction reduce_to_classes(const std::vector<TrianglePresentation>& ks, EquivalenceVariant v);

}  // namespace tribuild
