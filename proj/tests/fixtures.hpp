#pragma once

// Frozen values.  Counts come from two independent enumerators (the shipped
// search and the row-order reference in oracles/), T24's abelianization
// from a sympy Smith normal form, dual-graph classes from nauty certificates.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "tribuild/enumerate.hpp"
#include "tribuild/presentations.hpp"

namespace fixtures {

inline constexpr std::uint64_t kRawLabelings = 269280;
inline constexpr std::array<std::uint64_t, 3> kByDiagonal{32400, 200160, 36720};  // 0, 3, 6 diagonal triples
inline constexpr std::uint64_t kMultipleCovers = 0;

inline constexpr std::uint64_t kPrunedTorsionFree = 3816;
inline constexpr std::uint64_t kPrunedTorsion = 38592;

inline constexpr int kColorTorsionFreeClasses = 45;
inline constexpr int kColorTorsionClasses = 329;
inline constexpr int kDualTorsionFreeClasses = 23;
inline constexpr int kDualTorsionClasses = 169;
inline constexpr int kTorsionDualGraphClasses = 169;

// distances from a point of GQ(2,2): 0, 1, 2, 3, 4
inline constexpr std::array<int, 5> kPointDistanceProfile{1, 3, 6, 12, 8};

inline constexpr int kBallVertices = 721;
inline constexpr int kBallEdges = 1935;
inline constexpr int kBallFaces = 1215;

inline constexpr int kT24Cyclic = 12;  // abelianization Z/12

inline const tribuild::TrianglePresentation& t24() {
  static const auto k = [] {
    for (const auto& e : tribuild::appendix_entries())
      if (e.id == "T24") return std::get<tribuild::TrianglePresentation>(tribuild::triples_from_labeling(e.labeling));
    throw std::logic_error("no T24");
  }();
  return k;
}

/// Pruned enumeration, shared between test cases.
inline const tribuild::Enumeration& pruned_all() {
  static const auto e = tribuild::enumerate({tribuild::Mode::All, 1, true});
  return e;
}

inline std::vector<tribuild::TrianglePresentation> presentations(const tribuild::Enumeration& e) {
  std::vector<tribuild::TrianglePresentation> out;
  for (const auto& p : e.presentations) out.push_back(p.presentation);
  return out;
}

}  // namespace fixtures
