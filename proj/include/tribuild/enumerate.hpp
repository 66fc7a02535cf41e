#pragma once

// Exhaustive search for labelings of the GQ(2,2) line table that admit a
// unique triangle presentation.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "tribuild/presentations.hpp"

namespace tribuild {

enum class Mode { TorsionFree, Torsion, All };

std::string_view to_string(Mode m);
/// "torsion-free", "torsion" or "all"; throws std::invalid_argument.
Mode parse_mode(std::string_view s);
bool matches(Mode m, const TrianglePresentation& k);

struct EnumerateOptions {
  Mode mode = Mode::All;
  int workers = 1;
  /// Only explore labelings in which label 1 sits on one of two fixed rows
  /// (one through point 1, one missing it).  Every orbit of the point
  /// stabilizer still meets the search space, so class sets are unchanged.
  bool symmetry_pruning = false;
};

struct EnumeratedPresentation {
  Labeling labeling;
  TrianglePresentation presentation;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  /// (labeling, cover) pairs reached.
  std::uint64_t covers = 0;
  /// Labelings with more than one cover (excluded from the output).
  std::uint64_t multiple_cover_labelings = 0;
  /// Emitted labelings by diagonal count (index 0..6).
  std::array<std::uint64_t, 7> by_diagonal{};
  std::size_t tasks = 0;
};

struct Enumeration {
  /// Sorted by labeling.
  std::vector<EnumeratedPresentation> presentations;
  std::vector<Labeling> multiple_cover_labelings;
  EnumerationStats stats;
};

/// Search over partial labelings driven by the slots still to be covered:
/// each step either places the triangle covering a slot whose line is known
/// or fixes the row of a label, propagating the lines forced by collinear
/// points.  Output is independent of the worker count.
Enumeration enumerate(const EnumerateOptions& options);

}  // namespace tribuild
