#pragma once

// Triangle presentations over GQ(2,2): labelings of the line table, the
// triangles they force, and validation.
//
// Point and label indices are 0-based here; text and JSON formats are
// 1-based.  Row r of the line table is gq22_lines()[r].

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tribuild {

inline constexpr int kPoints = 15;
inline constexpr int kSlots = 45;

/// row_label[r] is the label of row r, so row r is the line y_{row_label[r]}.
struct Labeling {
  std::array<int, kPoints> row_label{};

  static Labeling identity();
  bool is_permutation() const;
  /// label_row()[a] is the row carrying label a.
  std::array<int, kPoints> label_row() const;
  /// Points of line y_a as a bit mask.
  std::array<unsigned, kPoints> line_masks() const;

  friend auto operator<=>(const Labeling&, const Labeling&) = default;
};

/// Cyclic triple stored in its lexicographically smallest rotation.
class Triple {
 public:
  Triple() = default;
  Triple(int a, int b, int c);

  int operator[](int i) const { return v_[i]; }
  const std::array<int, 3>& entries() const { return v_; }
  bool diagonal() const { return v_[0] == v_[1] && v_[1] == v_[2]; }

  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  std::array<int, 3> v_{};
};

class TrianglePresentation {
 public:
  TrianglePresentation() = default;
  /// Sorts and removes repeated triples.
  explicit TrianglePresentation(std::vector<Triple> triples);

  const std::vector<Triple>& triples() const { return triples_; }
  int size() const { return static_cast<int>(triples_.size()); }
  int diagonal_count() const;

  friend auto operator<=>(const TrianglePresentation&, const TrianglePresentation&) = default;

 private:
  std::vector<Triple> triples_;
};

struct NoCover {};
struct MultipleCovers {
  std::vector<TrianglePresentation> covers;
};
using Derivation = std::variant<TrianglePresentation, NoCover, MultipleCovers>;

/// Solves the slot exact cover for a labeling.
Derivation triples_from_labeling(const Labeling& lab);

/// Slot-local candidates {c : c on line y_b, a on line y_c} for slot (a, b).
std::vector<int> slot_candidates(const Labeling& lab, int a, int b);

/// The labeling whose lines are read off the slots K covers, when those
/// slot sets are lines of GQ(2,2) forming a bijection.
std::optional<Labeling> induced_labeling(const TrianglePresentation& k);

/// Every slot covered exactly once and the covered slots of each label form
/// a distinct line of GQ(2,2).
bool validate(const TrianglePresentation& k);

bool has_torsion(const TrianglePresentation& k);

// ------------------------------------------------------------- text forms --

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `y_1, y_2, ...` list of row labels (the optional `T24 (1)` prefix is
/// not accepted here; see parse_appendix_entry).
Labeling parse_appendix_labeling(std::string_view line);
std::string emit_labeling(const Labeling& lab);

struct AppendixEntry {
  std::string id;    // "T24"
  int building = 0;  // tag in parentheses
  Labeling labeling;
};

/// `T24 (1) y_1, y_2, ...`
AppendixEntry parse_appendix_entry(std::string_view line);
std::string emit_appendix_entry(const AppendixEntry& e);

/// The embedded list of 168 torsion labelings.
const std::vector<AppendixEntry>& appendix_entries();
std::string_view appendix_text();
/// Parses a whole dataset in the same format, skipping blank lines.
std::vector<AppendixEntry> parse_appendix(std::string_view text);

/// `[[a,b,c],...]` with 1-based entries.
std::string triples_json(const TrianglePresentation& k);

}  // namespace tribuild
