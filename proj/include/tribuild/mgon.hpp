#pragma once

// m-gonal presentations obtained by spelling a word in a, b, c over the
// triples of an expanded triangle presentation.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tribuild/polyhedra.hpp"
#include "tribuild/presentations.hpp"

namespace tribuild::mgon {

class BadPrefix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ProperPower : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// z_1 ... z_m over {a, b, c}, starting with abc, with no two equal
/// neighbors and z_m != a.
class PatternWord {
 public:
  static PatternWord parse(std::string_view letters);
  const std::string& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  /// 0, 1, 2 for a, b, c.
  int at(int t) const { return letters_[t] - 'a'; }

 private:
  explicit PatternWord(std::string s) : letters_(std::move(s)) {}
  std::string letters_;
};

inline PatternWord validate_pattern_word(std::string_view letters) { return PatternWord::parse(letters); }

/// Position t of every tuple carries superscript t + 1, so the complex has
/// one vertex between consecutive positions.
struct MTuplePresentation {
  int m = 0;
  std::vector<polyhedra::SuperTuple> tuples;  // minimal rotations, sorted
};

/// For each expanded triple (x_p^1, x_q^2, x_r^3) substitutes a = p, b = q,
/// c = r into the word.
MTuplePresentation make_mgon(const TrianglePresentation& k, const PatternWord& w);

enum class LinkType { G, GPrime };
std::string_view to_string(LinkType t);

/// +1 for ab, bc, ca and -1 for ba, cb, ac.
int sign(int from, int to);

/// Entry t (0-based) is the type at the vertex after position t, decided by
/// Sign(z_t, z_{t+1}); the last entry uses Sign(z_m, a).
std::vector<LinkType> link_types(const PatternWord& w);

struct VertexReport {
  int vertex = 0;             // 1-based, the vertex after position `vertex`
  LinkType predicted;
  std::string measured;       // "G", "G'" or "other"
  bool quadrangle = false;    // link is a generalized 4-gon
  bool matches = false;
};

struct MgonReport {
  std::string word;
  int m = 0;
  int vertices = 0;
  int faces = 0;
  bool uniform_faces = false;
  std::vector<VertexReport> links;
  bool ok = false;

  std::string to_json() const;
  std::string to_text() const;
};

class VerificationFailed : public std::runtime_error {
 public:
  VerificationFailed(const std::string& what, MgonReport report)
      : std::runtime_error(what), report(std::move(report)) {}
  MgonReport report;
};

/// Builds the m-gonal polyhedron, checks it has m vertices and 45 m-gonal
/// faces, and compares each vertex link with the flag sets of G
/// (q on y_p) and G' (p on y_q) for incoming letter x_p and outgoing x_q.
/// Throws VerificationFailed on the first mismatch.
MgonReport verify_mgon(const TrianglePresentation& k, const PatternWord& w);

}  // namespace tribuild::mgon
