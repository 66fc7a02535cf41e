#include "tribuild/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

#include "tribuild/geometry.hpp"

namespace tribuild {

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::TorsionFree: return "torsion-free";
    case Mode::Torsion: return "torsion";
    case Mode::All: return "all";
  }
  return "all";
}

Mode parse_mode(std::string_view s) {
  if (s == "torsion-free") return Mode::TorsionFree;
  if (s == "torsion") return Mode::Torsion;
  if (s == "all") return Mode::All;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

bool matches(Mode m, const TrianglePresentation& k) {
  switch (m) {
    case Mode::TorsionFree: return !has_torsion(k);
    case Mode::Torsion: return has_torsion(k);
    case Mode::All: return true;
  }
  return true;
}

namespace {

constexpr int kSplitDepth = 3;
constexpr int kMaxTriples = 19;

struct Tables {
  std::array<std::uint16_t, kPoints> row_mask{};
  std::array<std::uint16_t, kPoints> rows_through{};
  std::array<std::array<std::int8_t, kPoints>, kPoints> line_through{};

  Tables() {
    const auto& rows = geometry::gq22_lines();
    for (auto& r : line_through) r.fill(-1);
    for (int r = 0; r < kPoints; ++r) {
      for (int p : rows[r]) {
        row_mask[r] |= 1u << p;
        rows_through[p] |= 1u << r;
      }
      for (int p : rows[r])
        for (int q : rows[r])
          if (p != q) line_through[p][q] = static_cast<std::int8_t>(r);
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

struct State {
  std::array<std::int8_t, kPoints> line;   // row of label a, or -1
  std::array<std::uint16_t, kPoints> pts;  // known points of y_a
  std::array<std::uint16_t, kPoints> arcs; // covered slots (a, b)
  std::uint16_t used_rows = 0;
  std::uint8_t covered = 0;
  std::uint8_t ntriples = 0;
  std::array<std::array<std::uint8_t, 3>, kMaxTriples> triples;

  State() {
    line.fill(-1);
    pts.fill(0);
    arcs.fill(0);
  }
};

class Searcher {
 public:
  Searcher(const EnumerateOptions& opt, const Tables& t) : opt_(opt), t_(t) {}

  // Expands the tree down to the split depth, collecting frontier states.
  void split(const State& s, int depth, std::vector<State>& frontier) {
    if (depth == kSplitDepth) {
      frontier.push_back(s);
      return;
    }
    ++nodes_;
    branch(s, depth, [&](const State& child) { split(child, depth + 1, frontier); });
  }

  void run(const State& s) {
    ++nodes_;
    branch(s, kSplitDepth, [&](const State& child) { run(child); });
  }

  std::uint64_t nodes_ = 0;
  std::vector<EnumeratedPresentation> found_;

 private:
  bool assign(State& s, int a, int r) const {
    if (s.used_rows >> r & 1u) return false;
    if ((s.pts[a] & ~t_.row_mask[r]) != 0) return false;
    s.line[a] = static_cast<std::int8_t>(r);
    s.used_rows |= 1u << r;
    s.pts[a] = t_.row_mask[r];
    return true;
  }

  bool add_point(State& s, int a, int b) const {
    if (s.pts[a] >> b & 1u) return true;
    if (s.line[a] >= 0) return false;
    if (s.pts[a] == 0) {
      s.pts[a] = static_cast<std::uint16_t>(1u << b);
      return true;
    }
    const int q = std::countr_zero(s.pts[a]);
    const int r = t_.line_through[q][b];
    if (r < 0) return false;
    return assign(s, a, r);
  }

  // Forces rows of labels with a single compatible row until stable.
  bool propagate(State& s) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (int a = 0; a < kPoints; ++a) {
        if (s.line[a] >= 0 || s.pts[a] == 0) continue;
        const unsigned compat = t_.rows_through[std::countr_zero(s.pts[a])] & ~s.used_rows;
        if (compat == 0) return false;
        if (std::has_single_bit(compat)) {
          if (!assign(s, a, std::countr_zero(compat))) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  bool cover(State& s, int a, int b) const {
    if (s.arcs[a] >> b & 1u) return false;
    s.arcs[a] |= static_cast<std::uint16_t>(1u << b);
    ++s.covered;
    return true;
  }

  bool place(State& s, int a, int b, int c) const {
    if (a == b && b == c) {
      if (!cover(s, a, a) || !add_point(s, a, a)) return false;
    } else {
      if (!cover(s, a, b) || !cover(s, b, c) || !cover(s, c, a)) return false;
      if (!add_point(s, a, b) || !add_point(s, b, c) || !add_point(s, c, a)) return false;
    }
    s.triples[s.ntriples++] = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                               static_cast<std::uint8_t>(c)};
    return propagate(s);
  }

  // Points that may still lie on y_b.
  unsigned possible_points(const State& s, int b) const {
    if (s.line[b] >= 0) return s.pts[b];
    unsigned rows = s.pts[b] ? t_.rows_through[std::countr_zero(s.pts[b])] : 0x7fffu;
    rows &= ~static_cast<unsigned>(s.used_rows);
    unsigned out = 0;
    for (; rows; rows &= rows - 1) out |= t_.row_mask[std::countr_zero(rows)];
    return out;
  }

  // Labels c whose line may still contain point a.
  unsigned possible_labels(const State& s, int a) const {
    unsigned out = 0;
    const unsigned free_rows = t_.rows_through[a] & ~static_cast<unsigned>(s.used_rows);
    for (int c = 0; c < kPoints; ++c) {
      if (s.pts[c] >> a & 1u) {
        out |= 1u << c;
      } else if (s.line[c] < 0) {
        if (s.pts[c] == 0) {
          if (free_rows) out |= 1u << c;
        } else {
          const int r = t_.line_through[std::countr_zero(s.pts[c])][a];
          if (r >= 0 && !(s.used_rows >> r & 1u)) out |= 1u << c;
        }
      }
    }
    return out;
  }

  unsigned candidates(const State& s, int a, int b, unsigned labels_a) const {
    unsigned out = 0;
    for (unsigned m = possible_points(s, b) & labels_a; m; m &= m - 1) {
      const int c = std::countr_zero(m);
      if (a == b && b == c) {
        out |= 1u << c;
        continue;
      }
      if ((s.arcs[b] >> c & 1u) || (s.arcs[c] >> a & 1u)) continue;
      out |= 1u << c;
    }
    return out;
  }

  template <class F>
  void branch(const State& s, int depth, F&& recurse) {
    if (s.covered == kSlots) {
      leaf(s);
      return;
    }

    // Known uncovered slot with the fewest continuations.
    int best_a = -1, best_b = -1, best_n = 1 << 20;
    unsigned best_c = 0;
    for (int a = 0; a < kPoints && best_n > 0; ++a) {
      unsigned open = s.pts[a] & ~s.arcs[a];
      if (!open) continue;
      const unsigned labels_a = possible_labels(s, a);
      for (; open; open &= open - 1) {
        const int b = std::countr_zero(open);
        const unsigned c = candidates(s, a, b, labels_a);
        const int n = std::popcount(c);
        if (n < best_n) {
          best_n = n;
          best_a = a;
          best_b = b;
          best_c = c;
          if (n == 0) break;
        }
      }
    }
    if (best_n == 0) return;
    if (best_a >= 0) {
      for (unsigned m = best_c; m; m &= m - 1) {
        State child = s;
        if (place(child, best_a, best_b, std::countr_zero(m))) recurse(child);
      }
      return;
    }

    // No slot is known yet: fix the row of the most constrained label.
    int label = -1, label_n = 1 << 20;
    unsigned label_rows = 0;
    for (int a = 0; a < kPoints; ++a) {
      if (s.line[a] >= 0) continue;
      unsigned compat = s.pts[a] ? t_.rows_through[std::countr_zero(s.pts[a])] & ~s.used_rows
                                 : ~static_cast<unsigned>(s.used_rows) & 0x7fffu;
      const int n = std::popcount(compat);
      if (n < label_n) {
        label_n = n;
        label = a;
        label_rows = compat;
      }
    }
    if (label < 0) return;
    if (depth == 0 && opt_.symmetry_pruning && label == 0) label_rows &= symmetry_rows();
    for (unsigned m = label_rows; m; m &= m - 1) {
      State child = s;
      if (assign(child, label, std::countr_zero(m)) && propagate(child)) recurse(child);
    }
  }

  // Row 1 passes through point 1; the first row missing point 1.
  unsigned symmetry_rows() const {
    unsigned rows = 0;
    int in = -1, out = -1;
    for (int r = 0; r < kPoints; ++r) {
      if ((t_.row_mask[r] & 1u) && in < 0) in = r;
      if (!(t_.row_mask[r] & 1u) && out < 0) out = r;
    }
    rows |= 1u << in;
    rows |= 1u << out;
    return rows;
  }

  void leaf(const State& s) {
    Labeling lab;
    for (int a = 0; a < kPoints; ++a) {
      if (s.line[a] < 0) return;  // cannot happen: every label has three covered slots
      lab.row_label[s.line[a]] = a;
    }
    std::vector<Triple> ts;
    ts.reserve(s.ntriples);
    for (int i = 0; i < s.ntriples; ++i) ts.emplace_back(s.triples[i][0], s.triples[i][1], s.triples[i][2]);
    found_.push_back({lab, TrianglePresentation(std::move(ts))});
  }

  const EnumerateOptions& opt_;
  const Tables& t_;
};

}  // namespace

Enumeration enumerate(const EnumerateOptions& options) {
  const Tables& t = tables();
  Enumeration out;

  std::vector<State> frontier;
  Searcher root(options, t);
  root.split(State{}, 0, frontier);
  out.stats.nodes += root.nodes_;
  out.stats.tasks = frontier.size();

  std::vector<std::vector<EnumeratedPresentation>> results(frontier.size() + 1);
  std::vector<std::uint64_t> node_counts(frontier.size(), 0);
  results.back() = std::move(root.found_);  // leaves above the split depth

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < frontier.size();) {
      Searcher s(options, t);
      s.run(frontier[i]);
      node_counts[i] = s.nodes_;
      results[i] = std::move(s.found_);
    }
  };
  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<EnumeratedPresentation> all;
  for (auto n : node_counts) out.stats.nodes += n;
  for (auto& r : results)
    for (auto& e : r) all.push_back(std::move(e));
  out.stats.covers = all.size();
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return x.labeling != y.labeling ? x.labeling < y.labeling : x.presentation < y.presentation;
  });

  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j].labeling == all[i].labeling) ++j;
    if (j - i > 1) {
      ++out.stats.multiple_cover_labelings;
      out.multiple_cover_labelings.push_back(all[i].labeling);
    } else if (matches(options.mode, all[i].presentation)) {
      ++out.stats.by_diagonal[all[i].presentation.diagonal_count()];
      out.presentations.push_back(std::move(all[i]));
    }
    i = j;
  }
  return out;
}

}  // namespace tribuild
