#include "tribuild/geometry.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace tribuild::geometry {

GeneralizedPolygonGraph::GeneralizedPolygonGraph(int point_count, int line_count,
                                                 std::vector<Flag> flags)
    : points_(point_count), lines_(line_count), flags_(std::move(flags)) {
  if (point_count < 0 || line_count < 0) throw std::invalid_argument("negative part size");
  if (point_count + line_count > kMaxPolygonVertices)
    throw canon::SizeBoundExceeded("incidence graph exceeds " +
                                   std::to_string(kMaxPolygonVertices) + " vertices");
  std::sort(flags_.begin(), flags_.end());
  adjacency_.assign(vertex_count(), Row{});
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    auto [p, l] = flags_[i];
    if (p < 0 || p >= points_ || l < 0 || l >= lines_)
      throw std::invalid_argument("flag out of range");
    if (i > 0 && flags_[i - 1] == flags_[i]) repeated_ = true;
    adjacency_[p].set(points_ + l);
    adjacency_[points_ + l].set(p);
  }
}

std::vector<int> GeneralizedPolygonGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < vertex_count(); ++u)
    if (adjacency_[v][u]) out.push_back(u);
  return out;
}

std::vector<int> GeneralizedPolygonGraph::points_on(int line) const {
  std::vector<int> out;
  for (int p = 0; p < points_; ++p)
    if (adjacency_[points_ + line][p]) out.push_back(p);
  return out;
}

std::vector<int> GeneralizedPolygonGraph::lines_through(int point) const {
  std::vector<int> out;
  for (int l = 0; l < lines_; ++l)
    if (adjacency_[point][points_ + l]) out.push_back(l);
  return out;
}

canon::ColoredGraph GeneralizedPolygonGraph::to_colored_graph(bool colored) const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(flags_.size());
  for (auto [p, l] : flags_) edges.emplace_back(p, points_ + l);
  std::vector<int> colors(vertex_count(), 0);
  if (colored)
    for (int v = points_; v < vertex_count(); ++v) colors[v] = 1;
  return canon::ColoredGraph(vertex_count(), edges, std::move(colors));
}

// --------------------------------------------------------- automorphisms --

GraphAutomorphism GraphAutomorphism::identity(int points, int lines) {
  GraphAutomorphism a;
  a.point_map.resize(points);
  a.line_map.resize(lines);
  for (int i = 0; i < points; ++i) a.point_map[i] = i;
  for (int i = 0; i < lines; ++i) a.line_map[i] = i;
  return a;
}

GraphAutomorphism GraphAutomorphism::after(const GraphAutomorphism& first) const {
  GraphAutomorphism r;
  r.swaps_colors = swaps_colors != first.swaps_colors;
  r.point_map.resize(first.point_map.size());
  r.line_map.resize(first.line_map.size());
  for (std::size_t p = 0; p < first.point_map.size(); ++p) {
    const int q = first.point_map[p];
    r.point_map[p] = first.swaps_colors ? line_map[q] : point_map[q];
  }
  for (std::size_t l = 0; l < first.line_map.size(); ++l) {
    const int q = first.line_map[l];
    r.line_map[l] = first.swaps_colors ? point_map[q] : line_map[q];
  }
  return r;
}

GraphAutomorphism GraphAutomorphism::inverse() const {
  GraphAutomorphism r;
  r.swaps_colors = swaps_colors;
  r.point_map.resize(swaps_colors ? line_map.size() : point_map.size());
  r.line_map.resize(swaps_colors ? point_map.size() : line_map.size());
  if (!swaps_colors) {
    for (std::size_t p = 0; p < point_map.size(); ++p) r.point_map[point_map[p]] = static_cast<int>(p);
    for (std::size_t l = 0; l < line_map.size(); ++l) r.line_map[line_map[l]] = static_cast<int>(l);
  } else {
    // p -> line point_map[p], so that line goes back to point p.
    for (std::size_t p = 0; p < point_map.size(); ++p) r.line_map[point_map[p]] = static_cast<int>(p);
    for (std::size_t l = 0; l < line_map.size(); ++l) r.point_map[line_map[l]] = static_cast<int>(l);
  }
  return r;
}

std::vector<GeneralizedPolygonGraph::Flag> GraphAutomorphism::apply(
    const std::vector<GeneralizedPolygonGraph::Flag>& flags) const {
  std::vector<GeneralizedPolygonGraph::Flag> out;
  out.reserve(flags.size());
  for (auto [p, l] : flags) {
    if (swaps_colors)
      out.emplace_back(line_map[l], point_map[p]);
    else
      out.emplace_back(point_map[p], line_map[l]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GraphAutomorphism> automorphism_group(const GeneralizedPolygonGraph& g,
                                                  bool include_dualities) {
  const auto cg = g.to_colored_graph(!include_dualities);
  const int P = g.point_count();
  std::vector<GraphAutomorphism> out;
  canon::enumerate_isomorphisms(cg, cg, [&](const std::vector<int>& map) {
    GraphAutomorphism a;
    a.swaps_colors = P > 0 ? !g.is_point(map[0]) : false;
    for (int p = 0; p < P; ++p) {
      if (g.is_point(map[p]) == a.swaps_colors) return true;  // mixes parts: not a polygon map
      a.point_map.push_back(a.swaps_colors ? map[p] - P : map[p]);
    }
    for (int l = 0; l < g.line_count(); ++l) {
      const int w = map[P + l];
      if (g.is_point(w) != a.swaps_colors) return true;
      a.line_map.push_back(a.swaps_colors ? w : w - P);
    }
    out.push_back(std::move(a));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- GQ(2,2) --

namespace {

std::vector<std::pair<int, int>> pairs_of_six() {
  std::vector<std::pair<int, int>> v;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) v.emplace_back(i, j);
  return v;
}

std::array<std::array<int, 3>, 15> make_lines() {
  const auto pairs = pairs_of_six();
  auto index = [&](int i, int j) {
    return static_cast<int>(std::find(pairs.begin(), pairs.end(), std::pair{i, j}) - pairs.begin());
  };
  std::vector<std::array<int, 3>> lines;
  // A perfect matching pairs 1 with some j, then the smallest remaining
  // element with one of the other three.
  for (int j = 2; j <= 6; ++j) {
    std::vector<int> rest;
    for (int k = 2; k <= 6; ++k)
      if (k != j) rest.push_back(k);
    for (int t = 1; t < 4; ++t) {
      std::vector<int> last;
      for (int k = 1; k < 4; ++k)
        if (k != t) last.push_back(rest[k]);
      std::array<int, 3> line{index(1, j), index(rest[0], rest[t]), index(last[0], last[1])};
      std::sort(line.begin(), line.end());
      lines.push_back(line);
    }
  }
  std::sort(lines.begin(), lines.end());
  std::array<std::array<int, 3>, 15> out;
  std::copy(lines.begin(), lines.end(), out.begin());
  return out;
}

}  // namespace

const std::array<std::array<int, 3>, 15>& gq22_lines() {
  static const auto lines = make_lines();
  return lines;
}

std::pair<int, int> gq22_point_pair(int p) {
  static const auto pairs = pairs_of_six();
  return pairs.at(p);
}

GeneralizedPolygonGraph build_gq22() {
  std::vector<GeneralizedPolygonGraph::Flag> flags;
  const auto& lines = gq22_lines();
  for (int l = 0; l < 15; ++l)
    for (int p : lines[l]) flags.emplace_back(p, l);
  return GeneralizedPolygonGraph(15, 15, std::move(flags));
}

GeneralizedPolygonGraph thin_polygon(int m) {
  // Point i lies on lines i and i-1.
  std::vector<GeneralizedPolygonGraph::Flag> flags;
  for (int i = 0; i < m; ++i) {
    flags.emplace_back(i, i);
    flags.emplace_back(i, (i + m - 1) % m);
  }
  return GeneralizedPolygonGraph(m, m, std::move(flags));
}

// ------------------------------------------------------------- metrics --

std::vector<int> distances_from(const GeneralizedPolygonGraph& g, int v) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

int diameter(const GeneralizedPolygonGraph& g) {
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int x : distances_from(g, v)) {
      if (x < 0) return -1;
      d = std::max(d, x);
    }
  return d;
}

int girth(const GeneralizedPolygonGraph& g) {
  if (g.has_repeated_flags()) return 2;
  int best = 0;
  const int n = g.vertex_count();
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          const int len = dist[u] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

bool is_generalized_m_gon(const GeneralizedPolygonGraph& g, int m) {
  if (g.vertex_count() == 0 || m < 1 || g.has_repeated_flags()) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.adjacency(v).count() < 2) return false;
  return diameter(g) == m && girth(g) == 2 * m;
}

// ------------------------------------------------------------- emitters --

std::string to_edge_list(const GeneralizedPolygonGraph& g) {
  std::ostringstream os;
  for (auto [p, l] : g.flags()) os << p << ' ' << l << '\n';
  return os.str();
}

std::string to_dot(const GeneralizedPolygonGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int p = 0; p < g.point_count(); ++p) os << "  p" << p << " [shape=circle,style=filled,fillcolor=black,fontcolor=white];\n";
  for (int l = 0; l < g.line_count(); ++l) os << "  l" << l << " [shape=circle];\n";
  for (auto [p, l] : g.flags()) os << "  p" << p << " -- l" << l << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tribuild::geometry
