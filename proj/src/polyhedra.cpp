#include "tribuild/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tribuild::polyhedra {

// ------------------------------------------------------------ polyhedron --

Polyhedron::Polyhedron(int letter_count, std::vector<std::vector<int>> faces)
    : letters_(letter_count), faces_(std::move(faces)), thickness_(letter_count, 0) {
  std::vector<int> parent(2 * letters_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : faces_) {
    if (f.empty()) throw std::invalid_argument("empty face");
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int a = f[i], b = f[(i + 1) % f.size()];
      if (a < 0 || a >= letters_) throw std::invalid_argument("face letter out of range");
      ++thickness_[a];
      const int x = find(2 * a + 1), y = find(2 * b);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  // Roots are the smallest ends of their classes, so numbering roots in
  // increasing order numbers vertices by smallest end.
  std::vector<int> id(2 * letters_, -1);
  vertex_of_end_.resize(2 * letters_);
  for (int e = 0; e < 2 * letters_; ++e) {
    const int r = find(e);
    if (id[r] < 0) id[r] = vertices_++;
    vertex_of_end_[e] = id[r];
  }
}

Polyhedron Polyhedron::without_face(int face) const {
  auto f = faces_;
  f.erase(f.begin() + face);
  return Polyhedron(letters_, std::move(f));
}

VertexLink vertex_link(const Polyhedron& x, int vertex) {
  if (vertex < 0 || vertex >= x.vertex_count()) throw std::out_of_range("no such vertex");
  VertexLink link;
  std::vector<int> point_of(x.letter_count(), -1), line_of(x.letter_count(), -1);
  for (int l = 0; l < x.letter_count(); ++l) {
    if (x.start(l) == vertex) {
      point_of[l] = static_cast<int>(link.point_letter.size());
      link.point_letter.push_back(l);
    }
    if (x.end(l) == vertex) {
      line_of[l] = static_cast<int>(link.line_letter.size());
      link.line_letter.push_back(l);
    }
  }
  std::vector<geometry::GeneralizedPolygonGraph::Flag> flags;
  for (const auto& f : x.faces())
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int in = f[i], out = f[(i + 1) % f.size()];
      if (x.end(in) == vertex) flags.emplace_back(point_of[out], line_of[in]);
    }
  link.graph = geometry::GeneralizedPolygonGraph(static_cast<int>(link.point_letter.size()),
                                                 static_cast<int>(link.line_letter.size()),
                                                 std::move(flags));
  return link;
}

// ------------------------------------------------------------- expansion --

SuperTuple min_rotation(SuperTuple t) {
  SuperTuple best = t;
  for (std::size_t r = 1; r < t.size(); ++r) {
    std::rotate(t.begin(), t.begin() + 1, t.end());
    if (t < best) best = t;
  }
  return best;
}

ExpandedPresentation::ExpandedPresentation(std::vector<SuperTuple> triples) {
  for (auto& t : triples) t = min_rotation(std::move(t));
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  triples_ = std::move(triples);
}

ExpandedPresentation expand_index3(const TrianglePresentation& k) {
  std::vector<SuperTuple> out;
  for (const auto& t : k.triples()) {
    if (t.diagonal()) {
      out.push_back({{t[0], 0}, {t[0], 1}, {t[0], 2}});
      continue;
    }
    for (int s = 0; s < 3; ++s)
      out.push_back({{t[0], s}, {t[1], (s + 1) % 3}, {t[2], (s + 2) % 3}});
  }
  return ExpandedPresentation(std::move(out));
}

ExpandedPresentation rotate_superscripts(const ExpandedPresentation& e, int shift) {
  std::vector<SuperTuple> out = e.triples();
  for (auto& t : out)
    for (auto& x : t) x.sup = ((x.sup + shift) % 3 + 3) % 3;
  return ExpandedPresentation(std::move(out));
}

bool has_expanded_shape(const ExpandedPresentation& e) {
  if (e.size() != 45) return false;
  std::map<SuperLetter, int> uses;
  for (const auto& t : e.triples()) {
    if (t.size() != 3) return false;
    for (const auto& x : t) ++uses[x];
  }
  if (uses.size() != 45) return false;
  return std::all_of(uses.begin(), uses.end(), [](const auto& kv) { return kv.second == 3; });
}

Polyhedron build_polyhedron(const std::vector<SuperTuple>& tuples, int m) {
  std::vector<std::vector<int>> faces;
  faces.reserve(tuples.size());
  for (const auto& t : tuples) {
    std::vector<int> f;
    for (const auto& x : t) f.push_back(super_letter_id(x, m));
    faces.push_back(std::move(f));
  }
  return Polyhedron(kPoints * m, std::move(faces));
}

Polyhedron build_polyhedron(const ExpandedPresentation& e) { return build_polyhedron(e.triples(), 3); }

Polyhedron build_polyhedron(const TrianglePresentation& k) {
  std::vector<std::vector<int>> faces;
  for (const auto& t : k.triples()) faces.push_back({t[0], t[1], t[2]});
  return Polyhedron(kPoints, std::move(faces));
}

// ------------------------------------------------------------ dual graph --

DualGraph dual_graph(const ExpandedPresentation& e) {
  DualGraph g;
  for (const auto& t : e.triples())
    for (const auto& x : t) g.letters.push_back(x);
  std::sort(g.letters.begin(), g.letters.end());
  g.letters.erase(std::unique(g.letters.begin(), g.letters.end()), g.letters.end());
  g.faces = e.triples();
  const int L = static_cast<int>(g.letters.size());
  for (int f = 0; f < static_cast<int>(g.faces.size()); ++f)
    for (const auto& x : g.faces[f]) {
      const int l = static_cast<int>(std::lower_bound(g.letters.begin(), g.letters.end(), x) - g.letters.begin());
      g.edges.emplace_back(l, L + f);
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

canon::ColoredGraph DualGraph::to_colored_graph(bool side_colors) const {
  std::vector<int> colors(node_count(), 0);
  if (side_colors)
    for (int v = static_cast<int>(letters.size()); v < node_count(); ++v) colors[v] = 1;
  return canon::ColoredGraph(node_count(), edges, std::move(colors));
}

std::string DualGraph::serialize() const {
  std::ostringstream os;
  os << "{\"letter_nodes\":" << letters.size() << ",\"face_nodes\":" << faces.size()
     << ",\"edges\":" << edges.size() << "}\n";
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

bool has_dual_graph_shape(const DualGraph& g) {
  if (g.node_count() != 90 || g.edges.size() != 135) return false;
  const auto cg = g.to_colored_graph();
  if (cg.edge_count() != 135) return false;  // no repeated letter on a face
  const int L = static_cast<int>(g.letters.size());
  for (int v = 0; v < cg.vertex_count(); ++v) {
    if (cg.degree(v) != 3) return false;
    for (int u : cg.neighbors(v))
      if ((u < L) == (v < L)) return false;
  }
  return true;
}

// ------------------------------------------------------ group presentation --

std::string GroupPresentation::to_text() const {
  std::ostringstream os;
  os << '<';
  for (int i = 0; i < generator_count; ++i) os << (i ? "," : "") << 'x' << i + 1;
  os << " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) os << ", ";
    for (std::size_t i = 0; i < relators[r].size(); ++i) os << (i ? "*" : "") << 'x' << relators[r][i] + 1;
  }
  os << '>';
  return os.str();
}

GroupPresentation group_presentation(const TrianglePresentation& k) {
  GroupPresentation g;
  g.generator_count = kPoints;
  for (const auto& t : k.triples()) g.relators.push_back({t[0], t[1], t[2]});
  return g;
}

TrianglePresentation presentation_from_relators(const GroupPresentation& g) {
  std::vector<Triple> ts;
  for (const auto& r : g.relators) {
    if (r.size() != 3) throw std::invalid_argument("relator is not of length 3");
    ts.emplace_back(r[0], r[1], r[2]);
  }
  return TrianglePresentation(std::move(ts));
}

std::vector<BigInt> smith_invariants(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<BigInt> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: nonzero entry of least absolute value in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return out;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold a row with a non-multiple into row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(abs(a[t][t]));
  }
  return out;
}

std::string Abelianization::to_string() const {
  std::vector<std::string> parts;
  if (free_rank > 0) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& d : divisors)
    if (d > 1) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

Abelianization abelianization(const GroupPresentation& g) {
  IntMatrix m(g.relators.size(), std::vector<BigInt>(g.generator_count, 0));
  for (std::size_t r = 0; r < g.relators.size(); ++r)
    for (int x : g.relators[r]) m[r][x] += 1;
  Abelianization out;
  out.divisors = smith_invariants(std::move(m));
  out.free_rank = g.generator_count - static_cast<int>(out.divisors.size());
  return out;
}

}  // namespace tribuild::polyhedra
