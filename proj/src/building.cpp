#include "tribuild/building.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

#include "tribuild/polyhedra.hpp"

namespace tribuild::building {

namespace {

constexpr int kLetters = 45;
constexpr int kGerms = 2 * kLetters;  // 2l: outgoing germ of l, 2l + 1: incoming

struct Corner {
  int face, pos;  // corner between word positions pos and pos + 1
};

class Developer {
 public:
  explicit Developer(const TrianglePresentation& k)
      : x_(polyhedra::build_polyhedron(polyhedra::expand_index3(k))), corners_(x_.vertex_count()) {
    if (x_.vertex_count() != 3 || x_.letter_count() != kLetters)
      throw ConsistencyViolation("expanded polyhedron does not have 3 vertices");
    for (int f = 0; f < x_.face_count(); ++f)
      for (int i = 0; i < 3; ++i) corners_[x_.end(x_.faces()[f][i])].push_back({f, i});
  }

  BasedBall run(int base_vertex) {
    if (base_vertex < 0 || base_vertex >= x_.vertex_count())
      throw std::out_of_range("base vertex out of range");
    ball_.base = new_vertex(base_vertex, 0);
    complete_star(ball_.base);
    for (int u = 0; u < ball_.vertex_count(); ++u)
      if (ball_.distance[u] == 1) complete_star(u);
    check();
    return std::move(ball_);
  }

 private:
  int new_vertex(int projection, int distance) {
    ball_.projection.push_back(projection);
    ball_.distance.push_back(distance);
    germ_edge_.emplace_back();
    germ_edge_.back().fill(-1);
    return ball_.vertex_count() - 1;
  }

  static int out_germ(int l) { return 2 * l; }
  static int in_germ(int l) { return 2 * l + 1; }

  int add_edge(int tail, int head, int letter) {
    const int e = static_cast<int>(ball_.edges.size());
    ball_.edges.push_back({tail, head, letter});
    germ_edge_[tail][out_germ(letter)] = e;
    germ_edge_[head][in_germ(letter)] = e;
    return e;
  }

  // The edge leaving u along the germ, creating the far vertex if needed.
  int edge_at(int u, int germ) {
    if (germ_edge_[u][germ] >= 0) return germ_edge_[u][germ];
    const int l = germ / 2;
    const bool out = germ % 2 == 0;
    const int w = new_vertex(out ? x_.end(l) : x_.start(l), ball_.distance[u] + 1);
    return out ? add_edge(u, w, l) : add_edge(w, u, l);
  }

  static std::uint64_t face_key(int edge, int face) {
    return static_cast<std::uint64_t>(edge) << 32 | static_cast<std::uint32_t>(face);
  }

  void add_face_at(int u, const Corner& c) {
    const auto& word = x_.faces()[c.face];
    const int l_in = word[c.pos], l_out = word[(c.pos + 1) % 3], l_far = word[(c.pos + 2) % 3];
    const int e_in = edge_at(u, in_germ(l_in));
    const int e_out = edge_at(u, out_germ(l_out));

    auto known_in = face_of_.find(face_key(e_in, c.face));
    auto known_out = face_of_.find(face_key(e_out, c.face));
    if (known_in != face_of_.end() || known_out != face_of_.end()) {
      if (known_in == face_of_.end() || known_out == face_of_.end() || known_in->second != known_out->second)
        throw ConsistencyViolation("face corner at vertex " + std::to_string(u) + " splits across two lifts");
      return;
    }

    const int w_in = ball_.edges[e_in].tail;   // start of l_in
    const int w_out = ball_.edges[e_out].head; // end of l_out
    const int a = germ_edge_[w_out][out_germ(l_far)];
    const int b = germ_edge_[w_in][in_germ(l_far)];
    int e_far;
    if (a < 0 && b < 0) {
      e_far = add_edge(w_out, w_in, l_far);
    } else if (a >= 0 && a == b) {
      e_far = a;
    } else {
      throw ConsistencyViolation("closing edge of a face at vertex " + std::to_string(u) +
                                 " is already attached elsewhere");
    }
    if (face_of_.count(face_key(e_far, c.face)))
      throw ConsistencyViolation("closing edge already bounds this face elsewhere");

    std::array<int, 3> edges{};
    edges[c.pos] = e_in;
    edges[(c.pos + 1) % 3] = e_out;
    edges[(c.pos + 2) % 3] = e_far;
    const int id = static_cast<int>(ball_.faces.size());
    ball_.faces.push_back({c.face, edges});
    for (int e : edges) face_of_[face_key(e, c.face)] = id;
  }

  void complete_star(int u) {
    for (const auto& c : corners_[ball_.projection[u]]) add_face_at(u, c);
  }

  // Every vertex of distance <= 1 carries a full copy of its link.
  void check() const {
    std::vector<int> corner_count(ball_.vertex_count(), 0);
    for (const auto& f : ball_.faces)
      for (int e : f.edges) ++corner_count[ball_.edges[e].head];
    for (int u = 0; u < ball_.vertex_count(); ++u) {
      if (ball_.distance[u] > 1) continue;
      for (int g = 0; g < kGerms; ++g) {
        const int l = g / 2;
        const bool applies = g % 2 == 0 ? x_.start(l) == ball_.projection[u] : x_.end(l) == ball_.projection[u];
        if (applies != (germ_edge_[u][g] >= 0))
          throw ConsistencyViolation("incomplete link at vertex " + std::to_string(u));
      }
      if (corner_count[u] != static_cast<int>(corners_[ball_.projection[u]].size()))
        throw ConsistencyViolation("wrong corner count at vertex " + std::to_string(u));
    }
  }

  polyhedra::Polyhedron x_;
  std::vector<std::vector<Corner>> corners_;
  BasedBall ball_;
  std::vector<std::array<int, kGerms>> germ_edge_;
  std::unordered_map<std::uint64_t, int> face_of_;
};

}  // namespace

canon::ColoredGraph BasedBall::incidence_graph() const {
  const int V = vertex_count();
  const int E = static_cast<int>(edges.size());
  const int F = static_cast<int>(faces.size());
  std::vector<std::pair<int, int>> inc;
  inc.reserve(2 * E + 3 * F);
  for (int e = 0; e < E; ++e) {
    inc.emplace_back(edges[e].tail, V + e);
    inc.emplace_back(edges[e].head, V + e);
  }
  for (int f = 0; f < F; ++f)
    for (int e : faces[f].edges) inc.emplace_back(V + e, V + E + f);
  std::vector<int> colors(V + E + F);
  for (int v = 0; v < V; ++v) colors[v] = v == base ? 0 : distance[v];
  for (int e = 0; e < E; ++e) colors[V + e] = 3;
  for (int f = 0; f < F; ++f) colors[V + E + f] = 4;
  return canon::ColoredGraph(V + E + F, inc, std::move(colors));
}

BasedBall develop_two_ball(const TrianglePresentation& k, int base_vertex) {
  return Developer(k).run(base_vertex);
}

canon::Certificate building_invariant(const BasedBall& b) { return canon::canonical_form(b.incidence_graph()); }

const canon::Certificate& class_one_invariant() {
  static const canon::Certificate cert = [] {
    for (const auto& e : appendix_entries())
      if (e.id == "T24") {
        const auto d = triples_from_labeling(e.labeling);
        return building_invariant(develop_two_ball(std::get<TrianglePresentation>(d)));
      }
    throw std::logic_error("embedded table lacks T24");
  }();
  return cert;
}

BuildingClassification classify_buildings(const std::vector<TrianglePresentation>& ks, int workers) {
  BuildingClassification out;
  out.invariants.resize(ks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < ks.size();)
      out.invariants[i] = building_invariant(develop_two_ball(ks[i]));
  };
  if (std::max(1, workers) == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  const auto& one = class_one_invariant();
  const canon::Certificate* two = nullptr;
  std::vector<std::size_t> surplus;
  std::vector<const canon::Certificate*> seen_surplus;
  out.building.resize(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto& c = out.invariants[i];
    if (c == one) {
      out.building[i] = 1;
    } else if (!two || c == *two) {
      two = &c;
      out.building[i] = 2;
    } else {
      const bool fresh = std::none_of(seen_surplus.begin(), seen_surplus.end(), [&](auto* p) { return *p == c; });
      if (fresh) {
        seen_surplus.push_back(&c);
        surplus.push_back(i);
      }
    }
  }
  if (!surplus.empty()) {
    std::string msg = "building invariant takes more than two values; first surplus input index " +
                      std::to_string(surplus.front());
    throw MoreThanTwoClasses(msg, std::move(surplus));
  }
  return out;
}

}  // namespace tribuild::building
