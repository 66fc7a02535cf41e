#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace oracle {

std::uint64_t brute_canonical_code(const SmallGraph& g) {
  bool adj[8][8] = {};
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = true;
  std::vector<int> q(g.n);
  std::iota(q.begin(), q.end(), 0);
  std::uint64_t best = ~0ull;
  do {
    std::uint64_t code = 0;
    for (int i = 0; i < g.n; ++i) code = code << 2 | static_cast<std::uint64_t>(g.colors[q[i]]);
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j) code = code << 1 | (adj[q[i]][q[j]] ? 1u : 0u);
    best = std::min(best, code);
  } while (std::next_permutation(q.begin(), q.end()));
  return best;
}

bool brute_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  return a.n == b.n && brute_canonical_code(a) == brute_canonical_code(b);
}

std::vector<std::array<int, 3>> gq22_lines() {
  std::map<std::pair<int, int>, int> pair_id;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) pair_id[{i, j}] = static_cast<int>(pair_id.size());
  std::vector<std::array<int, 3>> lines;
  // 1 is matched with a, the remaining four split into two pairs
  for (int a = 2; a <= 6; ++a) {
    std::vector<int> rest;
    for (int x = 2; x <= 6; ++x)
      if (x != a) rest.push_back(x);
    for (int k = 1; k < 4; ++k) {
      std::vector<int> other;
      for (int t = 1; t < 4; ++t)
        if (t != k) other.push_back(rest[t]);
      std::array<int, 3> line{pair_id[{1, a}], pair_id[{rest[0], rest[k]}], pair_id[{other[0], other[1]}]};
      std::sort(line.begin(), line.end());
      lines.push_back(line);
    }
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

namespace {

struct Incidence {
  std::vector<std::array<int, 3>> lines = gq22_lines();
  std::set<std::array<int, 3>> line_set{lines.begin(), lines.end()};
  std::vector<std::vector<int>> lines_of_point = [this] {
    std::vector<std::vector<int>> out(15);
    for (int l = 0; l < 15; ++l)
      for (int p : lines[l]) out[p].push_back(l);
    return out;
  }();
  bool collinear(int p, int q) const {
    for (int l : lines_of_point[p])
      if (std::count(lines[l].begin(), lines[l].end(), q)) return true;
    return false;
  }
  bool meet(int l, int m) const {
    for (int p : lines[l])
      if (std::count(lines[m].begin(), lines[m].end(), p)) return true;
    return false;
  }
};

void collineations(const Incidence& g, std::array<int, 15>& img, int p, std::uint32_t used, long& count) {
  if (p == 15) {
    ++count;
    return;
  }
  for (int x = 0; x < 15; ++x) {
    if (used >> x & 1u) continue;
    img[p] = x;
    bool ok = true;
    for (int q = 0; q < p && ok; ++q) ok = g.collinear(p, q) == g.collinear(x, img[q]);
    for (int l : g.lines_of_point[p]) {
      const auto& line = g.lines[l];
      if (*std::max_element(line.begin(), line.end()) != p) continue;
      std::array<int, 3> im{img[line[0]], img[line[1]], img[line[2]]};
      std::sort(im.begin(), im.end());
      if (!g.line_set.count(im)) ok = false;
    }
    if (ok) collineations(g, img, p + 1, used | 1u << x, count);
  }
}

void dualities(const Incidence& g, std::array<int, 15>& img, int p, std::uint32_t used, long& count) {
  if (p == 15) {
    ++count;
    return;
  }
  for (int x = 0; x < 15; ++x) {
    if (used >> x & 1u) continue;
    img[p] = x;
    bool ok = true;
    for (int q = 0; q < p && ok; ++q) ok = g.collinear(p, q) == g.meet(x, img[q]);
    for (int l : g.lines_of_point[p]) {
      const auto& line = g.lines[l];
      if (*std::max_element(line.begin(), line.end()) != p) continue;
      int common = 0;
      for (int q = 0; q < 15; ++q) {
        int hits = 0;
        for (int v : line)
          for (int t : g.lines[img[v]]) hits += t == q;
        if (hits == 3) ++common;
      }
      if (common != 1) ok = false;
    }
    if (ok) dualities(g, img, p + 1, used | 1u << x, count);
  }
}

std::array<int, 3> min_rotation(std::array<int, 3> t) {
  std::array<int, 3> best = t;
  for (int k = 0; k < 2; ++k) {
    std::rotate(t.begin(), t.begin() + 1, t.end());
    best = std::min(best, t);
  }
  return best;
}

struct Slots {
  std::array<unsigned, 15> y{};  // points of the line labeled a
  int id[15][15];
  std::vector<std::pair<int, int>> slot;

  explicit Slots(const std::array<int, 15>& row_label) {
    const auto lines = gq22_lines();
    for (int r = 0; r < 15; ++r)
      for (int p : lines[r]) y[row_label[r]] |= 1u << p;
    for (int a = 0; a < 15; ++a)
      for (int b = 0; b < 15; ++b) {
        id[a][b] = -1;
        if (y[a] >> b & 1u) {
          id[a][b] = static_cast<int>(slot.size());
          slot.emplace_back(a, b);
        }
      }
  }
};

void cover(const Slots& s, std::uint64_t covered, std::vector<std::array<int, 3>>& cur,
           std::vector<std::vector<std::array<int, 3>>>& out, int limit) {
  if (static_cast<int>(out.size()) >= limit) return;
  const std::uint64_t full = (1ull << s.slot.size()) - 1;
  if (covered == full) {
    auto sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(sorted);
    return;
  }
  int first = 0;
  while (covered >> first & 1u) ++first;
  const auto [a, b] = s.slot[first];
  for (int c = 0; c < 15; ++c) {
    if (!(s.y[b] >> c & 1u) || !(s.y[c] >> a & 1u)) continue;
    std::set<int> ids{s.id[a][b], s.id[b][c], s.id[c][a]};
    std::uint64_t mask = 0;
    for (int i : ids) mask |= 1ull << i;
    if (mask & covered) continue;
    cur.push_back(min_rotation({a, b, c}));
    cover(s, covered | mask, cur, out, limit);
    cur.pop_back();
  }
}

struct RowOrder {
  std::vector<std::array<int, 3>> lines = gq22_lines();
  std::array<int, 15> row_label{};
  std::array<unsigned, 15> y{};
  std::array<bool, 15> known{};
  std::vector<RowOrderResult> out;

  bool feasible() const {
    for (int a = 0; a < 15; ++a) {
      if (!known[a]) continue;
      for (int b = 0; b < 15; ++b) {
        if (!(y[a] >> b & 1u) || !known[b]) continue;
        bool any = false;
        for (int c = 0; c < 15 && !any; ++c)
          if (y[b] >> c & 1u) any = !known[c] || (y[c] >> a & 1u);
        if (!any) return false;
      }
    }
    return true;
  }

  void run(int r, std::uint32_t used) {
    if (r == 15) {
      const auto covers = exact_covers(row_label, 2);
      if (covers.size() == 1) out.push_back({row_label, covers[0]});
      return;
    }
    for (int a = 0; a < 15; ++a) {
      if (used >> a & 1u) continue;
      place(r, a);
      if (feasible()) run(r + 1, used | 1u << a);
      unplace(a);
    }
  }

  void place(int r, int a) {
    row_label[r] = a;
    known[a] = true;
    y[a] = 0;
    for (int p : lines[r]) y[a] |= 1u << p;
  }
  void unplace(int a) {
    known[a] = false;
    y[a] = 0;
  }
};

long long det(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long s = 0;
  for (int j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<long long>> minor;
    for (int i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (int k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    s += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return s;
}

void subsets(int n, int k, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

long count_collineations() {
  Incidence g;
  std::array<int, 15> img{};
  long count = 0;
  collineations(g, img, 0, 0, count);
  return count;
}

long count_dualities() {
  Incidence g;
  std::array<int, 15> img{};
  long count = 0;
  dualities(g, img, 0, 0, count);
  return count;
}

std::vector<std::vector<std::array<int, 3>>> exact_covers(const std::array<int, 15>& row_label, int limit) {
  Slots s(row_label);
  std::vector<std::array<int, 3>> cur;
  std::vector<std::vector<std::array<int, 3>>> out;
  cover(s, 0, cur, out, limit);
  return out;
}

std::vector<RowOrderResult> row_order_enumerate(const std::vector<int>& prefix) {
  RowOrder search;
  std::uint32_t used = 0;
  for (int r = 0; r < static_cast<int>(prefix.size()); ++r) {
    search.place(r, prefix[r]);
    used |= 1u << prefix[r];
  }
  if (search.feasible()) search.run(static_cast<int>(prefix.size()), used);
  std::sort(search.out.begin(), search.out.end(),
            [](const auto& x, const auto& y) { return x.row_label < y.row_label; });
  return search.out;
}

std::vector<long long> determinantal_divisors(const std::vector<std::vector<long long>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<long long> out;
  long long prev = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    long long g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<long long>> sub(k, std::vector<long long>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        g = std::gcd(g, det(sub));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

namespace {

using Word = std::vector<int>;  // letters +-(1..15)

Word reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

std::uint32_t encode(const Word& w) {
  std::uint32_t c = static_cast<std::uint32_t>(w.size());
  for (int x : w) c = c * 32 + static_cast<std::uint32_t>(x + 16);
  return c;
}

}  // namespace

WordBall cayley_ball(const std::vector<std::array<int, 3>>& triples) {
  std::set<std::array<int, 3>> rels;
  for (const auto& t : triples) {
    std::array<int, 3> fwd{t[0] + 1, t[1] + 1, t[2] + 1};
    std::array<int, 3> inv{-fwd[2], -fwd[1], -fwd[0]};
    for (auto r : {fwd, inv})
      for (int k = 0; k < 3; ++k) {
        rels.insert(r);
        std::rotate(r.begin(), r.begin() + 1, r.end());
      }
  }
  std::vector<int> gens;
  for (int i = 1; i <= 15; ++i) gens.push_back(i);
  for (int i = 1; i <= 15; ++i) gens.push_back(-i);

  std::vector<Word> words{{}};
  for (std::size_t len = 0; len < 3; ++len) {
    const std::size_t n = words.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (words[i].size() != len) continue;
      for (int x : gens)
        if (words[i].empty() || words[i].back() != -x) {
          auto w = words[i];
          w.push_back(x);
          words.push_back(w);
        }
    }
  }
  std::unordered_map<std::uint32_t, int> index;
  for (int i = 0; i < static_cast<int>(words.size()); ++i) index[encode(words[i])] = i;
  std::vector<int> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  auto try_unite = [&](int i, const Word& v) {
    const auto r = reduce(v);
    if (r.size() <= 3) unite(i, index.at(encode(r)));
  };
  for (int i = 0; i < static_cast<int>(words.size()); ++i) {
    const auto& w = words[i];
    for (const auto& [p, q, s] : rels) {
      for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] == p && w[k + 1] == q) {
          Word v(w.begin(), w.begin() + k);
          v.push_back(-s);
          v.insert(v.end(), w.begin() + k + 2, w.end());
          try_unite(i, v);
        }
      for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k] == -s) {
          Word v(w.begin(), w.begin() + k);
          v.push_back(p);
          v.push_back(q);
          v.insert(v.end(), w.begin() + k + 1, w.end());
          try_unite(i, v);
        }
    }
  }
  // words are generated by length, so the first word of a class is shortest
  std::map<int, int> vertex_of_class;
  WordBall ball;
  std::vector<int> rep_word;
  for (int i = 0; i < static_cast<int>(words.size()); ++i) {
    const int c = find(i);
    if (words[i].size() > 2 || vertex_of_class.count(c)) continue;
    vertex_of_class[c] = ball.vertices++;
    ball.distance.push_back(static_cast<int>(words[i].size()));
    rep_word.push_back(i);
  }
  auto vertex = [&](const Word& w) { return vertex_of_class.at(find(index.at(encode(reduce(w))))); };

  std::set<std::pair<int, int>> edges;
  std::set<std::array<int, 3>> faces;
  for (int v = 0; v < ball.vertices; ++v) {
    if (ball.distance[v] > 1) continue;
    const auto& w = words[rep_word[v]];
    for (int x : gens) {
      auto wx = w;
      wx.push_back(x);
      const int u = vertex(wx);
      edges.insert({std::min(u, v), std::max(u, v)});
    }
    for (const auto& [p, q, s] : rels) {
      auto wp = w;
      wp.push_back(p);
      auto wpq = wp;
      wpq.push_back(q);
      std::array<int, 3> f{v, vertex(wp), vertex(wpq)};
      std::sort(f.begin(), f.end());
      faces.insert(f);
    }
  }
  for (const auto& f : faces)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) edges.insert({f[i], f[j]});
  ball.edges.assign(edges.begin(), edges.end());
  ball.faces.assign(faces.begin(), faces.end());
  return ball;
}

}  // namespace oracle
