#include "tribuild/canon.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include <openssl/evp.h>

namespace tribuild::canon {

// ---------------------------------------------------------------- graph --

ColoredGraph::ColoredGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                           std::vector<int> colors)
    : n_(vertex_count), colors_(std::move(colors)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (vertex_count > kMaxVertices)
    throw SizeBoundExceeded("graph has " + std::to_string(vertex_count) + " vertices, bound is " +
                            std::to_string(kMaxVertices));
  if (colors_.empty()) colors_.assign(n_, 0);
  if (static_cast<int>(colors_.size()) != n_)
    throw std::invalid_argument("color vector size does not match vertex count");

  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not supported");
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  offsets_.assign(n_ + 1, 0);
  for (auto [u, v] : arcs) ++offsets_[u + 1];
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) adjacency_[i] = arcs[i].second;
}

bool ColoredGraph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> ColoredGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

ColoredGraph ColoredGraph::relabeled(std::span<const int> perm) const {
  std::vector<std::pair<int, int>> e;
  e.reserve(edge_count());
  for (auto [u, v] : edges()) e.emplace_back(perm[u], perm[v]);
  std::vector<int> c(n_);
  for (int v = 0; v < n_; ++v) c[perm[v]] = colors_[v];
  return ColoredGraph(n_, e, std::move(c));
}

// ---------------------------------------------------------- certificate --

std::string Certificate::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes_.size() * 2);
  for (auto b : bytes_) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 15]);
  }
  return s;
}

Certificate Certificate::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length certificate hex");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit in certificate");
  };
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  return Certificate(std::move(out));
}

std::string Certificate::digest() const {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes_.data(), bytes_.size(), md, &len, EVP_sha256(), nullptr);
  return Certificate(std::vector<std::uint8_t>(md, md + len)).hex();
}

// ------------------------------------------------------------ partition --

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 31);
}

struct Partition {
  std::vector<int> elem;   // position -> vertex
  std::vector<int> pos;    // vertex -> position
  std::vector<int> start;  // position -> first position of its cell
  std::vector<int> size;   // cell size, valid at cell starts
  int cells = 0;

  int n() const { return static_cast<int>(elem.size()); }
  bool discrete() const { return cells == n(); }
  int cell_of(int v) const { return start[pos[v]]; }

  static Partition from_cells(const CellIndex& cell) {
    const int n = static_cast<int>(cell.size());
    Partition p;
    p.elem.resize(n);
    std::iota(p.elem.begin(), p.elem.end(), 0);
    std::stable_sort(p.elem.begin(), p.elem.end(), [&](int a, int b) { return cell[a] < cell[b]; });
    p.pos.resize(n);
    p.start.resize(n);
    p.size.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      p.pos[p.elem[i]] = i;
      if (i == 0 || cell[p.elem[i]] != cell[p.elem[i - 1]]) {
        p.start[i] = i;
        ++p.cells;
      } else {
        p.start[i] = p.start[i - 1];
      }
      ++p.size[p.start[i]];
    }
    return p;
  }

  CellIndex to_cells() const {
    CellIndex out(n());
    int k = -1;
    for (int i = 0; i < n(); ++i) {
      if (start[i] == i) ++k;
      out[elem[i]] = k;
    }
    return out;
  }

  /// Splits {v} off the front of its cell; returns the new singleton's start.
  int individualize(int v) {
    const int c = cell_of(v);
    const int len = size[c];
    if (len == 1) return c;
    const int pv = pos[v];
    const int u = elem[c];
    elem[c] = v;
    pos[v] = c;
    elem[pv] = u;
    pos[u] = pv;
    size[c] = 1;
    size[c + 1] = len - 1;
    for (int i = c + 1; i < c + len; ++i) start[i] = c + 1;
    ++cells;
    return c;
  }

  /// First largest non-singleton cell.
  int target_cell() const {
    int best = -1, best_size = 1;
    for (int i = 0; i < n(); i += size[i])
      if (size[i] > best_size) {
        best = i;
        best_size = size[i];
      }
    return best;
  }
};

class Refiner {
 public:
  explicit Refiner(const ColoredGraph& g)
      : g_(g), count_(g.vertex_count(), 0), in_queue_(g.vertex_count(), 0) {}

  /// Refines `p` to the coarsest equitable partition reachable from the
  /// given splitter cells; returns a hash of the splitting events.
  std::uint64_t run(Partition& p, const std::vector<int>& splitters) {
    std::uint64_t h = 0x51ed270b2f3a6c1dULL;
    queue_.clear();
    std::size_t head = 0;
    for (int s : splitters)
      if (!in_queue_[s]) {
        in_queue_[s] = 1;
        queue_.push_back(s);
      }

    while (head < queue_.size() && !p.discrete()) {
      const int w = queue_[head++];
      in_queue_[w] = 0;
      wverts_.assign(p.elem.begin() + w, p.elem.begin() + w + p.size[w]);

      touched_.clear();
      for (int v : wverts_)
        for (int u : g_.neighbors(v))
          if (count_[u]++ == 0) touched_.push_back(u);

      std::sort(touched_.begin(), touched_.end(), [&](int a, int b) {
        const int ca = p.cell_of(a), cb = p.cell_of(b);
        return ca != cb ? ca < cb : count_[a] < count_[b];
      });

      for (std::size_t i = 0; i < touched_.size();) {
        const int c = p.cell_of(touched_[i]);
        std::size_t j = i;
        while (j < touched_.size() && p.cell_of(touched_[j]) == c) ++j;
        split_cell(p, c, i, j, w, h);
        i = j;
      }
      for (int u : touched_) count_[u] = 0;
    }
    for (std::size_t i = head; i < queue_.size(); ++i) in_queue_[queue_[i]] = 0;
    return mix(h, static_cast<std::uint64_t>(p.cells));
  }

 private:
  // touched_[lo, hi) are the touched vertices of cell c, sorted by count.
  void split_cell(Partition& p, int c, std::size_t lo, std::size_t hi, int w, std::uint64_t& h) {
    const int len = p.size[c];
    const int t = static_cast<int>(hi - lo);
    if (len == 1) return;
    if (t == len && count_[touched_[lo]] == count_[touched_[hi - 1]]) return;

    // Untouched vertices (count 0) stay in front; touched ones go to the
    // tail in increasing count order.
    int tail = c + len;
    for (std::size_t k = hi; k-- > lo;) {
      const int v = touched_[k];
      --tail;
      const int pv = p.pos[v];
      const int u = p.elem[tail];
      p.elem[tail] = v;
      p.pos[v] = tail;
      p.elem[pv] = u;
      p.pos[u] = pv;
    }
    // The swaps above can disturb the tail order; restore it.
    std::sort(p.elem.begin() + tail, p.elem.begin() + c + len,
              [&](int a, int b) { return count_[a] < count_[b]; });
    for (int i = tail; i < c + len; ++i) p.pos[p.elem[i]] = i;

    frags_.clear();
    if (tail > c) frags_.push_back({c, tail - c, 0});
    for (int i = tail; i < c + len;) {
      int j = i;
      const int key = count_[p.elem[i]];
      while (j < c + len && count_[p.elem[j]] == key) ++j;
      frags_.push_back({i, j - i, key});
      i = j;
    }

    h = mix(h, static_cast<std::uint64_t>(w) << 32 | static_cast<std::uint32_t>(c));
    h = mix(h, frags_.size());
    for (const auto& f : frags_) {
      h = mix(h, static_cast<std::uint64_t>(f.size) << 32 | static_cast<std::uint32_t>(f.key));
      p.size[f.start] = f.size;
      for (int i = f.start; i < f.start + f.size; ++i) p.start[i] = f.start;
    }
    p.cells += static_cast<int>(frags_.size()) - 1;

    if (in_queue_[c]) {
      for (std::size_t k = 1; k < frags_.size(); ++k) push(frags_[k].start);
    } else {
      std::size_t largest = 0;
      for (std::size_t k = 1; k < frags_.size(); ++k)
        if (frags_[k].size > frags_[largest].size) largest = k;
      for (std::size_t k = 0; k < frags_.size(); ++k)
        if (k != largest) push(frags_[k].start);
    }
  }

  void push(int s) {
    if (!in_queue_[s]) {
      in_queue_[s] = 1;
      queue_.push_back(s);
    }
  }

  struct Fragment {
    int start, size, key;
  };

  const ColoredGraph& g_;
  std::vector<int> count_;
  std::vector<char> in_queue_;
  std::vector<int> queue_, wverts_, touched_;
  std::vector<Fragment> frags_;
};

std::vector<int> all_starts(const Partition& p) {
  std::vector<int> s;
  for (int i = 0; i < p.n(); i += p.size[i]) s.push_back(i);
  return s;
}

// ------------------------------------------------------ canonical search --

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const ColoredGraph& g) : g_(g), refiner_(g), n_(g.vertex_count()) {}

  CanonicalLabeling run() {
    Partition p = Partition::from_cells(color_partition(g_));
    trace_.push_back(refiner_.run(p, all_starts(p)));
    search(p, 0);

    CanonicalLabeling out;
    out.canonical_position.assign(n_, 0);
    for (int i = 0; i < n_; ++i) out.canonical_position[best_.elem[i]] = i;
    out.certificate = make_certificate();
    out.generators = std::move(generators_);
    out.stats = stats_;
    out.stats.generators = out.generators.size();
    return out;
  }

 private:
  struct Leaf {
    std::vector<std::uint64_t> trace;
    std::vector<int> elem;
    std::vector<std::uint64_t> edges;
    std::vector<int> path;
  };

  static int compare(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                     std::size_t upto) {
    const std::size_t m = std::min({a.size(), b.size(), upto});
    for (std::size_t i = 0; i < m; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  std::vector<std::uint64_t> leaf_edges(const Partition& p) const {
    std::vector<std::uint64_t> e;
    e.reserve(g_.edge_count());
    for (int u = 0; u < n_; ++u)
      for (int v : g_.neighbors(u))
        if (u < v) {
          std::uint64_t a = p.pos[u], b = p.pos[v];
          if (a > b) std::swap(a, b);
          e.push_back(a << 32 | b);
        }
    std::sort(e.begin(), e.end());
    return e;
  }

  void add_generator(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(n_);
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[from[i]] = to[i];
      identity &= from[i] == to[i];
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  int leaf(const Partition& p, int level) {
    ++stats_.leaves;
    Leaf here{trace_, p.elem, leaf_edges(p), path_};
    if (!have_first_) {
      first_ = here;
      best_ = std::move(here);
      have_first_ = true;
      return level;
    }
    if (here.trace == first_.trace && here.edges == first_.edges) {
      add_generator(first_.elem, here.elem);
      return static_cast<int>(common_prefix(path_, first_.path));
    }
    int cmp = compare(here.trace, best_.trace, SIZE_MAX);
    if (cmp == 0) cmp = here.edges < best_.edges ? -1 : (here.edges == best_.edges ? 0 : 1);
    if (cmp == 0) {
      add_generator(best_.elem, here.elem);
      return static_cast<int>(common_prefix(path_, best_.path));
    }
    if (cmp < 0) best_ = std::move(here);
    return level;
  }

  // Orbits of the subgroup generated by known automorphisms that fix the
  // current path pointwise.
  UnionFind stabilizer_orbits() const {
    UnionFind uf(n_);
    for (const auto& g : generators_) {
      bool fixes = true;
      for (int v : path_)
        if (g[v] != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, g[v]);
    }
    return uf;
  }

  int search(const Partition& p, int level) {
    ++stats_.nodes;
    if (have_first_ && compare(trace_, best_.trace, trace_.size()) > 0) return level;
    if (p.discrete()) return leaf(p, level);

    const int c = p.target_cell();
    std::vector<int> cell(p.elem.begin() + c, p.elem.begin() + c + p.size[c]);
    std::sort(cell.begin(), cell.end());

    std::vector<int> explored;
    std::size_t orbit_gens = SIZE_MAX;
    UnionFind orbits(0);
    for (int w : cell) {
      if (!explored.empty()) {
        if (orbit_gens != generators_.size()) {
          orbits = stabilizer_orbits();
          orbit_gens = generators_.size();
        }
        const int rw = orbits.find(w);
        bool equivalent = false;
        for (int e : explored)
          if (orbits.find(e) == rw) {
            equivalent = true;
            break;
          }
        if (equivalent) continue;
      }
      Partition child = p;
      const int s = child.individualize(w);
      path_.push_back(w);
      trace_.push_back(mix(refiner_.run(child, {s}), static_cast<std::uint64_t>(s)));
      const int r = search(child, level + 1);
      trace_.pop_back();
      path_.pop_back();
      explored.push_back(w);
      if (r < level) return r;
    }
    return level;
  }

  Certificate make_certificate() const {
    std::vector<std::uint8_t> bytes;
    auto put = [&](std::uint32_t x) {
      for (int k = 0; k < 4; ++k) bytes.push_back(static_cast<std::uint8_t>(x >> (8 * k)));
    };
    put(static_cast<std::uint32_t>(n_));
    for (int i = 0; i < n_; ++i) put(static_cast<std::uint32_t>(g_.color(best_.elem[i])));
    put(static_cast<std::uint32_t>(best_.edges.size()));
    for (auto e : best_.edges) {
      put(static_cast<std::uint32_t>(e >> 32));
      put(static_cast<std::uint32_t>(e & 0xffffffffu));
    }
    return Certificate(std::move(bytes));
  }

  const ColoredGraph& g_;
  Refiner refiner_;
  int n_;
  bool have_first_ = false;
  Leaf first_, best_;
  std::vector<std::vector<int>> generators_;
  std::vector<int> path_;
  std::vector<std::uint64_t> trace_;
  SearchStats stats_;
};

}  // namespace

// ------------------------------------------------------------ public API --

CellIndex color_partition(const ColoredGraph& g) {
  std::vector<int> values = g.colors();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  CellIndex out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    out[v] = static_cast<int>(std::lower_bound(values.begin(), values.end(), g.color(v)) - values.begin());
  return out;
}

CellIndex refine(const ColoredGraph& g, const CellIndex& partition) {
  if (static_cast<int>(partition.size()) != g.vertex_count())
    throw std::invalid_argument("partition size does not match vertex count");
  if (g.vertex_count() == 0) return {};
  Partition p = Partition::from_cells(partition);
  Refiner r(g);
  r.run(p, all_starts(p));
  return p.to_cells();
}

CanonicalLabeling canonical_labeling(const ColoredGraph& g) {
  if (g.vertex_count() == 0) {
    CanonicalLabeling out;
    out.certificate = Certificate(std::vector<std::uint8_t>(8, 0));
    return out;
  }
  return CanonicalSearch(g).run();
}

Certificate canonical_form(const ColoredGraph& g) { return canonical_labeling(g).certificate; }

bool are_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto profile = [](const ColoredGraph& g) {
    std::vector<std::pair<int, int>> p(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) p[v] = {g.color(v), g.degree(v)};
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(a) != profile(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<int>> partition_by_isomorphism(const std::vector<ColoredGraph>& graphs,
                                                       int workers) {
  std::vector<Certificate> certs(graphs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < graphs.size();) certs[i] = canonical_form(graphs[i]);
  };
  workers = std::max(1, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  std::map<Certificate, std::vector<int>> classes;
  for (std::size_t i = 0; i < graphs.size(); ++i) classes[certs[i]].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  out.reserve(classes.size());
  for (auto& [cert, members] : classes) out.push_back(std::move(members));
  return out;
}

void enumerate_isomorphisms(const ColoredGraph& a, const ColoredGraph& b,
                            const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return;
  std::vector<int> ca = a.colors(), cb = b.colors();
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return;
  if (n == 0) {
    visit({});
    return;
  }

  Refiner ra(a), rb(b);
  Partition pa = Partition::from_cells(color_partition(a));
  Partition pb = Partition::from_cells(color_partition(b));
  if (ra.run(pa, all_starts(pa)) != rb.run(pb, all_starts(pb))) return;

  bool stop = false;
  std::function<void(const Partition&, const Partition&)> rec = [&](const Partition& x,
                                                                    const Partition& y) {
    if (stop) return;
    if (x.discrete()) {
      std::vector<int> map(n);
      for (int i = 0; i < n; ++i) map[x.elem[i]] = y.elem[i];
      for (int u = 0; u < n; ++u) {
        if (a.color(u) != b.color(map[u])) return;
        for (int v : a.neighbors(u))
          if (!b.has_edge(map[u], map[v])) return;
      }
      if (!visit(map)) stop = true;
      return;
    }
    const int c = x.target_cell();
    const int v = x.elem[c];
    std::vector<int> cell(y.elem.begin() + c, y.elem.begin() + c + y.size[c]);
    std::sort(cell.begin(), cell.end());
    for (int w : cell) {
      Partition x2 = x, y2 = y;
      const int sx = x2.individualize(v);
      const int sy = y2.individualize(w);
      if (ra.run(x2, {sx}) != rb.run(y2, {sy})) continue;
      rec(x2, y2);
      if (stop) return;
    }
  };
  rec(pa, pb);
}

}  // namespace tribuild::canon
