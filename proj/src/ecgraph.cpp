#include "ortk/ecgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

#include "ortk/error.hpp"

namespace ortk {

int ColoredGraph::add_vertex(std::string label) {
  vertex_labels.push_back(std::move(label));
  adj_.emplace_back();
  return num_vertices() - 1;
}

int ColoredGraph::add_color(std::string label) {
  color_labels.push_back(std::move(label));
  return num_colors() - 1;
}

int ColoredGraph::add_edge(int u, int v, int c) {
  for (auto [e, w] : incident(u))
    if (w == v && edges[static_cast<std::size_t>(e)].c == c) return e;
  edges.push_back({u, v, c});
  int id = num_edges() - 1;
  adj_[static_cast<std::size_t>(u)].emplace_back(id, v);
  if (u != v) adj_[static_cast<std::size_t>(v)].emplace_back(id, u);
  return id;
}

int ColoredGraph::other(int e, int v) const {
  const Edge& x = edges[static_cast<std::size_t>(e)];
  return x.u == v ? x.v : x.u;
}

bool ColoredGraph::has_loops() const {
  return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.u == e.v; });
}

int ColoredGraph::find_vertex(const std::string& label) const {
  auto it = std::find(vertex_labels.begin(), vertex_labels.end(), label);
  return it == vertex_labels.end() ? -1 : static_cast<int>(it - vertex_labels.begin());
}

int ColoredGraph::find_color(const std::string& label) const {
  auto it = std::find(color_labels.begin(), color_labels.end(), label);
  return it == color_labels.end() ? -1 : static_cast<int>(it - color_labels.begin());
}

std::vector<int> ColoredGraph::distances_from(int s) const {
  std::vector<int> d(static_cast<std::size_t>(num_vertices()), -1);
  std::deque<int> q{s};
  d[static_cast<std::size_t>(s)] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (auto [e, w] : incident(v))
      if (d[static_cast<std::size_t>(w)] < 0) {
        d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(v)] + 1;
        q.push_back(w);
      }
  }
  return d;
}

bool ColoredGraph::connected() const {
  if (num_vertices() == 0) return true;
  auto d = distances_from(0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

void validate_walk(const ColoredGraph& g, const Walk& w) {
  if (w.vertices.size() != w.edges.size() + 1) throw Error(ErrorKind::InvalidWalk, "vertex/edge count mismatch");
  for (int v : w.vertices)
    if (v < 0 || v >= g.num_vertices()) throw Error(ErrorKind::InvalidWalk, "unknown vertex");
  for (std::size_t k = 0; k < w.edges.size(); ++k) {
    int e = w.edges[k];
    if (e < 0 || e >= g.num_edges()) throw Error(ErrorKind::InvalidWalk, "unknown edge");
    const Edge& x = g.edges[static_cast<std::size_t>(e)];
    int a = w.vertices[k], b = w.vertices[k + 1];
    if (!((x.u == a && x.v == b) || (x.u == b && x.v == a)))
      throw Error(ErrorKind::InvalidWalk, "edge " + std::to_string(e) + " does not join step " + std::to_string(k));
  }
}

Walk walk_from_vertices(const ColoredGraph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) throw Error(ErrorKind::InvalidWalk, "empty vertex sequence");
  Walk w = Walk::at(vertices.front());
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    int found = -1, count = 0;
    for (auto [e, x] : g.incident(vertices[k - 1]))
      if (x == vertices[k]) {
        found = e;
        ++count;
      }
    if (count != 1)
      throw Error(ErrorKind::InvalidWalk, g.vertex_labels.at(static_cast<std::size_t>(vertices[k - 1])) + " and " +
                                              g.vertex_labels.at(static_cast<std::size_t>(vertices[k])) +
                                              (count ? " are joined by several edges" : " are not adjacent"));
    w.push(found, vertices[k]);
  }
  return w;
}

bool is_rainbow(const ColoredGraph& g, const Walk& w) {
  std::vector<char> seen(static_cast<std::size_t>(g.num_colors()), 0);
  for (int e : w.edges) {
    auto c = static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].c);
    if (seen[c]) return false;
    seen[c] = 1;
  }
  return true;
}

bool is_shortest(const ColoredGraph& g, const Walk& w) {
  int d = g.distances_from(w.start())[static_cast<std::size_t>(w.end())];
  if (d < 0) throw Error(ErrorKind::DisconnectedEndpoints, "no path between walk endpoints");
  return d == w.length();
}

Quotient quotient_by_colors(const ColoredGraph& g, const std::set<int>& colors) {
  std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& e : g.edges)
    if (colors.count(e.c)) {
      int a = root(e.u), b = root(e.v);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  Quotient q;
  q.graph.color_labels = g.color_labels;
  q.vertex_map.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  std::map<int, int> class_of_root;
  std::vector<std::vector<int>> members;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int r = root(v);
    auto [it, fresh] = class_of_root.emplace(r, static_cast<int>(members.size()));
    if (fresh) members.emplace_back();
    members[static_cast<std::size_t>(it->second)].push_back(v);
    q.vertex_map[static_cast<std::size_t>(v)] = it->second;
  }
  for (const auto& m : members) {
    std::string label;
    for (int v : m) label += (label.empty() ? "" : "|") + g.vertex_labels[static_cast<std::size_t>(v)];
    q.graph.add_vertex(m.size() > 1 ? "{" + label + "}" : label);
  }
  for (const auto& e : g.edges) {
    if (colors.count(e.c)) continue;
    int a = q.vertex_map[static_cast<std::size_t>(e.u)], b = q.vertex_map[static_cast<std::size_t>(e.v)];
    int id = q.graph.add_edge(std::min(a, b), std::max(a, b), e.c);
    if (a == b && std::find(q.loops.begin(), q.loops.end(), id) == q.loops.end()) q.loops.push_back(id);
  }
  return q;
}

namespace {

using PairColors = std::vector<std::map<int, std::vector<int>>>;

PairColors pair_colors(const ColoredGraph& g) {
  PairColors out(static_cast<std::size_t>(g.num_vertices()));
  for (const auto& e : g.edges) {
    out[static_cast<std::size_t>(e.u)][e.v].push_back(e.c);
    if (e.u != e.v) out[static_cast<std::size_t>(e.v)][e.u].push_back(e.c);
  }
  return out;
}

std::vector<int> color_degree_signature(const ColoredGraph& g, int v) {
  std::map<int, int> per;
  for (auto [e, w] : g.incident(v)) ++per[g.edges[static_cast<std::size_t>(e)].c];
  std::vector<int> sig;
  for (auto [c, k] : per) sig.push_back(k);
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::vector<int> color_class_sizes(const ColoredGraph& g) {
  std::vector<int> k(static_cast<std::size_t>(g.num_colors()), 0);
  for (const auto& e : g.edges) ++k[static_cast<std::size_t>(e.c)];
  return k;
}

class IsoSearch {
 public:
  IsoSearch(const ColoredGraph& a, const ColoredGraph& b) : g1_(a), g2_(b), p1_(pair_colors(a)), p2_(pair_colors(b)) {
    for (int v = 0; v < a.num_vertices(); ++v) sig1_.push_back(color_degree_signature(a, v));
    for (int v = 0; v < b.num_vertices(); ++v) sig2_.push_back(color_degree_signature(b, v));
    size1_ = color_class_sizes(a);
    size2_ = color_class_sizes(b);
    vmap_.assign(static_cast<std::size_t>(a.num_vertices()), -1);
    vinv_.assign(static_cast<std::size_t>(b.num_vertices()), -1);
    cmap_.assign(static_cast<std::size_t>(a.num_colors()), -1);
    cinv_.assign(static_cast<std::size_t>(b.num_colors()), -1);
    // BFS order so each vertex after a component root has a mapped neighbour
    std::vector<char> seen(static_cast<std::size_t>(a.num_vertices()), 0);
    for (int s = 0; s < a.num_vertices(); ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      std::deque<int> q{s};
      seen[static_cast<std::size_t>(s)] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        order_.push_back(v);
        for (auto [e, w] : a.incident(v))
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            q.push_back(w);
          }
      }
    }
  }

  std::optional<IsoWitness> run() {
    if (g1_.num_vertices() != g2_.num_vertices() || g1_.num_edges() != g2_.num_edges() ||
        g1_.num_colors() != g2_.num_colors())
      return std::nullopt;
    auto s1 = size1_, s2 = size2_;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
    auto a = sig1_, b = sig2_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
    if (!assign(0)) return std::nullopt;
    IsoWitness w{vmap_, cmap_};
    // colors that label no edge are matched arbitrarily
    for (std::size_t c = 0; c < w.color_map.size(); ++c)
      if (w.color_map[c] < 0)
        for (std::size_t d = 0; d < cinv_.size(); ++d)
          if (cinv_[d] < 0) {
            w.color_map[c] = static_cast<int>(d);
            cinv_[d] = static_cast<int>(c);
            break;
          }
    return w;
  }

 private:
  struct Pending {
    std::vector<int> from;  // g1 colors on a vertex pair
    std::vector<int> to;    // g2 colors on the image pair
  };

  bool assign(std::size_t k) {
    if (k == order_.size()) return true;
    const int x = order_[k];
    std::vector<int> candidates;
    int anchor = -1;
    for (auto [e, w] : g1_.incident(x))
      if (vmap_[static_cast<std::size_t>(w)] >= 0) {
        anchor = w;
        break;
      }
    if (anchor >= 0) {
      for (auto [e, y] : g2_.incident(vmap_[static_cast<std::size_t>(anchor)]))
        if (std::find(candidates.begin(), candidates.end(), y) == candidates.end()) candidates.push_back(y);
    } else {
      for (int y = 0; y < g2_.num_vertices(); ++y) candidates.push_back(y);
    }
    for (int y : candidates) {
      if (vinv_[static_cast<std::size_t>(y)] >= 0) continue;
      if (sig1_[static_cast<std::size_t>(x)] != sig2_[static_cast<std::size_t>(y)]) continue;
      std::vector<Pending> pend;
      if (!collect(x, y, pend)) continue;
      vmap_[static_cast<std::size_t>(x)] = y;
      vinv_[static_cast<std::size_t>(y)] = x;
      if (match(pend, 0, k)) return true;
      vmap_[static_cast<std::size_t>(x)] = -1;
      vinv_[static_cast<std::size_t>(y)] = -1;
    }
    return false;
  }

  // Edge multiplicities between x and already-mapped vertices must agree.
  bool collect(int x, int y, std::vector<Pending>& pend) const {
    std::size_t n1 = 0, n2 = 0;
    for (const auto& [z, cs] : p1_[static_cast<std::size_t>(x)]) {
      int img = z == x ? y : vmap_[static_cast<std::size_t>(z)];
      if (img < 0) continue;
      n1 += cs.size();
      auto it = p2_[static_cast<std::size_t>(y)].find(img);
      if (it == p2_[static_cast<std::size_t>(y)].end() || it->second.size() != cs.size()) return false;
      pend.push_back({cs, it->second});
    }
    for (const auto& [w, cs] : p2_[static_cast<std::size_t>(y)]) {
      if (w == y || vinv_[static_cast<std::size_t>(w)] >= 0) n2 += cs.size();
    }
    return n1 == n2;
  }

  bool bind(int c, int d, std::vector<int>& trail) {
    int& f = cmap_[static_cast<std::size_t>(c)];
    int& r = cinv_[static_cast<std::size_t>(d)];
    if (f == d && r == c) return true;
    if (f >= 0 || r >= 0) return false;
    if (size1_[static_cast<std::size_t>(c)] != size2_[static_cast<std::size_t>(d)]) return false;
    f = d;
    r = c;
    trail.push_back(c);
    return true;
  }

  void unbind(std::vector<int>& trail) {
    for (int c : trail) {
      cinv_[static_cast<std::size_t>(cmap_[static_cast<std::size_t>(c)])] = -1;
      cmap_[static_cast<std::size_t>(c)] = -1;
    }
    trail.clear();
  }

  bool match(const std::vector<Pending>& pend, std::size_t i, std::size_t k) {
    if (i == pend.size()) return assign(k + 1);
    const auto& p = pend[i];
    std::vector<int> perm(p.to.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> trail;
      bool ok = true;
      for (std::size_t j = 0; j < perm.size() && ok; ++j)
        ok = bind(p.from[j], p.to[static_cast<std::size_t>(perm[j])], trail);
      if (ok && match(pend, i + 1, k)) return true;
      unbind(trail);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  const ColoredGraph& g1_;
  const ColoredGraph& g2_;
  PairColors p1_, p2_;
  std::vector<std::vector<int>> sig1_, sig2_;
  std::vector<int> size1_, size2_;
  std::vector<int> order_;
  std::vector<int> vmap_, vinv_, cmap_, cinv_;
};

}  // namespace

std::optional<IsoWitness> colored_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2) {
  IsoSearch search(g1, g2);
  auto w = search.run();
  if (w && !is_iso_witness(g1, g2, *w)) throw std::logic_error("isomorphism search produced a bad witness");
  return w;
}

bool is_iso_witness(const ColoredGraph& g1, const ColoredGraph& g2, const IsoWitness& w) {
  if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges() ||
      g1.num_colors() != g2.num_colors())
    return false;
  auto bijective = [](const std::vector<int>& m, int n) {
    if (static_cast<int>(m.size()) != n) return false;
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int x : m) {
      if (x < 0 || x >= n || hit[static_cast<std::size_t>(x)]) return false;
      hit[static_cast<std::size_t>(x)] = 1;
    }
    return true;
  };
  if (!bijective(w.vertex_map, g1.num_vertices()) || !bijective(w.color_map, g1.num_colors())) return false;
  std::set<std::tuple<int, int, int>> e2;
  for (const auto& e : g2.edges) e2.emplace(std::min(e.u, e.v), std::max(e.u, e.v), e.c);
  for (const auto& e : g1.edges) {
    int a = w.vertex_map[static_cast<std::size_t>(e.u)], b = w.vertex_map[static_cast<std::size_t>(e.v)];
    if (!e2.count({std::min(a, b), std::max(a, b), w.color_map[static_cast<std::size_t>(e.c)]})) return false;
  }
  return true;
}

IsoWitness invert(const IsoWitness& w) {
  IsoWitness r;
  r.vertex_map.assign(w.vertex_map.size(), -1);
  r.color_map.assign(w.color_map.size(), -1);
  for (std::size_t i = 0; i < w.vertex_map.size(); ++i) r.vertex_map[static_cast<std::size_t>(w.vertex_map[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < w.color_map.size(); ++i) r.color_map[static_cast<std::size_t>(w.color_map[i])] = static_cast<int>(i);
  return r;
}

void for_each_shortest_walk(const ColoredGraph& g, int s, const std::function<void(const Walk&)>& f) {
  const auto dist = g.distances_from(s);
  Walk w = Walk::at(s);
  std::function<void()> rec = [&] {
    f(w);
    int v = w.end();
    for (auto [e, x] : g.incident(v)) {
      if (dist[static_cast<std::size_t>(x)] != dist[static_cast<std::size_t>(v)] + 1) continue;
      w.push(e, x);
      rec();
      w.pop();
    }
  };
  rec();
}

void for_each_rainbow_walk(const ColoredGraph& g, int s, const std::function<void(const Walk&)>& f) {
  std::vector<char> used(static_cast<std::size_t>(g.num_colors()), 0);
  Walk w = Walk::at(s);
  std::function<void()> rec = [&] {
    f(w);
    for (auto [e, x] : g.incident(w.end())) {
      auto c = static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].c);
      if (used[c]) continue;
      used[c] = 1;
      w.push(e, x);
      rec();
      w.pop();
      used[c] = 0;
    }
  };
  rec();
}

PropertyReport verify_exchange(const ColoredGraph& g) {
  PropertyReport rep;
  rep.check = "exchange";
  for (int s = 0; s < g.num_vertices(); ++s) {
    const auto dist = g.distances_from(s);
    for_each_shortest_walk(g, s, [&](const Walk& w) {
      ++rep.examined;
      if (!is_rainbow(g, w)) rep.fail(w);
    });
    for_each_rainbow_walk(g, s, [&](const Walk& w) {
      ++rep.examined;
      if (dist[static_cast<std::size_t>(w.end())] != w.length()) rep.fail(w);
    });
  }
  return rep;
}

namespace {

// Is there a walk from `from` to `to` using each color of `pool` exactly once?
bool rainbow_walk_with_colors(const ColoredGraph& g, int from, int to, std::vector<char>& pool, int remaining) {
  if (remaining == 0) return from == to;
  for (auto [e, x] : g.incident(from)) {
    auto c = static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].c);
    if (!pool[c]) continue;
    pool[c] = 0;
    bool ok = rainbow_walk_with_colors(g, x, to, pool, remaining - 1);
    pool[c] = 1;
    if (ok) return true;
  }
  return false;
}

}  // namespace

PropertyReport verify_rainbow_extension(const ColoredGraph& g) {
  PropertyReport rep;
  rep.check = "rainbow-extension";
  std::vector<char> pool(static_cast<std::size_t>(g.num_colors()), 0);
  for (int s = 0; s < g.num_vertices(); ++s) {
    for_each_rainbow_walk(g, s, [&](const Walk& w) {
      if (w.length() < 2) return;
      const int c0 = g.edges[static_cast<std::size_t>(w.edges.front())].c;
      for (auto [e, x] : g.incident(w.end())) {
        if (g.edges[static_cast<std::size_t>(e)].c != c0) continue;
        ++rep.examined;
        for (std::size_t k = 1; k < w.edges.size(); ++k)
          pool[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(w.edges[k])].c)] = 1;
        bool ok = rainbow_walk_with_colors(g, x, w.start(), pool, w.length() - 1);
        std::fill(pool.begin(), pool.end(), 0);
        if (!ok) {
          Walk bad = w;
          bad.push(e, x);
          rep.fail(bad);
        }
      }
    });
  }
  return rep;
}

std::string partition_label(const std::vector<int>& parts) {
  std::string out;
  bool wide = std::any_of(parts.begin(), parts.end(), [](int p) { return p > 9; });
  for (int p : parts) {
    if (p == 0) break;
    if (wide && !out.empty()) out += '.';
    out += std::to_string(p);
  }
  return out.empty() ? "∅" : out;
}

ColoredGraph young_lattice(int m, int n) {
  std::vector<std::vector<int>> shapes;
  std::vector<int> cur(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> gen = [&](int row, int cap) {
    if (row == m) {
      shapes.push_back(cur);
      return;
    }
    for (int p = 0; p <= cap; ++p) {
      cur[static_cast<std::size_t>(row)] = p;
      gen(row + 1, p);
    }
    cur[static_cast<std::size_t>(row)] = 0;
  };
  gen(0, n);
  std::sort(shapes.begin(), shapes.end(), [](const auto& a, const auto& b) {
    int sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
    return sa != sb ? sa < sb : a > b;
  });
  ColoredGraph g;
  std::map<std::vector<int>, int> id;
  for (const auto& s : shapes) id[s] = g.add_vertex(partition_label(s));
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= n; ++c) g.add_color("(" + std::to_string(r) + "," + std::to_string(c) + ")");
  for (const auto& s : shapes)
    for (int r = 0; r < m; ++r) {
      auto t = s;
      ++t[static_cast<std::size_t>(r)];
      if (t[static_cast<std::size_t>(r)] > n) continue;
      if (r > 0 && t[static_cast<std::size_t>(r)] > t[static_cast<std::size_t>(r - 1)]) continue;
      int color = r * n + (t[static_cast<std::size_t>(r)] - 1);
      g.add_edge(id[s], id[t], color);
    }
  return g;
}

ColoredGraph hypercube(int n) {
  ColoredGraph g;
  for (int v = 0; v < (1 << n); ++v) {
    std::string label;
    for (int i = 0; i < n; ++i) label += (v >> i) & 1 ? '1' : '0';
    g.add_vertex(label);
  }
  for (int i = 0; i < n; ++i) g.add_color(std::to_string(i + 1));
  for (int v = 0; v < (1 << n); ++v)
    for (int i = 0; i < n; ++i)
      if (!((v >> i) & 1)) g.add_edge(v, v | (1 << i), i);
  return g;
}

}  // namespace ortk
