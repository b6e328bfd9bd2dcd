#include "ortk/orgraph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ortk/text.hpp"

namespace ortk {

int ORGraph::color_for(const RootSystem& rs, int root) const {
  int c = color_of_root[static_cast<std::size_t>(root)];
  return c >= 0 ? c : color_of_root[static_cast<std::size_t>(rs.negate(root))];
}

ORGraph build_or_graph(const RootSystem& rs) {
  ORGraph og;
  og.borels = enumerate_borels(rs);
  og.pure = pure_positive_roots(rs, og.borels.borels);
  const Borel& ref = og.borels.borels.front();

  std::vector<char> pure(static_cast<std::size_t>(rs.size()), 0);
  for (int id : og.pure.all) pure[static_cast<std::size_t>(id)] = 1;
  og.color_of_root.assign(static_cast<std::size_t>(rs.size()), -1);
  for (int id = 0; id < rs.size(); ++id) {
    if (!ref.is_positive(id) || pure[static_cast<std::size_t>(id)]) continue;
    og.color_of_root[static_cast<std::size_t>(id)] = og.graph.add_color(root_name(rs, id));
    og.root_of_color.push_back(id);
  }

  for (std::size_t k = 0; k < og.borels.borels.size(); ++k) {
    const Borel& b = og.borels.borels[k];
    for (int i = 1; i <= b.theta(); ++i)
      if (is_isotropic_simple(rs, b, i) && pure[static_cast<std::size_t>(b.simple_root(i))])
        throw std::logic_error("an isotropic pure root is simple");
    og.graph.add_vertex(borel_label(rs, b, static_cast<int>(k)));
  }
  for (const auto& e : og.borels.edges) {
    int a = og.borels.borels[static_cast<std::size_t>(e.from)].simple_root(e.index);
    int c = og.color_for(rs, a);
    if (c < 0) throw std::logic_error("reflection root is not a color");
    og.graph.add_edge(e.from, e.to, c);
  }
  return og;
}

std::set<int> atypical_colors(const RootSystem& rs, const ORGraph& og, const Weight& lambda) {
  std::set<int> d;
  for (int c = 0; c < og.graph.num_colors(); ++c) {
    int r = og.root_of_color[static_cast<std::size_t>(c)];
    if (rs.root(r).isotropic && !rs.orthogonal(lambda, rs.vec(r))) d.insert(c);
  }
  return d;
}

ORLambda build_or_lambda(const RootSystem& rs, const ORGraph& og, const Weight& lambda) {
  ORLambda out{lambda, atypical_colors(rs, og, lambda), {}};
  out.quotient = quotient_by_colors(og.graph, out.atypical);
  return out;
}

bool rbtriv_check(const RootSystem& rs, const ORGraph& og, const Weight& lambda) {
  bool single = build_or_lambda(rs, og, lambda).quotient.graph.num_vertices() == 1;
  bool direct = true;
  for (int id : rs.delta_iso) {
    if (std::binary_search(og.pure.isotropic.begin(), og.pure.isotropic.end(), id) ||
        std::binary_search(og.pure.isotropic.begin(), og.pure.isotropic.end(), rs.negate(id)))
      continue;
    if (rs.orthogonal(lambda, rs.vec(id))) direct = false;
  }
  if (single != direct) throw std::logic_error("single-point criterion disagrees with the inner-product test");
  return single;
}

WalkHomVerdict walk_hom_oracle(const RootSystem& rs, const ORGraph& og, const ORLambda& orl, const Walk& w) {
  validate_walk(og.graph, w);
  const Quotient& q = orl.quotient;
  WalkHomVerdict v;
  v.projected = Walk::at(q.vertex_map[static_cast<std::size_t>(w.start())]);
  std::vector<int> roots;
  for (std::size_t k = 0; k < w.edges.size(); ++k) {
    const Edge& e = og.graph.edges[static_cast<std::size_t>(w.edges[k])];
    if (orl.atypical.count(e.c)) continue;
    int a = q.vertex_map[static_cast<std::size_t>(w.vertices[k])];
    int b = q.vertex_map[static_cast<std::size_t>(w.vertices[k + 1])];
    int found = -1;
    for (auto [qe, x] : q.graph.incident(a))
      if (x == b && q.graph.edges[static_cast<std::size_t>(qe)].c == e.c) found = qe;
    if (found < 0) throw std::logic_error("quotient lost an edge");
    v.projected.push(found, b);
    roots.push_back(og.root_of_color[static_cast<std::size_t>(e.c)]);
  }
  v.nonzero = is_rainbow(q.graph, v.projected);
  if (v.nonzero) {
    const Borel& start = og.borel(w.start());
    for (int r : roots) v.monomial.push_back(start.is_positive(r) ? r : rs.negate(r));
  }
  return v;
}

WalkHomVerdict walk_hom_oracle(const RootSystem& rs, const ORGraph& og, const Weight& lambda, const Walk& w) {
  return walk_hom_oracle(rs, og, build_or_lambda(rs, og, lambda), w);
}

IntersectionKind image_intersection_kind(const RootSystem& rs, const Borel& b, const Weight& lambda, int i, int j) {
  if (i == j) throw Error(ErrorKind::PreconditionViolated, "indices must differ");
  for (int k : {i, j}) {
    if (!is_isotropic_simple(rs, b, k))
      throw Error(ErrorKind::PreconditionViolated, "index " + std::to_string(k) + " is not isotropic simple");
    if (!rs.orthogonal(lambda, rs.vec(b.simple_root(k))))
      throw Error(ErrorKind::PreconditionViolated, "lambda is not orthogonal to simple root " + std::to_string(k));
  }
  IntersectionKind out;
  out.trivial = !rs.orthogonal(rs.vec(b.simple_root(i)), rs.vec(b.simple_root(j)));
  if (!out.trivial) out.hypercubic_image = odd_reflect(rs, odd_reflect(rs, b, j), i);
  return out;
}

std::vector<std::set<int>> semibrick_index_sets(const RootSystem& rs, const ORGraph& og, const ORLambda& orl,
                                                int bbar) {
  const Quotient& q = orl.quotient;
  const int target = q.vertex_map[static_cast<std::size_t>(bbar)];
  std::vector<char> used(static_cast<std::size_t>(q.graph.num_colors()), 0);
  std::function<bool(int)> reaches = [&](int v) {
    if (v == target) return true;
    for (auto [e, x] : q.graph.incident(v)) {
      auto c = static_cast<std::size_t>(q.graph.edges[static_cast<std::size_t>(e)].c);
      if (used[c]) continue;
      used[c] = 1;
      bool ok = reaches(x);
      used[c] = 0;
      if (ok) return true;
    }
    return false;
  };

  std::vector<std::set<int>> out(og.borels.borels.size());
  for (std::size_t v = 0; v < out.size(); ++v) {
    const Borel& b = og.borels.borels[v];
    for (int i = 1; i <= b.theta(); ++i) {
      if (!is_isotropic_simple(rs, b, i)) continue;
      int c = og.color_for(rs, b.simple_root(i));
      if (orl.atypical.count(c)) continue;  // r_i b and b are the same class
      used[static_cast<std::size_t>(c)] = 1;
      if (reaches(q.vertex_map[v])) out[v].insert(i);
      used[static_cast<std::size_t>(c)] = 0;
    }
  }
  return out;
}

}  // namespace ortk
