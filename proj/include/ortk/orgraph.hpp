#ifndef ORTK_ORGRAPH_HPP
#define ORTK_ORGRAPH_HPP

#include <optional>
#include <set>
#include <vector>

#include "ortk/ecgraph.hpp"
#include "ortk/rootsys.hpp"

namespace ortk {

struct ORGraph {
  BorelEnumeration borels;       // vertex id = BFS rank
  PureRoots pure;
  ColoredGraph graph;
  std::vector<int> root_of_color;  // root ids, positive for the reference Borel (vertex 0)
  std::vector<int> color_of_root;  // -1 for roots that are not colors

  const Borel& borel(int v) const { return borels.borels[static_cast<std::size_t>(v)]; }
  int color_for(const RootSystem& rs, int root) const;  // accepts either sign
};

ORGraph build_or_graph(const RootSystem& rs);

// D_lambda: isotropic colors pairing nontrivially with lambda.
std::set<int> atypical_colors(const RootSystem& rs, const ORGraph& og, const Weight& lambda);

struct ORLambda {
  Weight lambda;
  std::set<int> atypical;
  Quotient quotient;
};

ORLambda build_or_lambda(const RootSystem& rs, const ORGraph& og, const Weight& lambda);

bool rbtriv_check(const RootSystem& rs, const ORGraph& og, const Weight& lambda);

struct WalkHomVerdict {
  bool nonzero = false;
  std::vector<int> monomial;  // root ids, positive in the start Borel; empty when zero
  Walk projected;             // image in OR(g, lambda) with contracted steps erased
};

WalkHomVerdict walk_hom_oracle(const RootSystem& rs, const ORGraph& og, const ORLambda& orl, const Walk& w);
WalkHomVerdict walk_hom_oracle(const RootSystem& rs, const ORGraph& og, const Weight& lambda, const Walk& w);

struct IntersectionKind {
  bool trivial = false;
  std::optional<Borel> hypercubic_image;  // r_i r_j b when not trivial
};

IntersectionKind image_intersection_kind(const RootSystem& rs, const Borel& b, const Weight& lambda, int i, int j);

// I_b for every vertex b: isotropic simple indices i such that a rainbow path
// r_i b -> b -> ... -> bbar exists in OR(g, lambda).
std::vector<std::set<int>> semibrick_index_sets(const RootSystem& rs, const ORGraph& og, const ORLambda& orl,
                                                int bbar);

}  // namespace ortk

#endif
