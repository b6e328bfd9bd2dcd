#ifndef ORTK_ECGRAPH_HPP
#define ORTK_ECGRAPH_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ortk {

struct Edge {
  int u;
  int v;
  int c;
};

// Undirected edge-colored multigraph. Parallel edges are allowed when their
// colors differ; loops only arise from quotients and are reported by has_loops.
class ColoredGraph {
 public:
  std::vector<std::string> vertex_labels;
  std::vector<std::string> color_labels;
  std::vector<Edge> edges;

  int add_vertex(std::string label);
  int add_color(std::string label);
  // Returns the existing edge id for a duplicate (u, v, c).
  int add_edge(int u, int v, int c);

  int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
  int num_colors() const { return static_cast<int>(color_labels.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  // (edge id, neighbour) pairs.
  const std::vector<std::pair<int, int>>& incident(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int other(int e, int v) const;
  bool has_loops() const;
  int find_vertex(const std::string& label) const;  // -1 if absent
  int find_color(const std::string& label) const;

  std::vector<int> distances_from(int s) const;  // -1 where unreachable
  bool connected() const;

 private:
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

struct Walk {
  std::vector<int> vertices;  // v_0 .. v_t
  std::vector<int> edges;     // e_1 .. e_t

  static Walk at(int v) { return {{v}, {}}; }
  int length() const { return static_cast<int>(edges.size()); }
  int start() const { return vertices.front(); }
  int end() const { return vertices.back(); }
  void push(int e, int v) {
    edges.push_back(e);
    vertices.push_back(v);
  }
  void pop() {
    edges.pop_back();
    vertices.pop_back();
  }
};

void validate_walk(const ColoredGraph& g, const Walk& w);
// Builds a walk from a vertex sequence; consecutive vertices must be joined by
// exactly one edge.
Walk walk_from_vertices(const ColoredGraph& g, const std::vector<int>& vertices);

bool is_rainbow(const ColoredGraph& g, const Walk& w);
bool is_shortest(const ColoredGraph& g, const Walk& w);

struct Quotient {
  ColoredGraph graph;
  std::vector<int> vertex_map;  // old vertex -> class
  std::vector<int> loops;       // edge ids of loops in `graph`
};

Quotient quotient_by_colors(const ColoredGraph& g, const std::set<int>& colors);

struct IsoWitness {
  std::vector<int> vertex_map;  // g1 vertex -> g2 vertex
  std::vector<int> color_map;   // g1 color -> g2 color
};

std::optional<IsoWitness> colored_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2);
bool is_iso_witness(const ColoredGraph& g1, const ColoredGraph& g2, const IsoWitness& w);
IsoWitness invert(const IsoWitness& w);

struct PropertyReport {
  std::string check;
  bool pass = true;
  std::vector<Walk> counterexamples;  // the first kMaxStored failures
  std::size_t failures = 0;
  std::size_t examined = 0;
  static constexpr std::size_t kMaxStored = 1000;

  void fail(const Walk& w) {
    pass = false;
    if (failures++ < kMaxStored) counterexamples.push_back(w);
  }
};

// Calls f on every shortest walk out of s (including the trivial one).
void for_each_shortest_walk(const ColoredGraph& g, int s, const std::function<void(const Walk&)>& f);
// Calls f on every rainbow walk out of s (including the trivial one).
void for_each_rainbow_walk(const ColoredGraph& g, int s, const std::function<void(const Walk&)>& f);

PropertyReport verify_exchange(const ColoredGraph& g);
PropertyReport verify_rainbow_extension(const ColoredGraph& g);

ColoredGraph young_lattice(int m, int n);
ColoredGraph hypercube(int n);
std::string partition_label(const std::vector<int>& parts);

}  // namespace ortk

#endif
