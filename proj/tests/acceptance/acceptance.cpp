// Acceptance run: one PASS/FAIL line per criterion. With an argument N only
// criterion N runs; the exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "ortk/adjusted.hpp"
#include "ortk/atypicality.hpp"
#include "ortk/characters.hpp"
#include "ortk/ecgraph.hpp"
#include "ortk/orgraph.hpp"
#include "ortk/quiver.hpp"
#include "ortk/text.hpp"
#include "ortk/verify.hpp"

using namespace ortk;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      const std::string line = "failed: " + what;
      if (std::find(notes.begin(), notes.end(), line) == notes.end()) notes.push_back(line);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// The pinned sweep: manifest families with their grid, salted by position.
struct SweepItem {
  FamilySpec spec;
  std::set<std::string> checks;
  RootSystem rs;
  ORGraph og;
  std::vector<Weight> grid;
};

std::vector<SweepItem> pinned_sweep() {
  const json manifest = default_manifest();
  std::vector<SweepItem> out;
  int salt = 0;
  for (const auto& item : manifest.at("families")) {
    ++salt;
    SweepItem s{family_from_json(item), {}, {}, {}, {}};
    for (const auto& c : item.value("checks", json::array())) s.checks.insert(c.get<std::string>());
    s.rs = build_root_system(s.spec);
    s.og = build_or_graph(s.rs);
    s.grid = lambda_grid(s.rs, s.og, manifest.at("grid"), salt);
    out.push_back(std::move(s));
  }
  return out;
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Outcome criterion1() {
  Outcome o;
  struct Case {
    FamilySpec spec;
    ColoredGraph reference;
    std::int64_t vertices;
  };
  std::vector<Case> cases;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}})
    cases.push_back({FamilySpec::gl(m, n), young_lattice(m, n), binomial(m + n, m)});
  for (int n = 1; n <= 5; ++n) cases.push_back({FamilySpec::gl11_power(n), hypercube(n), std::int64_t{1} << n});
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}})
    cases.push_back({FamilySpec::osp_b(m, n), young_lattice(m, n), binomial(m + n, m)});
  double worst = 0;
  for (const auto& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    auto og = build_or_graph(build_root_system(c.spec));
    auto w = colored_isomorphic(og.graph, c.reference);
    const double t = seconds_since(t0);
    worst = std::max(worst, t);
    const std::string name = family_name(c.spec);
    o.require(og.graph.num_vertices() == c.vertices, name + " vertex count");
    o.require(w.has_value() && is_iso_witness(og.graph, c.reference, *w), name + " isomorphism");
    o.require(t <= 5.0, name + " within 5 s");
  }
  std::ostringstream s;
  s << cases.size() << " isomorphisms, slowest " << worst << " s";
  o.note(s.str());
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto rs = build_root_system(FamilySpec::d21());
  auto og = build_or_graph(rs);
  const auto& g = og.graph;
  o.require(g.num_vertices() == 4, "four Borels");
  o.require(g.num_edges() == 3 && g.connected(), "tree");
  int centre = -1;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.incident(v).size() == 3) centre = v;
  o.require(centre >= 0, "centre of degree 3");
  if (centre >= 0) o.require(is_zero(weyl_vector(rs, og.borel(centre))), "rho at the centre is 0");
  const Weight rho1 = weyl_vector(rs, standard_borel(rs));
  o.require(rho1 == parse_weight_name(rs, "-d+e1+e2"), "rho of the standard Borel is -d+e1+e2");
  std::vector<std::string> pure = root_names(rs, og.pure.all);
  o.require(std::set<std::string>(pure.begin(), pure.end()) ==
                std::set<std::string>{"2d", "2e1", "2e2", "d+e1+e2"},
            "pure positive roots");
  const int beta = rs.find(parse_weight_name(rs, "d+e1+e2"));
  auto w = simple_even_witness(rs, og, beta, zero_weight(rs.rank()));
  const bool witness_ok = w && w->borel == centre && is_zero(w->gamma);
  if (!witness_ok) {
    auto c = witness_conditions(rs, og.borel(centre), beta, zero_weight(rs.rank()));
    std::ostringstream s;
    s << "witness (centre, 0): outside_cone=" << c.outside_cone << " orthogonal=" << c.orthogonal
      << " multiplicity=" << c.multiplicity;
    o.note(s.str());
  }
  o.require(witness_ok, "simple_even_witness returns (centre, 0)");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const json manifest = default_manifest();
  std::set<std::string> pairs;
  std::size_t entries = 0, failures = 0;
  for (auto group : {CheckGroup::Exchange, CheckGroup::Extension}) {
    auto report = run_verification(manifest, group);
    for (const auto& e : report.entries) {
      ++entries;
      if (e.status != "pass") ++failures;
      if (e.check.rfind("or_lambda.", 0) == 0) pairs.insert(e.params.dump());
    }
  }
  const double t = seconds_since(t0);
  o.require(failures == 0, "zero counterexamples");
  o.require(pairs.size() >= 40, "at least 40 (family, lambda) pairs");
  o.require(t <= 60.0, "sweep within 60 s");
  std::ostringstream s;
  s << entries << " checks over " << pairs.size() << " (family, lambda) pairs in " << t << " s";
  o.note(s.str());
  return o;
}

// Contracts the colors whose roots pair nontrivially with lambda and asks
// whether the projected walk is as short as the distance between its ends.
struct ShortestProjection {
  std::vector<int> cls;
  std::vector<std::vector<int>> adj;
  std::vector<char> contracted;

  ShortestProjection(const RootSystem& rs, const ORGraph& og, const Weight& lambda) {
    const auto& g = og.graph;
    contracted.assign(static_cast<std::size_t>(g.num_colors()), 0);
    for (int c = 0; c < g.num_colors(); ++c) {
      const int r = og.root_of_color[static_cast<std::size_t>(c)];
      contracted[static_cast<std::size_t>(c)] = rs.root(r).isotropic && !rs.orthogonal(lambda, rs.vec(r));
    }
    std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
    };
    for (const auto& e : g.edges)
      if (contracted[static_cast<std::size_t>(e.c)]) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
    cls.resize(parent.size());
    for (std::size_t v = 0; v < parent.size(); ++v) cls[v] = find(static_cast<int>(v));
    adj.assign(parent.size(), {});
    for (const auto& e : g.edges)
      if (!contracted[static_cast<std::size_t>(e.c)]) {
        adj[static_cast<std::size_t>(cls[static_cast<std::size_t>(e.u)])].push_back(cls[static_cast<std::size_t>(e.v)]);
        adj[static_cast<std::size_t>(cls[static_cast<std::size_t>(e.v)])].push_back(cls[static_cast<std::size_t>(e.u)]);
      }
  }

  int distance(int s, int t) const {
    std::vector<int> d(adj.size(), -1);
    std::vector<int> queue{s};
    d[static_cast<std::size_t>(s)] = 0;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (int x : adj[static_cast<std::size_t>(queue[k])])
        if (d[static_cast<std::size_t>(x)] < 0) {
          d[static_cast<std::size_t>(x)] = d[static_cast<std::size_t>(queue[k])] + 1;
          queue.push_back(x);
        }
    return d[static_cast<std::size_t>(t)];
  }

  bool shortest(const ColoredGraph& g, const Walk& w) const {
    int len = 0;
    for (int e : w.edges) len += !contracted[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].c)];
    return len == distance(cls[static_cast<std::size_t>(w.start())], cls[static_cast<std::size_t>(w.end())]);
  }
};

Outcome criterion4() {
  Outcome o;
  {
    auto rs = build_root_system(FamilySpec::gl(2, 2));
    auto og = build_or_graph(rs);
    auto path = [&](std::vector<std::string> labels) {
      std::vector<int> vs;
      for (const auto& l : labels) vs.push_back(og.graph.find_vertex(l));
      return walk_from_vertices(og.graph, vs);
    };
    const Weight zero = zero_weight(4);
    o.require(walk_hom_oracle(rs, og, zero, path({"∅", "1", "2", "21"})).nonzero, "∅→(1)→(2)→(21) is nonzero");
    o.require(!walk_hom_oracle(rs, og, zero, path({"∅", "1", "2", "21", "11"})).nonzero,
              "∅→(1)→(2)→(21)→(1²) is zero");
  }
  const int max_len = default_manifest().value("walk_length", 4);
  std::size_t walks = 0, mismatches = 0, pairs = 0;
  for (const auto& s : pinned_sweep()) {
    if (!s.checks.count("walks")) continue;
    const auto& g = s.og.graph;
    for (const auto& lambda : s.grid) {
      ++pairs;
      const ORLambda orl = build_or_lambda(s.rs, s.og, lambda);
      const ShortestProjection oracle(s.rs, s.og, lambda);
      Walk w;
      std::function<void()> grow = [&]() {
        ++walks;
        if (walk_hom_oracle(s.rs, s.og, orl, w).nonzero != oracle.shortest(g, w)) ++mismatches;
        if (w.length() == max_len) return;
        for (auto [e, x] : g.incident(w.end())) {
          w.push(e, x);
          grow();
          w.pop();
        }
      };
      for (int v = 0; v < g.num_vertices(); ++v) {
        w = Walk::at(v);
        grow();
      }
    }
  }
  o.require(mismatches == 0, "oracle agrees with the shortest-projection test");
  std::ostringstream s;
  s << walks << " walks over " << pairs << " (family, lambda) pairs, " << mismatches << " mismatches";
  o.note(s.str());
  return o;
}

// Truncated expansion of prod_{gamma} 1/(1 - e^{-gamma}) built one root at a time.
struct TruncatedSeries {
  const RootSystem& rs;
  int depth;
  std::vector<Weight> simple;
  std::map<Weight, std::int64_t, WeightLess> terms;

  TruncatedSeries(const RootSystem& r, int d) : rs(r), depth(d) {
    for (int id : rs.even_simple) simple.push_back(rs.vec(id));
    std::map<Weight, std::pair<std::int64_t, int>, WeightLess> acc{{zero_weight(rs.rank()), {1, 0}}};
    for (int id : rs.even_positive) {
      const Weight& g = rs.vec(id);
      const int h = static_cast<int>(height(g)->numerator());
      auto next = acc;
      for (const auto& [w, ch] : acc) {
        Weight x = w;
        for (int k = 1; ch.second + k * h <= depth; ++k) {
          x += g;
          auto& slot = next[x];
          slot.first += ch.first;
          slot.second = ch.second + k * h;
        }
      }
      acc = std::move(next);
    }
    for (const auto& [w, ch] : acc) terms[w] = ch.first;
  }

  std::optional<Rational> height(const Weight& v) const {
    if (is_zero(v)) return Rational(0);
    if (simple.empty()) return std::nullopt;
    try {
      return expand_in_basis(v, simple).sum();
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  std::optional<std::int64_t> coefficient(const NumeratorCharacter& c, const Weight& target) const {
    std::int64_t total = 0;
    for (const auto& [w, k] : c.terms) {
      const Weight d = w - target;
      auto h = height(d);
      if (!h || h->denominator() != 1 || *h < 0) continue;
      if (*h > depth) return std::nullopt;
      auto it = terms.find(d);
      if (it != terms.end()) total += k * it->second;
    }
    return total;
  }
};

Outcome criterion5() {
  Outcome o;
  std::size_t invariance = 0, tops = 0, compared = 0, mismatches = 0, bad_tops = 0, variant = 0;
  for (const auto& s : pinned_sweep()) {
    if (!s.checks.count("characters")) continue;
    const KostantCounter k(s.rs);
    const TruncatedSeries series(s.rs, 4);
    const int nb = s.og.graph.num_vertices();
    for (const auto& lambda : s.grid) {
      std::vector<Weight> top;
      std::vector<NumeratorCharacter> ch;
      for (int b = 0; b < nb; ++b) {
        top.push_back(lambda - weyl_vector(s.rs, s.og.borel(b)));
        ch.push_back(verma_character(s.rs, s.og.borel(b), top.back()));
      }
      for (int b = 0; b < nb; ++b) {
        ++invariance;
        if (!characters_equal(ch[static_cast<std::size_t>(b)], ch[0])) ++variant;
        for (int b2 = 0; b2 < nb; ++b2) {
          ++tops;
          auto q = verma_query(s.rs, s.og.borel(b2), top[static_cast<std::size_t>(b2)], top[static_cast<std::size_t>(b)]);
          if (weight_multiplicity(k, s.rs, q) != 1) ++bad_tops;
        }
        std::set<Weight, WeightLess> targets;
        for (const auto& [w, c] : ch[static_cast<std::size_t>(b)].terms)
          for (const auto& [d, n] : series.terms) targets.insert(w - d);
        for (const auto& mu : targets) {
          auto expect = series.coefficient(ch[static_cast<std::size_t>(b)], mu);
          if (!expect) continue;
          ++compared;
          auto q = verma_query(s.rs, s.og.borel(b), top[static_cast<std::size_t>(b)], mu);
          if (static_cast<std::int64_t>(weight_multiplicity(k, s.rs, q)) != *expect) ++mismatches;
        }
      }
    }
  }
  o.require(variant == 0, "numerators agree across Borels");
  o.require(bad_tops == 0, "top weights have multiplicity 1 in every Borel's Verma");
  o.require(mismatches == 0, "multiplicities match the truncated series");
  {
    auto rs = build_root_system(FamilySpec::d21());
    auto b1 = standard_borel(rs);
    const Weight top = zero_weight(rs.rank()) - weyl_vector(rs, b1);
    const Weight target = top - parse_weight_name(rs, "2d");
    const auto mult = weight_multiplicity(rs, verma_query(rs, b1, top, target));
    const auto oracle = TruncatedSeries(rs, 4).coefficient(verma_character(rs, b1, top), target);
    std::ostringstream s;
    s << "D(2,1;a) multiplicity at depth 2d: " << mult << " (series oracle "
      << (oracle ? std::to_string(*oracle) : std::string("out of range")) << ")";
    o.note(s.str());
    o.require(oracle && static_cast<std::int64_t>(mult) == *oracle, "D(2,1;a) multiplicity matches the series");
    o.require(mult == 1, "D(2,1;a) multiplicity at depth 2d equals 1");
  }
  std::ostringstream s;
  s << invariance << " numerators, " << tops << " top-weight checks, " << compared << " series comparisons";
  o.note(s.str());
  return o;
}

Outcome criterion6() {
  Outcome o;
  const json grid = default_manifest().at("grid");
  std::size_t collections = 0;
  int salt = 100;
  for (auto spec : {FamilySpec::gl11_power(1), FamilySpec::gl11_power(2), FamilySpec::gl11_power(3),
                    FamilySpec::gl(2, 2), FamilySpec::gl(3, 2)}) {
    auto rs = build_root_system(spec);
    auto og = build_or_graph(rs);
    for (const auto& lambda : lambda_grid(rs, og, grid, ++salt))
      for (const auto& b : og.borels.borels)
        for (const auto& j : hypercubic_collections(rs, b, lambda)) {
          if (j.j.size() > 3) continue;
          ++collections;
          auto r = brick_decomposition_check(rs, b, lambda, j);
          o.require(r.holds, family_name(spec) + " brick decomposition");
          o.require(r.bricks == (std::size_t{1} << (2 * j.j.size())), family_name(spec) + " brick count 4^|J|");
        }
  }
  auto rs = build_root_system(FamilySpec::gl(2, 1));
  auto ks = kac_flag_constituents(rs, standard_borel(rs), zero_weight(3));
  std::multiset<Weight, WeightLess> got(ks.begin(), ks.end());
  std::multiset<Weight, WeightLess> want{parse_weight_name(rs, "0"), parse_weight_name(rs, "e1-d1"),
                                         parse_weight_name(rs, "e2-d1"), parse_weight_name(rs, "e1+e2-2d1")};
  o.require(got == want, "gl(2|1) Kac flag constituents");
  o.note(std::to_string(collections) + " hypercubic collections checked");
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t vermas = 0;
  for (int n = 1; n <= 5; ++n) {
    auto rs = build_root_system(FamilySpec::gl11_power(n));
    auto og = build_or_graph(rs);
    for (const auto& b : og.borels.borels)
      for (Eigen::Index i = 0; i <= rs.rank(); ++i) {
        Weight lambda = i == rs.rank() ? zero_weight(rs.rank()) : unit_weight(rs.rank(), i);
        ++vermas;
        o.require(total_dimension(verma_character(rs, b, lambda), rs) == (std::int64_t{1} << n),
                  family_name(rs.spec) + " Verma dimension 2^n");
      }
    o.require(total_dimension(verma_character(rs, rs.delta1, zero_weight(rs.rank())), rs) == 1,
              family_name(rs.spec) + " whole-algebra adjusted Borel gives dimension 1");
  }
  o.note(std::to_string(vermas) + " Verma modules");
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t rows = 0, violations = 0;
  for (const auto& s : pinned_sweep()) {
    const bool generic_d21 = s.spec.family == Family::D21 && !s.spec.alpha;
    if (!s.rs.type_one && !generic_d21) continue;
    for (const auto& lambda : s.grid) {
      const bool direct = std::none_of(s.rs.delta_iso.begin(), s.rs.delta_iso.end(),
                                       [&](int id) { return s.rs.orthogonal(lambda, s.rs.vec(id)); });
      const bool rb = s.rs.type_one ? rbtriv_check(s.rs, s.og, lambda) : direct;
      for (const auto& b : s.og.borels.borels) {
        ++rows;
        const Weight top = lambda - weyl_vector(s.rs, b);
        const bool typical = is_typical(s.rs, b, top);
        const bool empty = s1_classify(s.rs, s.og, b, top).verdict == Emptiness::Empty;
        if (typical != empty || typical != rb || typical != direct) ++violations;
      }
    }
  }
  o.require(violations == 0, "typical, single-vertex quotient and empty verdict agree");
  o.note(std::to_string(rows) + " (family, lambda, Borel) rows, " + std::to_string(violations) + " violations");
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  auto pre = build_quiver(QuiverPreset::PreprojectiveA2);
  auto hp = hom_dimensions(pre);
  int total = 0;
  for (const auto& row : hp) total = std::accumulate(row.begin(), row.end(), total);
  o.require(total == 4, "preprojective A2 total dimension 4");
  o.require(hp == oracle_hom_dimensions(pre, 4), "preprojective A2 matches the oracle");
  HomMatrix interior;
  for (int w : {3, 4}) {
    auto q = build_quiver(QuiverPreset::ZigzagWindow, w);
    auto h = hom_dimensions(q);
    o.require(h == oracle_hom_dimensions(q, 4), "zigzag window " + std::to_string(w) + " matches the oracle");
    // rows and columns -1..1 around the central vertex
    HomMatrix mid(3, std::vector<int>(3));
    for (int x = -1; x <= 1; ++x)
      for (int y = -1; y <= 1; ++y)
        mid[static_cast<std::size_t>(x + 1)][static_cast<std::size_t>(y + 1)] =
            h[static_cast<std::size_t>(w + x)][static_cast<std::size_t>(w + y)];
    for (int x = -1; x <= 1; ++x) {
      const auto& row = h[static_cast<std::size_t>(w + x)];
      for (int y = -w; y <= w; ++y) {
        const int d = std::abs(x - y);
        o.require(row[static_cast<std::size_t>(w + y)] == (d == 0 ? 2 : d == 1 ? 1 : 0),
                  "zigzag interior pattern at window " + std::to_string(w));
      }
    }
    if (!interior.empty()) o.require(mid == interior, "zigzag interior stable across windows");
    interior = mid;
  }
  auto sq = build_quiver(QuiverPreset::Square4);
  PathAlgebra a(sq, 4);
  o.require(relations_sound(a), "square4 relations sound");
  o.require(hom_dimensions(sq) == oracle_hom_dimensions(sq, 4), "square4 matches the oracle");
  const double t = seconds_since(t0);
  o.require(t <= 5.0, "within 5 s");
  o.note("quiver checks in " + std::to_string(t) + " s");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9};
  std::vector<int> selected;
  if (argc > 1) {
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::cerr << "usage: ortk_acceptance [1-9]\n";
      return 2;
    }
    selected.push_back(n);
  } else {
    for (int n = 1; n <= static_cast<int>(criteria.size()); ++n) selected.push_back(n);
  }
  bool all = true;
  for (int n : selected) {
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(n - 1)]();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL");
    for (const auto& s : o.notes) std::cout << " | " << s;
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
