#include "ortk/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <thread>

#include "ortk/adjusted.hpp"
#include "ortk/atypicality.hpp"
#include "ortk/characters.hpp"
#include "ortk/manifest.hpp"
#include "ortk/text.hpp"

namespace ortk {

using nlohmann::json;
using nlohmann::ordered_json;

bool VerificationReport::pass() const { return count("fail") == 0; }

std::size_t VerificationReport::count(const std::string& status) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const ReportEntry& e) { return e.status == status; }));
}

ordered_json VerificationReport::to_json() const {
  ordered_json out;
  out["schema"] = 1;
  out["status"] = pass() ? "pass" : "fail";
  out["counts"] = {{"pass", count("pass")}, {"fail", count("fail")}, {"skipped", count("skipped")}};
  out["entries"] = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json j;
    j["check"] = e.check;
    j["params"] = e.params;
    j["status"] = e.status;
    if (!e.payload.is_null()) j["payload"] = e.payload;
    out["entries"].push_back(std::move(j));
  }
  return out;
}

bool FamilyFilter::matches(const FamilySpec& s) const {
  if (family && *family != s.family) return false;
  if (m && *m != s.m) return false;
  if (n && *n != s.n) return false;
  if (alpha && s.alpha != alpha) return false;
  return true;
}

Family parse_family_name(const std::string& name) {
  if (name == "gl") return Family::GL;
  if (name == "gl11n") return Family::GL11Power;
  if (name == "ospB") return Family::OspB;
  if (name == "ospD") return Family::OspD;
  if (name == "d21") return Family::D21;
  throw Error(ErrorKind::ParseError, "unknown family '" + name + "'");
}

FamilySpec make_family(const std::string& name, int m, int n, const std::optional<Rational>& alpha) {
  Family f = parse_family_name(name);
  if (alpha && f != Family::D21) throw Error(ErrorKind::ParseError, "--alpha only applies to d21");
  switch (f) {
    case Family::GL: return FamilySpec::gl(m, n);
    case Family::GL11Power: return FamilySpec::gl11_power(n);
    case Family::OspB: return FamilySpec::osp_b(m, n);
    case Family::OspD: return FamilySpec::osp_d(m, n);
    case Family::D21: return FamilySpec::d21(alpha);
  }
  return {};
}

FamilySpec family_from_json(const json& j) {
  std::optional<Rational> alpha;
  if (j.contains("alpha")) alpha = parse_rational(j.at("alpha").get<std::string>());
  return make_family(j.at("family").get<std::string>(), j.value("m", 0), j.value("n", 0), alpha);
}

json default_manifest() { return json::parse(kDefaultManifest); }

int worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  int n = static_cast<int>(hw);
  if (const char* env = std::getenv("ORTK_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return std::max(1, n);
}

namespace {

// Constraint rows expressing (lambda, beta) = 0. With an indeterminate alpha
// the rational and alpha parts must vanish separately.
std::vector<std::vector<Rational>> orthogonality_rows(const RootSystem& rs, const Weight& beta) {
  const auto r = static_cast<std::size_t>(rs.rank());
  std::vector<Rational> plain(r), alpha_part(r);
  bool has_alpha = false;
  for (std::size_t i = 0; i < r; ++i) {
    const Scalar& d = rs.form.diagonal[i];
    const Rational b = beta(static_cast<Eigen::Index>(i));
    if (rs.form.alpha) {
      plain[i] = d.evaluate(*rs.form.alpha) * b;
    } else {
      plain[i] = d.r() * b;
      alpha_part[i] = d.s() * b;
      has_alpha = has_alpha || alpha_part[i] != 0;
    }
  }
  std::vector<std::vector<Rational>> out{plain};
  if (has_alpha) out.push_back(alpha_part);
  return out;
}

std::optional<Weight> orthogonal_weight(const RootSystem& rs, const std::vector<int>& roots) {
  std::vector<std::vector<Rational>> rows;
  for (int id : roots)
    for (auto& row : orthogonality_rows(rs, rs.vec(id))) rows.push_back(std::move(row));
  RMatrix m(static_cast<Eigen::Index>(rows.size()), rs.rank());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (Eigen::Index k = 0; k < rs.rank(); ++k) m(static_cast<Eigen::Index>(i), k) = rows[i][static_cast<std::size_t>(k)];
  auto ns = null_space(m);
  if (ns.empty()) return std::nullopt;
  Weight w = zero_weight(rs.rank());
  for (std::size_t i = 0; i < ns.size(); ++i) w += ns[i] * Rational(static_cast<std::int64_t>(i + 1));
  return w;
}

}  // namespace

std::vector<Weight> lambda_grid(const RootSystem& rs, const ORGraph& og, const json& grid, int salt) {
  std::vector<Weight> out;
  std::set<Weight, WeightLess> seen;
  auto push = [&](const Weight& w) {
    if (seen.insert(w).second) out.push_back(w);
  };
  const Eigen::Index r = rs.rank();
  push(zero_weight(r));
  for (Eigen::Index i = 0; i < r; ++i) push(unit_weight(r, i));

  std::mt19937_64 rng(grid.value("seed", 1ULL) + static_cast<unsigned long long>(salt));
  const int range = grid.value("range", 2);
  std::uniform_int_distribution<int> coord(-range, range);
  for (int k = 0; k < grid.value("random", 0); ++k) {
    Weight w(r);
    for (Eigen::Index i = 0; i < r; ++i) w(i) = coord(rng);
    push(w);
  }

  std::vector<int> iso;
  for (int c = 0; c < og.graph.num_colors(); ++c)
    if (rs.root(og.root_of_color[static_cast<std::size_t>(c)]).isotropic) iso.push_back(og.root_of_color[static_cast<std::size_t>(c)]);
  const int want = grid.value("orthogonal", 0);
  for (int k = 0; k < want && !iso.empty(); ++k) {
    std::vector<int> chosen{iso[static_cast<std::size_t>(k) % iso.size()]};
    // Odd slots ask for as many mutually orthogonal roots as possible.
    if (k % 2 == 1)
      for (int id : iso)
        if (std::all_of(chosen.begin(), chosen.end(), [&](int c) { return c != id && rs.orthogonal(rs.vec(c), rs.vec(id)); }))
          chosen.push_back(id);
    if (auto w = orthogonal_weight(rs, chosen)) push(*w);
  }
  return out;
}

namespace {

ordered_json walk_payload(const ColoredGraph& g, const Walk& w) {
  ordered_json j = ordered_json::array();
  for (int v : w.vertices) j.push_back(g.vertex_labels[static_cast<std::size_t>(v)]);
  return j;
}

ordered_json property_payload(const ColoredGraph& g, const PropertyReport& r) {
  ordered_json j;
  j["examined"] = r.examined;
  j["failures"] = r.failures;
  if (!r.counterexamples.empty()) {
    j["counterexamples"] = ordered_json::array();
    for (std::size_t k = 0; k < std::min<std::size_t>(5, r.counterexamples.size()); ++k)
      j["counterexamples"].push_back(walk_payload(g, r.counterexamples[k]));
  }
  return j;
}

ReportEntry entry(std::string check, ordered_json params, bool ok, ordered_json payload = nullptr) {
  return {std::move(check), std::move(params), ok ? "pass" : "fail", std::move(payload)};
}

ordered_json family_params(const FamilySpec& s) { return {{"family", family_name(s)}}; }

ordered_json lambda_params(const RootSystem& rs, const Weight& lambda) {
  ordered_json p = family_params(rs.spec);
  p["lambda"] = format_weight(lambda);
  return p;
}

// Every walk of length <= len out of each vertex.
void for_each_walk(const ColoredGraph& g, int len, const std::function<void(const Walk&)>& f) {
  for (int s = 0; s < g.num_vertices(); ++s) {
    Walk w = Walk::at(s);
    std::function<void()> rec = [&]() {
      f(w);
      if (w.length() == len) return;
      for (auto [e, nb] : g.incident(w.end())) {
        w.push(e, nb);
        rec();
        w.pop();
      }
    };
    rec();
  }
}

// The composite along w is predicted nonzero exactly when its image in
// OR(g, lambda), with contracted steps dropped, is a shortest path.
bool projected_is_shortest(const Quotient& q, const Walk& w) {
  std::vector<int> classes;
  for (int v : w.vertices) {
    int c = q.vertex_map[static_cast<std::size_t>(v)];
    if (classes.empty() || classes.back() != c) classes.push_back(c);
  }
  auto d = q.graph.distances_from(classes.front());
  return d[static_cast<std::size_t>(classes.back())] == static_cast<int>(classes.size()) - 1;
}

std::vector<ReportEntry> graph_checks(const RootSystem& rs, const ORGraph& og, CheckGroup group) {
  std::vector<ReportEntry> out;
  auto p = family_params(rs.spec);
  if (group == CheckGroup::All || group == CheckGroup::Exchange) {
    auto r = verify_exchange(og.graph);
    out.push_back(entry("or_graph.exchange", p, r.pass, property_payload(og.graph, r)));
  }
  if (group == CheckGroup::All || group == CheckGroup::Extension) {
    auto r = verify_rainbow_extension(og.graph);
    out.push_back(entry("or_graph.extension", p, r.pass, property_payload(og.graph, r)));
  }
  return out;
}

std::vector<ReportEntry> lambda_checks(const RootSystem& rs, const ORGraph& og, const Weight& lambda,
                                       const std::set<std::string>& checks, const json& manifest, CheckGroup group) {
  std::vector<ReportEntry> out;
  const auto p = lambda_params(rs, lambda);
  const ORLambda orl = build_or_lambda(rs, og, lambda);
  const ColoredGraph& qg = orl.quotient.graph;
  const int nb = og.graph.num_vertices();

  if (checks.count("graph")) {
    if (group == CheckGroup::All || group == CheckGroup::Exchange) {
      auto r = verify_exchange(qg);
      out.push_back(entry("or_lambda.exchange", p, r.pass, property_payload(qg, r)));
    }
    if (group == CheckGroup::All || group == CheckGroup::Extension) {
      auto r = verify_rainbow_extension(qg);
      out.push_back(entry("or_lambda.extension", p, r.pass, property_payload(qg, r)));
    }
    if (group == CheckGroup::All)
      out.push_back(entry("or_lambda.loop_free", p, orl.quotient.loops.empty(), {{"loops", orl.quotient.loops.size()}}));
  }
  if (group != CheckGroup::All) return out;

  if (checks.count("walks")) {
    std::size_t examined = 0, mismatches = 0;
    ordered_json bad = ordered_json::array();
    for_each_walk(og.graph, manifest.value("walk_length", 4), [&](const Walk& w) {
      ++examined;
      bool oracle = walk_hom_oracle(rs, og, orl, w).nonzero;
      if (oracle != projected_is_shortest(orl.quotient, w)) {
        if (mismatches++ < 5) bad.push_back(walk_payload(og.graph, w));
      }
    });
    ordered_json pay{{"examined", examined}, {"mismatches", mismatches}};
    if (!bad.empty()) pay["counterexamples"] = bad;
    out.push_back(entry("walk.oracle", p, mismatches == 0, pay));
  }

  if (checks.count("characters")) {
    std::vector<Weight> tops;
    for (int b = 0; b < nb; ++b) tops.push_back(lambda - weyl_vector(rs, og.borel(b)));
    const NumeratorCharacter first = verma_character(rs, og.borel(0), tops[0]);
    bool same = true;
    for (int b = 1; b < nb; ++b) same = same && verma_character(rs, og.borel(b), tops[static_cast<std::size_t>(b)]) == first;
    out.push_back(entry("character.borel_invariance", p, same, {{"borels", nb}}));

    KostantCounter k(rs);
    ordered_json bad = ordered_json::array();
    for (int b = 0; b < nb; ++b)
      for (int b2 = 0; b2 < nb; ++b2) {
        auto q = verma_query(rs, og.borel(b2), tops[static_cast<std::size_t>(b2)], tops[static_cast<std::size_t>(b)]);
        auto mult = weight_multiplicity(k, rs, q);
        if (mult != 1 && bad.size() < 5) bad.push_back({{"weight_of", b}, {"module_of", b2}, {"multiplicity", mult}});
      }
    out.push_back(entry("character.top_multiplicity", p, bad.empty(), bad.empty() ? ordered_json() : ordered_json{{"counterexamples", bad}}));
  }

  if (checks.count("typicality")) {
    const bool type_one = rs.type_one;
    const bool generic_d21 = rs.spec.family == Family::D21 && !rs.spec.alpha;
    if (type_one || generic_d21) {
      bool ok = true;
      ordered_json bad = ordered_json::array();
      const bool rb = type_one ? rbtriv_check(rs, og, lambda) : false;
      for (int b = 0; b < nb; ++b) {
        const Weight top = lambda - weyl_vector(rs, og.borel(b));
        bool typical = is_typical(rs, og.borel(b), top);
        bool empty = s1_classify(rs, og, og.borel(b), top).verdict == Emptiness::Empty;
        bool row = (typical == empty) && (!type_one || typical == rb);
        if (!row && bad.size() < 5) bad.push_back({{"borel", b}, {"typical", typical}, {"empty", empty}});
        ok = ok && row;
      }
      out.push_back(entry("typicality.equivalence", p, ok, bad.empty() ? ordered_json() : ordered_json{{"counterexamples", bad}}));
    }
  }

  if (checks.count("bricks")) {
    const int max_j = manifest.value("brick_max", 3);
    std::size_t collections = 0;
    ordered_json bad = ordered_json::array();
    for (int b = 0; b < nb; ++b)
      for (const auto& j : hypercubic_collections(rs, og.borel(b), lambda)) {
        if (j.j.empty() || static_cast<int>(j.j.size()) > max_j) continue;
        ++collections;
        auto r = brick_decomposition_check(rs, og.borel(b), lambda, j);
        std::size_t expect = std::size_t{1} << (2 * j.j.size());
        if ((!r.holds || r.bricks != expect) && bad.size() < 5)
          bad.push_back({{"borel", b}, {"J", j.j}, {"holds", r.holds}, {"bricks", r.bricks}});
      }
    out.push_back(entry("hypercubic.bricks", p, bad.empty(),
                        bad.empty() ? ordered_json{{"collections", collections}} : ordered_json{{"counterexamples", bad}}));
  }
  return out;
}

std::vector<ReportEntry> d21_checks(const RootSystem& rs, const ORGraph& og) {
  std::vector<ReportEntry> out;
  const auto p = family_params(rs.spec);
  const ColoredGraph& g = og.graph;
  int centre = -1;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.incident(v).size() == 3) centre = v;
  bool tree = g.num_vertices() == 4 && g.num_edges() == 3 && g.connected() && centre >= 0;
  out.push_back(entry("d21.tree", p, tree, {{"vertices", g.num_vertices()}, {"edges", g.num_edges()}, {"centre", centre}}));

  ordered_json rhos = ordered_json::object();
  for (int v = 0; v < g.num_vertices(); ++v) rhos[g.vertex_labels[static_cast<std::size_t>(v)]] = weight_name(rs, weyl_vector(rs, og.borel(v)));
  bool centre_zero = centre >= 0 && is_zero(weyl_vector(rs, og.borel(centre)));
  bool standard = weyl_vector(rs, standard_borel(rs)) == make_weight({-1, 1, 1});
  out.push_back(entry("d21.rho", p, centre_zero && standard, {{"rho", rhos}}));

  auto names = root_names(rs, og.pure.all);
  std::vector<std::string> expect{"2d", "2e1", "2e2", "d+e1+e2"};
  out.push_back(entry("d21.pure_roots", p, names == expect, {{"pure", names}}));
  return out;
}

void run_parallel(std::vector<std::function<std::vector<ReportEntry>()>>& tasks, std::vector<ReportEntry>& sink) {
  std::vector<std::vector<ReportEntry>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i] = {{"exception", nullptr, "fail", {{"what", e.what()}}}};
      }
    }
  };
  const int n = std::min<int>(worker_count(), static_cast<int>(tasks.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& r : results)
    for (auto& e : r) sink.push_back(std::move(e));
}

}  // namespace

VerificationReport run_verification(const json& manifest, CheckGroup group, const FamilyFilter& filter) {
  VerificationReport report;
  std::vector<std::function<std::vector<ReportEntry>()>> tasks;

  if (group == CheckGroup::All || group == CheckGroup::Iso) {
    for (const auto& item : manifest.value("iso", json::array())) {
      FamilySpec spec = family_from_json(item);
      if (!filter.matches(spec)) continue;
      std::string ref = item.at("reference").get<std::string>();
      tasks.push_back([spec, ref]() -> std::vector<ReportEntry> {
        auto rs = build_root_system(spec);
        auto og = build_or_graph(rs);
        ColoredGraph target = ref == "hypercube" ? hypercube(spec.n) : young_lattice(spec.m, spec.n);
        auto w = colored_isomorphic(og.graph, target);
        ordered_json p = family_params(spec);
        p["reference"] = ref;
        return {entry("iso", p, w && is_iso_witness(og.graph, target, *w), {{"vertices", og.graph.num_vertices()}})};
      });
    }
  }

  if (group != CheckGroup::Iso) {
    int salt = 0;
    for (const auto& item : manifest.value("families", json::array())) {
      ++salt;
      FamilySpec spec = family_from_json(item);
      if (!filter.matches(spec)) continue;
      std::set<std::string> checks;
      for (const auto& c : item.value("checks", json::array())) checks.insert(c.get<std::string>());
      // One task per (family, lambda); the graph-level entries ride on the first.
      auto rs = std::make_shared<RootSystem>(build_root_system(spec));
      auto og = std::make_shared<ORGraph>(build_or_graph(*rs));
      auto grid = lambda_grid(*rs, *og, manifest.value("grid", json::object()), salt);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        Weight lambda = grid[i];
        tasks.push_back([rs, og, lambda, checks, &manifest, group, i]() {
          std::vector<ReportEntry> out;
          if (i == 0) {
            if (checks.count("graph")) out = graph_checks(*rs, *og, group);
            if (checks.count("d21") && group == CheckGroup::All)
              for (auto& e : d21_checks(*rs, *og)) out.push_back(std::move(e));
          }
          for (auto& e : lambda_checks(*rs, *og, lambda, checks, manifest, group)) out.push_back(std::move(e));
          return out;
        });
      }
    }
  }
  run_parallel(tasks, report.entries);
  return report;
}

}  // namespace ortk
