#include "ortk/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ortk/adjusted.hpp"
#include "ortk/atypicality.hpp"
#include "ortk/characters.hpp"
#include "ortk/orgraph.hpp"
#include "ortk/quiver.hpp"
#include "ortk/text.hpp"
#include "ortk/verify.hpp"

namespace ortk {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kWeightNote =
    "Weights are un-shifted: --lambda L at Borel b denotes the Verma module M^b(L - rho^b).";

struct Options {
  std::string family = "gl";
  int m = -1;
  int n = -1;
  std::string alpha;
  std::string lambda;
  std::string borel = "#0";
  std::string out = "text";
  std::string report;
};

void add_family_flags(CLI::App* app, Options& o) {
  app->add_option("--family", o.family, "gl | gl11n | ospB | ospD | d21")
      ->check(CLI::IsMember({"gl", "gl11n", "ospB", "ospD", "d21"}));
  app->add_option("--m", o.m, "first rank parameter");
  app->add_option("--n", o.n, "second rank parameter");
  app->add_option("--alpha", o.alpha, "specialize D(2,1;alpha), e.g. 2 or 1/3");
}

void add_out_flag(CLI::App* app, Options& o, std::vector<std::string> allowed) {
  app->add_option("--out", o.out, "output format")->check(CLI::IsMember(allowed));
}

std::optional<Rational> alpha_of(const Options& o) {
  if (o.alpha.empty()) return std::nullopt;
  return parse_rational(o.alpha);
}

FamilySpec spec_of(const Options& o) {
  return make_family(o.family, o.m < 0 ? 1 : o.m, o.n < 0 ? 1 : o.n, alpha_of(o));
}

// Lazily built root data shared by the subcommand handlers.
struct Context {
  RootSystem rs;
  ORGraph og;
  explicit Context(const FamilySpec& spec) : rs(build_root_system(spec)), og(build_or_graph(rs)) {}

  Weight lambda(const Options& o) const {
    if (o.lambda.empty()) return zero_weight(rs.rank());
    return parse_weight(o.lambda, rs.rank(), rs.spec.alpha);
  }
  int borel(const Options& o) const { return parse_borel_address(rs, og.borels, o.borel); }
  std::string label(int v) const { return og.graph.vertex_labels[static_cast<std::size_t>(v)]; }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

void print_graph(std::ostream& out, const ColoredGraph& g, const std::string& format) {
  if (format == "dot") {
    out << export_dot(g);
  } else if (format == "json") {
    out << graph_to_json(g).dump(2) << "\n";
  } else {
    out << "vertices " << g.num_vertices() << "\n";
    for (int v = 0; v < g.num_vertices(); ++v) out << "  " << v << " " << g.vertex_labels[static_cast<std::size_t>(v)] << "\n";
    out << "edges " << g.num_edges() << "\n";
    for (const auto& e : g.edges)
      out << "  " << g.vertex_labels[static_cast<std::size_t>(e.u)] << " -- " << g.vertex_labels[static_cast<std::size_t>(e.v)]
          << " [" << g.color_labels[static_cast<std::size_t>(e.c)] << "]\n";
  }
}

int cmd_or_graph(const Options& o, std::ostream& out) {
  Context cx(spec_of(o));
  if (o.out == "text") {
    out << family_name(cx.rs.spec) << "\n";
    out << "pure positive roots: " << join(root_names(cx.rs, cx.og.pure.all), ", ") << "\n";
    for (int v = 0; v < cx.og.graph.num_vertices(); ++v)
      out << "  #" << v << " " << cx.label(v) << " odd+ {" << join(root_names(cx.rs, cx.og.borel(v).odd_positive), "; ")
          << "}\n";
  }
  print_graph(out, cx.og.graph, o.out);
  return 0;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  Context cx(spec_of(o));
  auto orl = build_or_lambda(cx.rs, cx.og, cx.lambda(o));
  if (o.out == "text") {
    std::vector<std::string> d;
    for (int c : orl.atypical) d.push_back(cx.og.graph.color_labels[static_cast<std::size_t>(c)]);
    out << "D_lambda: {" << join(d, ", ") << "}\n";
    out << "loops " << orl.quotient.loops.size() << "\n";
  }
  print_graph(out, orl.quotient.graph, o.out);
  return orl.quotient.loops.empty() ? 0 : 1;
}

int cmd_verify(const Options& o, const std::string& kind, const std::string& manifest_path, bool filtered,
               std::ostream& out) {
  CheckGroup group = kind == "exchange" ? CheckGroup::Exchange
                     : kind == "extension" ? CheckGroup::Extension
                     : kind == "iso"       ? CheckGroup::Iso
                                           : CheckGroup::All;
  json manifest;
  if (manifest_path.empty()) {
    manifest = default_manifest();
  } else {
    std::ifstream in(manifest_path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read manifest " + manifest_path);
    try {
      manifest = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }
  FamilyFilter filter;
  if (filtered) {
    filter.family = parse_family_name(o.family);
    if (o.m >= 0) filter.m = o.m;
    if (o.n >= 0) filter.n = o.n;
    if (!o.alpha.empty()) filter.alpha = parse_rational(o.alpha);
  }
  VerificationReport report = run_verification(manifest, group, filter);
  auto j = report.to_json();
  if (!o.report.empty()) {
    std::ofstream f(o.report);
    if (!f) throw Error(ErrorKind::ParseError, "cannot write report " + o.report);
    f << j.dump(2) << "\n";
  }
  if (o.out == "json") {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& e : report.entries) {
      std::string params;
      for (auto it = e.params.begin(); it != e.params.end(); ++it)
        params += " " + it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
      out << (e.status == "pass" ? "PASS" : e.status == "fail" ? "FAIL" : "SKIP") << "  " << e.check << params;
      if (e.status == "fail" && !e.payload.is_null()) out << "  " << e.payload.dump();
      out << "\n";
    }
    out << report.count("pass") << " passed, " << report.count("fail") << " failed, " << report.count("skipped")
        << " skipped\n";
  }
  if (report.entries.empty()) throw Error(ErrorKind::ParseError, "no manifest entries match the family filter");
  return report.pass() ? 0 : 1;
}

std::vector<int> parse_root_list(const RootSystem& rs, const std::string& text) {
  std::vector<int> ids;
  if (text == "all") return rs.delta1;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ';');) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    int id = rs.find(parse_weight_name(rs, tok));
    if (id < 0 || !rs.root(id).odd) throw Error(ErrorKind::ParseError, "'" + tok + "' is not an odd root");
    ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

ordered_json character_json(const NumeratorCharacter& c) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, k] : c.terms) terms.push_back({{"weight", format_weight(w)}, {"coefficient", k}});
  return terms;
}

int cmd_character(const Options& o, const std::string& delta_a, std::ostream& out) {
  Context cx(spec_of(o));
  const Weight lambda = cx.lambda(o);
  NumeratorCharacter c;
  ordered_json j;
  if (delta_a.empty()) {
    int b = cx.borel(o);
    const Weight top = lambda - weyl_vector(cx.rs, cx.og.borel(b));
    c = verma_character(cx.rs, cx.og.borel(b), top);
    j["borel"] = cx.label(b);
    j["highest"] = format_weight(top);
  } else {
    auto ids = parse_root_list(cx.rs, delta_a);
    if (!is_lambda_adjusted(cx.rs, ids, lambda))
      throw Error(ErrorKind::PreconditionViolated, "Delta^a is not lambda-adjusted");
    c = verma_character(cx.rs, ids, lambda);
    j["delta_a"] = root_names(cx.rs, ids);
    j["highest"] = format_weight(lambda);
  }
  auto dim = total_dimension(c, cx.rs);
  j["dimension"] = dim ? ordered_json(*dim) : ordered_json("infinite");
  j["terms"] = character_json(c);
  if (o.out == "json") {
    out << j.dump(2) << "\n";
    return 0;
  }
  out << kWeightNote << "\n";
  out << "highest weight " << j["highest"].get<std::string>() << "\n";
  out << "numerator over prod_{even positive gamma} (1 - e^-gamma):\n";
  for (const auto& [w, k] : c.terms) out << "  " << (k > 0 ? "+" : "") << k << " e^(" << format_weight(w) << ")\n";
  out << "dimension " << (dim ? std::to_string(*dim) : std::string("infinite")) << "\n";
  return 0;
}

int cmd_multiplicity(const Options& o, const std::string& weight, int depth, std::ostream& out) {
  Context cx(spec_of(o));
  int b = cx.borel(o);
  const Weight top = cx.lambda(o) - weyl_vector(cx.rs, cx.og.borel(b));
  const Weight target = parse_weight(weight, cx.rs.rank(), cx.rs.spec.alpha);
  auto mult = weight_multiplicity(cx.rs, verma_query(cx.rs, cx.og.borel(b), top, target));
  auto series = truncated_series_multiplicity(cx.rs, verma_character(cx.rs, cx.og.borel(b), top), target, depth);
  bool agree = !series || *series == static_cast<std::int64_t>(mult);
  if (o.out == "json") {
    ordered_json j{{"borel", cx.label(b)}, {"highest", format_weight(top)}, {"weight", format_weight(target)},
                   {"multiplicity", mult}};
    j["series_oracle"] = series ? ordered_json(*series) : ordered_json("beyond depth");
    out << j.dump(2) << "\n";
  } else {
    out << kWeightNote << "\n";
    out << "dim M^" << cx.label(b) << "(" << format_weight(top) << ")_(" << format_weight(target) << ") = " << mult << "\n";
    out << "series oracle (depth " << depth << "): " << (series ? std::to_string(*series) : std::string("beyond depth"))
        << (agree ? "" : "  MISMATCH") << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_typical(const Options& o, std::ostream& out) {
  Context cx(spec_of(o));
  int b = cx.borel(o);
  const Weight lambda = cx.lambda(o);
  const Weight top = lambda - weyl_vector(cx.rs, cx.og.borel(b));
  bool typ = is_typical(cx.rs, cx.og.borel(b), top);
  auto orl = build_or_lambda(cx.rs, cx.og, lambda);
  std::vector<std::string> d;
  for (int c : orl.atypical) d.push_back(cx.og.graph.color_labels[static_cast<std::size_t>(c)]);
  bool rb = rbtriv_check(cx.rs, cx.og, lambda);
  if (o.out == "json") {
    out << ordered_json{{"typical", typ}, {"atypical_colors", d}, {"single_vertex", rb}}.dump(2) << "\n";
  } else {
    out << kWeightNote << "\n";
    out << (typ ? "typical" : "atypical") << "\n";
    out << "D_lambda: {" << join(d, ", ") << "}\n";
    out << "OR(g, lambda) is " << (rb ? "a single vertex" : "not a single vertex") << "\n";
  }
  return 0;
}

int cmd_s1(const Options& o, int bound, bool as_json, std::ostream& out) {
  Context cx(spec_of(o));
  int b = cx.borel(o);
  auto s = s1_classify_shifted(cx.rs, cx.og, cx.og.borel(b), cx.lambda(o), bound);
  if (as_json || o.out == "json") {
    out << ordered_json{{"certified_in", root_names(cx.rs, s.certified_in)},
                        {"certified_out", root_names(cx.rs, s.certified_out)},
                        {"unknown", root_names(cx.rs, s.unknown)},
                        {"verdict", emptiness_name(s.verdict)}}
               .dump(2)
        << "\n";
  } else {
    out << kWeightNote << "\n";
    out << "certified_in: {" << join(root_names(cx.rs, s.certified_in), ", ") << "}\n";
    out << "certified_out: {" << join(root_names(cx.rs, s.certified_out), ", ") << "}\n";
    out << "unknown: {" << join(root_names(cx.rs, s.unknown), ", ") << "}\n";
    out << "verdict: " << emptiness_name(s.verdict) << "\n";
  }
  return 0;
}

int cmd_walk(const Options& o, const std::string& path, std::ostream& out) {
  Context cx(spec_of(o));
  std::vector<int> vs;
  for (const auto& a : split_addresses(path)) vs.push_back(parse_borel_address(cx.rs, cx.og.borels, a));
  if (vs.empty()) throw Error(ErrorKind::ParseError, "empty path");
  Walk w = walk_from_vertices(cx.og.graph, vs);
  auto v = walk_hom_oracle(cx.rs, cx.og, cx.lambda(o), w);
  std::vector<std::string> colors;
  for (int e : w.edges) colors.push_back(cx.og.graph.color_labels[static_cast<std::size_t>(cx.og.graph.edges[static_cast<std::size_t>(e)].c)]);
  if (o.out == "json") {
    out << ordered_json{{"verdict", v.nonzero ? "Nonzero" : "Zero"},
                        {"colors", colors},
                        {"monomial", root_names(cx.rs, v.monomial)},
                        {"projected_length", v.projected.length()}}
               .dump(2)
        << "\n";
  } else {
    out << "colors: " << join(colors, ", ") << "\n";
    out << "projected length " << v.projected.length() << "\n";
    out << "verdict " << (v.nonzero ? "Nonzero" : "Zero") << "\n";
    if (v.nonzero) out << "monomial: " << join(root_names(cx.rs, v.monomial), " ") << "\n";
  }
  return 0;
}

int cmd_hypercubic(const Options& o, int max_j, std::ostream& out) {
  Context cx(spec_of(o));
  int b = cx.borel(o);
  const Weight lambda = cx.lambda(o);
  const Borel& bo = cx.og.borel(b);
  ordered_json j{{"borel", cx.label(b)}, {"lambda", format_weight(lambda)}};
  j["collections"] = ordered_json::array();
  bool ok = true;
  for (const auto& h : hypercubic_collections(cx.rs, bo, lambda)) {
    if (static_cast<int>(h.j.size()) > max_j) continue;
    auto [meet, joinb] = borel_meet_join(cx.rs, bo, h);
    auto bricks = brick_decomposition_check(cx.rs, bo, lambda, h);
    ok = ok && bricks.holds;
    j["collections"].push_back({{"J", h.j},
                                {"sigma", format_weight(h.sigma)},
                                {"meet", root_names(cx.rs, meet.delta_a)},
                                {"join", root_names(cx.rs, joinb.delta_a)},
                                {"bricks", bricks.bricks},
                                {"decomposition_holds", bricks.holds}});
  }
  out << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_quiver(const std::string& preset, int window, int max_len, const std::string& format, std::ostream& out) {
  QuiverPreset p = preset == "zigzag"             ? QuiverPreset::ZigzagWindow
                   : preset == "preprojective_a2" ? QuiverPreset::PreprojectiveA2
                   : preset == "chain3"           ? QuiverPreset::Chain3
                                                  : QuiverPreset::Square4;
  Quiver q = build_quiver(p, window);
  PathAlgebra a(q, max_len);
  HomMatrix h = hom_dimensions(q, max_len);
  HomMatrix oracle = oracle_hom_dimensions(q, max_len);
  bool sound = relations_sound(a);
  int total = 0;
  for (const auto& row : h)
    for (int x : row) total += x;
  const int nv = static_cast<int>(q.vertices.size());
  if (format == "json") {
    ordered_json j{{"vertices", q.vertices}, {"hom", h}, {"total", total}, {"oracle_agrees", h == oracle},
                   {"relations_sound", sound}};
    ordered_json basis = ordered_json::array();
    for (int s = 0; s < nv; ++s)
      for (int t = 0; t < nv; ++t)
        for (const auto& pc : a.basis(s, t))
          basis.push_back({{"source", q.vertices[static_cast<std::size_t>(s)]},
                           {"target", q.vertices[static_cast<std::size_t>(t)]},
                           {"word", pc.representative.empty() ? "e" + q.vertices[static_cast<std::size_t>(s)]
                                                              : q.word_name(pc.representative)}});
    j["basis"] = basis;
    out << j.dump(2) << "\n";
  } else {
    out << "dim e_t A e_s (row s, column t)\n";
    for (int s = 0; s < nv; ++s) {
      out << "  " << q.vertices[static_cast<std::size_t>(s)] << ":";
      for (int t = 0; t < nv; ++t) out << " " << h[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      out << "\n";
    }
    out << "total " << total << "\n";
    out << "basis\n";
    for (int s = 0; s < nv; ++s)
      for (int t = 0; t < nv; ++t)
        for (const auto& pc : a.basis(s, t))
          out << "  " << q.vertices[static_cast<std::size_t>(s)] << " -> " << q.vertices[static_cast<std::size_t>(t)] << ": "
              << (pc.representative.empty() ? "e" + q.vertices[static_cast<std::size_t>(s)] : q.word_name(pc.representative))
              << "\n";
    out << "oracle " << (h == oracle ? "agrees" : "DISAGREES") << ", relations " << (sound ? "sound" : "UNSOUND") << "\n";
  }
  return h == oracle && sound ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd reflection toolkit for basic Lie superalgebras.\n" + std::string(kWeightNote), "ortk"};
  app.require_subcommand(1);
  Options o;

  auto* or_graph = app.add_subcommand("or-graph", "odd reflection graph OR(g)");
  add_family_flags(or_graph, o);
  add_out_flag(or_graph, o, {"text", "json", "dot"});

  auto* quotient = app.add_subcommand("quotient", "OR(g, lambda): contract the atypical colors");
  add_family_flags(quotient, o);
  quotient->add_option("--lambda", o.lambda, "weight, comma separated coordinates");
  add_out_flag(quotient, o, {"text", "json", "dot"});

  std::string verify_kind, manifest;
  auto* verify = app.add_subcommand("verify", "run the pinned verification suite");
  verify->add_option("kind", verify_kind, "exchange | extension | iso | all")
      ->required()
      ->check(CLI::IsMember({"exchange", "extension", "iso", "all"}));
  add_family_flags(verify, o);
  verify->add_option("--manifest", manifest, "manifest JSON (default: the built-in one)");
  verify->add_option("--report", o.report, "write the JSON report here");
  add_out_flag(verify, o, {"text", "json"});

  std::string delta_a;
  auto* character = app.add_subcommand("character", "numerator of a Verma character");
  add_family_flags(character, o);
  character->add_option("--lambda", o.lambda, "weight");
  character->add_option("--borel", o.borel, "#k, Young string or {odd positive roots}");
  character->add_option("--delta-a", delta_a, "adjusted Borel: odd roots separated by ';', or 'all'");
  add_out_flag(character, o, {"text", "json"});

  std::string weight;
  int depth = 4;
  auto* mult = app.add_subcommand("multiplicity", "weight multiplicity of a Verma module");
  add_family_flags(mult, o);
  mult->add_option("--lambda", o.lambda, "weight");
  mult->add_option("--borel", o.borel, "Borel address");
  mult->add_option("--weight", weight, "target weight")->required();
  mult->add_option("--oracle-depth", depth, "height bound for the series cross-check")->check(CLI::NonNegativeNumber);
  add_out_flag(mult, o, {"text", "json"});

  auto* typical = app.add_subcommand("typical", "typicality and the single-vertex criterion");
  add_family_flags(typical, o);
  typical->add_option("--lambda", o.lambda, "weight");
  typical->add_option("--borel", o.borel, "Borel address");
  add_out_flag(typical, o, {"text", "json"});

  int bound = kDefaultWitnessBound;
  bool s1_json = false;
  auto* s1 = app.add_subcommand("s1", "bounds on the S1 set of a Verma module");
  add_family_flags(s1, o);
  s1->add_option("--lambda", o.lambda, "weight");
  s1->add_option("--borel", o.borel, "Borel address");
  s1->add_option("--bound", bound, "height bound for the even witness search")->check(CLI::NonNegativeNumber);
  s1->add_flag("--json", s1_json, "machine-readable output");
  add_out_flag(s1, o, {"text", "json"});

  std::string path;
  auto* walk = app.add_subcommand("walk", "decide whether a composite of odd Verma maps vanishes");
  add_family_flags(walk, o);
  walk->add_option("--lambda", o.lambda, "weight");
  walk->add_option("--path", path, "comma separated Borel addresses")->required();
  add_out_flag(walk, o, {"text", "json"});

  int max_j = 3;
  auto* hyper = app.add_subcommand("hypercubic", "hypercubic collections and brick decompositions (JSON)");
  add_family_flags(hyper, o);
  hyper->add_option("--lambda", o.lambda, "weight");
  hyper->add_option("--borel", o.borel, "Borel address");
  hyper->add_option("--max-j", max_j, "largest |J| reported")->check(CLI::NonNegativeNumber);

  std::string preset = "zigzag";
  int window = 3, max_len = 4;
  auto* quiver = app.add_subcommand("quiver", "Hom dimensions of the preset quiver algebras");
  quiver->add_option("--preset", preset, "zigzag | preprojective_a2 | chain3 | square4")
      ->check(CLI::IsMember({"zigzag", "preprojective_a2", "chain3", "square4"}));
  quiver->add_option("--window", window, "zigzag window half-width");
  quiver->add_option("--max-len", max_len, "longest path considered")->check(CLI::NonNegativeNumber);
  add_out_flag(quiver, o, {"text", "json"});

  std::vector<std::string> storage{"ortk"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*or_graph) return cmd_or_graph(o, out);
    if (*quotient) return cmd_quotient(o, out);
    if (*verify) return cmd_verify(o, verify_kind, manifest, verify->count("--family") > 0, out);
    if (*character) return cmd_character(o, delta_a, out);
    if (*mult) return cmd_multiplicity(o, weight, depth, out);
    if (*typical) return cmd_typical(o, out);
    if (*s1) return cmd_s1(o, bound, s1_json, out);
    if (*walk) return cmd_walk(o, path, out);
    if (*hyper) return cmd_hypercubic(o, max_j, out);
    if (*quiver) return cmd_quiver(preset, window, max_len, o.out, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ortk
