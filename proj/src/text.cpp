#include "ortk/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ortk {

std::string weight_name(const RootSystem& rs, const Weight& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Rational& c = v[i];
    if (c == 0) continue;
    const std::string& label = rs.basis_labels[static_cast<std::size_t>(i)];
    std::string term = c == 1 ? label : c == -1 ? "-" + label : format_rational(c) + label;
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string root_name(const RootSystem& rs, int id) { return weight_name(rs, rs.vec(id)); }

std::vector<std::string> root_names(const RootSystem& rs, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int id : ids) out.push_back(root_name(rs, id));
  return out;
}

Weight parse_weight_name(const RootSystem& rs, const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  Weight v = zero_weight(rs.rank());
  if (t == "0") return v;
  std::size_t pos = 0;
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty root name");
  while (pos < t.size()) {
    Rational sign = 1;
    if (t[pos] == '+' || t[pos] == '-') sign = t[pos++] == '-' ? -1 : 1;
    std::size_t start = pos;
    while (pos < t.size() && (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/')) ++pos;
    Rational coeff = start == pos ? Rational(1) : parse_rational(t.substr(start, pos - start));
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t k = 0; k < rs.basis_labels.size(); ++k) {
      const auto& label = rs.basis_labels[k];
      if (t.compare(pos, label.size(), label) == 0 && label.size() > best_len) {
        // do not let "e1" match the prefix of "e12"
        std::size_t after = pos + label.size();
        if (after < t.size() && std::isdigit(static_cast<unsigned char>(t[after]))) continue;
        best = static_cast<int>(k);
        best_len = label.size();
      }
    }
    if (best < 0) throw Error(ErrorKind::ParseError, "cannot read '" + text + "' as a combination of basis labels");
    v[best] += sign * coeff;
    pos += best_len;
  }
  return v;
}

std::string young_label(const RootSystem& rs, const Borel& b) {
  if (rs.spec.family != Family::GL) return "";
  const int m = rs.spec.m, n = rs.spec.n;
  std::vector<int> parts;
  for (int r = 1; r <= m; ++r) {
    int i = m - r;
    int len = 0;
    for (int j = 0; j < n; ++j) {
      int id = rs.find(unit_weight(rs.rank(), i) - unit_weight(rs.rank(), m + j));
      bool flipped = !b.is_positive(id);
      if (flipped && j != len) return "";
      if (flipped) ++len;
    }
    if (!parts.empty() && len > parts.back()) return "";
    parts.push_back(len);
  }
  return partition_label(parts);
}

std::string borel_label(const RootSystem& rs, const Borel& b, int rank) {
  std::string y = young_label(rs, b);
  return y.empty() ? "#" + std::to_string(rank) : y;
}

std::vector<std::string> split_addresses(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += ch;
  }
  out.push_back(cur);
  for (auto& s : out) {
    auto a = s.find_first_not_of(" \t");
    auto z = s.find_last_not_of(" \t");
    s = a == std::string::npos ? "" : s.substr(a, z - a + 1);
  }
  return out;
}

int parse_borel_address(const RootSystem& rs, const BorelEnumeration& en, const std::string& text) {
  const int count = static_cast<int>(en.borels.size());
  if (!text.empty() && text[0] == '#') {
    int k = -1;
    try {
      std::size_t used = 0;
      k = std::stoi(text.substr(1), &used);
      if (used + 1 != text.size()) k = -1;
    } catch (const std::exception&) {
      k = -1;
    }
    if (k < 0 || k >= count) throw Error(ErrorKind::ParseError, "no Borel with rank '" + text + "'");
    return k;
  }
  if (!text.empty() && text[0] == '{') {
    if (text.back() != '}') throw Error(ErrorKind::ParseError, "unterminated root list '" + text + "'");
    std::string body = text.substr(1, text.size() - 2);
    for (char& ch : body)
      if (ch == ';' || ch == ',') ch = ' ';
    std::istringstream ss(body);
    std::vector<int> odd;
    for (std::string tok; ss >> tok;) {
      int id = rs.find(parse_weight_name(rs, tok));
      if (id < 0 || !rs.root(id).odd) throw Error(ErrorKind::ParseError, "'" + tok + "' is not an odd root");
      odd.push_back(id);
    }
    std::sort(odd.begin(), odd.end());
    odd.erase(std::unique(odd.begin(), odd.end()), odd.end());
    int k = en.find(odd);
    if (k < 0) throw Error(ErrorKind::ParseError, "no Borel has odd positives " + text);
    return k;
  }
  if (rs.spec.family == Family::GL) {
    const int m = rs.spec.m, n = rs.spec.n;
    std::vector<int> parts;
    if (!(text.empty() || text == "∅" || text == "0" || text == "e")) {
      if (text.find('.') != std::string::npos) {
        std::istringstream ss(text);
        for (std::string tok; std::getline(ss, tok, '.');) parts.push_back(std::stoi(tok));
      } else {
        for (char ch : text) {
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw Error(ErrorKind::ParseError, "bad Young diagram '" + text + "'");
          parts.push_back(ch - '0');
        }
      }
    }
    if (static_cast<int>(parts.size()) > m) throw Error(ErrorKind::ParseError, "too many rows in '" + text + "'");
    Borel st = en.borels.front();
    std::vector<int> odd = st.odd_positive;
    for (std::size_t r = 0; r < parts.size(); ++r) {
      if (parts[r] > n || (r > 0 && parts[r] > parts[r - 1]))
        throw Error(ErrorKind::ParseError, "'" + text + "' is not a diagram in the box");
      int i = m - 1 - static_cast<int>(r);
      for (int j = 0; j < parts[r]; ++j) {
        int id = rs.find(unit_weight(rs.rank(), i) - unit_weight(rs.rank(), m + j));
        std::replace(odd.begin(), odd.end(), id, rs.negate(id));
      }
    }
    std::sort(odd.begin(), odd.end());
    int k = en.find(odd);
    if (k < 0) throw Error(ErrorKind::ParseError, "no Borel for diagram '" + text + "'");
    return k;
  }
  throw Error(ErrorKind::ParseError, "cannot read Borel address '" + text + "'");
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

const char* const kPalette[] = {"black", "red", "blue", "darkgreen", "orange", "purple",
                                "brown", "magenta", "cyan4", "gold3", "gray40", "navy"};

}  // namespace

std::string export_dot(const ColoredGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    out << "  " << v << " [label=" << quoted(g.vertex_labels[static_cast<std::size_t>(v)]) << "];\n";
  constexpr std::size_t kColors = sizeof(kPalette) / sizeof(kPalette[0]);
  for (const auto& e : g.edges)
    out << "  " << e.u << " -- " << e.v << " [label=" << quoted(g.color_labels[static_cast<std::size_t>(e.c)])
        << ", color=" << kPalette[static_cast<std::size_t>(e.c) % kColors] << "];\n";
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json graph_to_json(const ColoredGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertex_labels;
  j["colors"] = g.color_labels;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"c", e.c}});
  return j;
}

ColoredGraph graph_from_json(const nlohmann::json& j) {
  ColoredGraph g;
  try {
    for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    for (const auto& c : j.at("colors")) g.add_color(c.get<std::string>());
    for (const auto& e : j.at("edges")) {
      int u = e.at("u").get<int>(), v = e.at("v").get<int>(), c = e.at("c").get<int>();
      if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices() || c < 0 || c >= g.num_colors())
        throw Error(ErrorKind::ParseError, "edge index out of range");
      g.add_edge(u, v, c);
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
  return g;
}

std::string family_name(const FamilySpec& s) {
  switch (s.family) {
    case Family::GL: return "gl(" + std::to_string(s.m) + "|" + std::to_string(s.n) + ")";
    case Family::GL11Power: return "gl(1|1)^" + std::to_string(s.n);
    case Family::OspB: return "osp(" + std::to_string(2 * s.m + 1) + "|" + std::to_string(2 * s.n) + ")";
    case Family::OspD: return "osp(" + std::to_string(2 * s.m) + "|" + std::to_string(2 * s.n) + ")";
    case Family::D21: return "D(2,1;" + (s.alpha ? format_rational(*s.alpha) : std::string("a")) + ")";
  }
  return "?";
}

}  // namespace ortk
