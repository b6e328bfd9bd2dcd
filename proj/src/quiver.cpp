#include "ortk/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace ortk {

bool Quiver::composable(const Word& w) const {
  for (std::size_t k = 1; k < w.size(); ++k)
    if (arrows[static_cast<std::size_t>(w[k - 1])].target != arrows[static_cast<std::size_t>(w[k])].source)
      return false;
  return true;
}

Word Quiver::parse_word(const std::string& text) const {
  std::vector<std::string> names;
  if (text.find('.') != std::string::npos) {
    std::istringstream ss(text);
    for (std::string tok; std::getline(ss, tok, '.');) names.push_back(tok);
  } else {
    for (char ch : text) names.emplace_back(1, ch);
  }
  Word w;
  for (const auto& n : names) {
    auto it = std::find_if(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.name == n; });
    if (it == arrows.end()) throw Error(ErrorKind::ParseError, "unknown arrow '" + n + "'");
    w.push_back(static_cast<int>(it - arrows.begin()));
  }
  if (!composable(w)) throw Error(ErrorKind::ParseError, "word '" + text + "' is not a path");
  return w;
}

std::string Quiver::word_name(const Word& w) const {
  bool wide = std::any_of(arrows.begin(), arrows.end(), [](const Arrow& a) { return a.name.size() > 1; });
  std::string out;
  for (int a : w) {
    if (wide && !out.empty()) out += '.';
    out += arrows[static_cast<std::size_t>(a)].name;
  }
  return out;
}

namespace {

Quiver from_table(const std::vector<std::string>& vertices, const std::vector<Arrow>& arrows,
                  const std::vector<std::string>& zeros, const std::vector<std::pair<std::string, std::string>>& comms) {
  Quiver q{vertices, arrows, {}, {}};
  for (const auto& z : zeros) q.zero_relations.push_back(q.parse_word(z));
  for (const auto& [l, r] : comms) q.commutation_relations.emplace_back(q.parse_word(l), q.parse_word(r));
  return q;
}

}  // namespace

Quiver build_quiver(QuiverPreset preset, int window) {
  switch (preset) {
    case QuiverPreset::PreprojectiveA2:
      return from_table({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}, {"ab", "ba"}, {});
    case QuiverPreset::Chain3:
      return from_table({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 0}, {"c", 1, 2}, {"d", 2, 1}},
                        {"ab", "ba", "cd", "dc"}, {});
    case QuiverPreset::Square4:
      return from_table({"1", "2", "3", "4"},
                        {{"a", 1, 0}, {"b", 0, 1}, {"c", 1, 2}, {"d", 2, 1},
                         {"e", 3, 0}, {"f", 0, 3}, {"g", 3, 2}, {"h", 2, 3}},
                        {"ab", "ba", "cd", "dc", "gh", "hg", "ef", "fe",
                         "bch", "che", "heb", "ebc", "afg", "fgd", "gda", "daf"},
                        {{"af", "ch"}, {"eb", "gd"}, {"bc", "fg"}, {"da", "he"}});
    case QuiverPreset::ZigzagWindow: {
      if (window < 2) throw Error(ErrorKind::PreconditionViolated, "zigzag window needs w >= 2");
      const int w = window;
      Quiver q;
      auto vid = [&](int i) { return i + w; };
      for (int i = -w; i <= w; ++i) q.vertices.push_back(std::to_string(i));
      std::map<std::string, int> idx;
      for (int i = -w + 1; i <= w; ++i) {
        idx["a" + std::to_string(i)] = static_cast<int>(q.arrows.size());
        q.arrows.push_back({"a" + std::to_string(i), vid(i - 1), vid(i)});
        idx["b" + std::to_string(i)] = static_cast<int>(q.arrows.size());
        q.arrows.push_back({"b" + std::to_string(i), vid(i), vid(i - 1)});
      }
      auto a = [&](int i) { return idx.at("a" + std::to_string(i)); };
      auto b = [&](int i) { return idx.at("b" + std::to_string(i)); };
      auto has = [&](int i) { return i >= -w + 1 && i <= w; };
      for (int i = -w + 1; i <= w; ++i) {
        if (has(i - 1)) q.commutation_relations.push_back({{a(i), b(i)}, {b(i - 1), a(i - 1)}});
        if (has(i + 1)) {
          q.zero_relations.push_back({a(i), a(i + 1)});
          q.zero_relations.push_back({b(i + 1), b(i)});
        }
      }
      return q;
    }
  }
  return {};
}

namespace {

using Key = std::tuple<int, int, int>;  // source, target, length

std::map<Key, std::vector<Word>> all_paths(const Quiver& q, int max_len) {
  std::map<Key, std::vector<Word>> out;
  const int nv = static_cast<int>(q.vertices.size());
  for (int s = 0; s < nv; ++s) {
    Word w;
    std::function<void(int)> rec = [&](int at) {
      out[{s, at, static_cast<int>(w.size())}].push_back(w);
      if (static_cast<int>(w.size()) == max_len) return;
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != at) continue;
        w.push_back(static_cast<int>(a));
        rec(q.arrows[a].target);
        w.pop_back();
      }
    };
    rec(s);
  }
  return out;
}

struct Relation {
  std::vector<std::pair<Word, Rational>> terms;
  int source;
  int target;
  int length;
};

std::vector<Relation> relations_of(const Quiver& q) {
  std::vector<Relation> out;
  for (const auto& z : q.zero_relations)
    out.push_back({{{z, Rational(1)}}, q.source(z, -1), q.target(z, -1), static_cast<int>(z.size())});
  for (const auto& [l, r] : q.commutation_relations)
    out.push_back({{{l, Rational(1)}, {r, Rational(-1)}}, q.source(l, -1), q.target(l, -1), static_cast<int>(l.size())});
  return out;
}

Word concat(const Word& u, const Word& r, const Word& v) {
  Word w = u;
  w.insert(w.end(), r.begin(), r.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

// Calls f(u, v) for every context u . rel . v landing in block (s, t, len).
void for_each_context(const std::map<Key, std::vector<Word>>& paths, const Relation& rel, int s, int t, int len,
                      const std::function<void(const Word&, const Word&)>& f) {
  for (int p = 0; p + rel.length <= len; ++p) {
    auto ul = paths.find({s, rel.source, p});
    auto vl = paths.find({rel.target, t, len - rel.length - p});
    if (ul == paths.end() || vl == paths.end()) continue;
    for (const auto& u : ul->second)
      for (const auto& v : vl->second) f(u, v);
  }
}

void validate(const Quiver& q) {
  for (const auto& z : q.zero_relations)
    if (z.empty() || !q.composable(z)) throw Error(ErrorKind::PreconditionViolated, "zero relation is not a path");
  for (const auto& [l, r] : q.commutation_relations) {
    if (l.empty() || r.empty() || !q.composable(l) || !q.composable(r))
      throw Error(ErrorKind::PreconditionViolated, "commutation side is not a path");
    if (q.source(l, -1) != q.source(r, -1) || q.target(l, -1) != q.target(r, -1) || l.size() != r.size())
      throw Error(ErrorKind::PreconditionViolated, "commutation sides do not share endpoints and length");
  }
}

}  // namespace

PathAlgebra::PathAlgebra(const Quiver& q, int max_len) : q_(q), max_len_(max_len) {
  validate(q);
  const auto paths = all_paths(q, max_len + 1);
  const auto rels = relations_of(q);
  for (const auto& [key, list] : paths) {
    auto [s, t, len] = key;
    Block blk;
    blk.paths = list;
    std::sort(blk.paths.begin(), blk.paths.end(), std::greater<>());
    std::map<Word, Eigen::Index> col;
    for (std::size_t k = 0; k < blk.paths.size(); ++k) col[blk.paths[k]] = static_cast<Eigen::Index>(k);
    std::vector<std::vector<std::pair<Eigen::Index, Rational>>> rows;
    for (const auto& rel : rels)
      for_each_context(paths, rel, s, t, len, [&](const Word& u, const Word& v) {
        std::vector<std::pair<Eigen::Index, Rational>> row;
        for (const auto& [w, c] : rel.terms) row.emplace_back(col.at(concat(u, w, v)), c);
        rows.push_back(std::move(row));
      });
    blk.rref = RMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(blk.paths.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, x] : rows[r]) blk.rref(static_cast<Eigen::Index>(r), c) += x;
    blk.pivots = rref(blk.rref);
    blocks_.emplace(key, std::move(blk));
  }
  for (const auto& [key, blk] : blocks_)
    if (std::get<2>(key) == max_len + 1 && blk.paths.size() != blk.pivots.size())
      throw Error(ErrorKind::BasisNotStabilized,
                  "paths of length " + std::to_string(max_len + 1) + " survive from " +
                      q.vertices[static_cast<std::size_t>(std::get<0>(key))] + " to " +
                      q.vertices[static_cast<std::size_t>(std::get<1>(key))]);
}

int PathAlgebra::dimension(int s, int t, int len) const {
  auto it = blocks_.find({s, t, len});
  if (it == blocks_.end()) return 0;
  return static_cast<int>(it->second.paths.size() - it->second.pivots.size());
}

std::vector<PathClass> PathAlgebra::basis(int s, int t) const {
  std::vector<PathClass> out;
  for (int len = 0; len <= max_len_; ++len) {
    auto it = blocks_.find({s, t, len});
    if (it == blocks_.end()) continue;
    const Block& blk = it->second;
    std::vector<Word> free;
    for (std::size_t k = 0; k < blk.paths.size(); ++k)
      if (std::find(blk.pivots.begin(), blk.pivots.end(), static_cast<Eigen::Index>(k)) == blk.pivots.end())
        free.push_back(blk.paths[k]);
    std::sort(free.begin(), free.end());
    for (auto& w : free) out.push_back({std::move(w), s, t});
  }
  return out;
}

std::map<Word, Rational> PathAlgebra::reduce(const Word& w, int at) const {
  const int s = q_.source(w, at), t = q_.target(w, at), len = static_cast<int>(w.size());
  std::map<Word, Rational> out;
  auto it = blocks_.find({s, t, len});
  if (it == blocks_.end()) return out;  // longer than the stabilized range: zero
  const Block& blk = it->second;
  auto pos = std::find(blk.paths.begin(), blk.paths.end(), w);
  if (pos == blk.paths.end()) throw Error(ErrorKind::PreconditionViolated, "word is not a path");
  const auto col = static_cast<Eigen::Index>(pos - blk.paths.begin());
  auto piv = std::find(blk.pivots.begin(), blk.pivots.end(), col);
  if (piv == blk.pivots.end()) {
    out[w] = 1;
    return out;
  }
  const auto row = static_cast<Eigen::Index>(piv - blk.pivots.begin());
  for (Eigen::Index j = 0; j < blk.rref.cols(); ++j) {
    if (j == col || blk.rref(row, j) == 0) continue;
    out[blk.paths[static_cast<std::size_t>(j)]] = -blk.rref(row, j);
  }
  return out;
}

std::map<std::pair<int, int>, std::vector<PathClass>> path_normal_forms(const Quiver& q, int max_len) {
  PathAlgebra a(q, max_len);
  std::map<std::pair<int, int>, std::vector<PathClass>> out;
  const int nv = static_cast<int>(q.vertices.size());
  for (int s = 0; s < nv; ++s)
    for (int t = 0; t < nv; ++t) out[{s, t}] = a.basis(s, t);
  return out;
}

HomMatrix hom_dimensions(const Quiver& q, int max_len) {
  PathAlgebra a(q, max_len);
  const int nv = static_cast<int>(q.vertices.size());
  HomMatrix m(static_cast<std::size_t>(nv), std::vector<int>(static_cast<std::size_t>(nv), 0));
  for (int s = 0; s < nv; ++s)
    for (int t = 0; t < nv; ++t)
      for (int len = 0; len <= max_len; ++len) m[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] += a.dimension(s, t, len);
  return m;
}

HomMatrix oracle_hom_dimensions(const Quiver& q, int max_len) {
  validate(q);
  const auto paths = all_paths(q, max_len + 1);
  const int nv = static_cast<int>(q.vertices.size());
  HomMatrix m(static_cast<std::size_t>(nv), std::vector<int>(static_cast<std::size_t>(nv), 0));
  for (const auto& [key, list] : paths) {
    auto [s, t, len] = key;
    std::map<Word, int> id;
    for (const auto& w : list) id.emplace(w, static_cast<int>(id.size()));
    std::vector<int> parent(list.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    std::vector<char> zero(list.size(), 0);
    for (const auto& z : q.zero_relations) {
      Relation rel{{}, q.source(z, -1), q.target(z, -1), static_cast<int>(z.size())};
      for_each_context(paths, rel, s, t, len,
                       [&](const Word& u, const Word& v) { zero[static_cast<std::size_t>(id.at(concat(u, z, v)))] = 1; });
    }
    for (const auto& [l, r] : q.commutation_relations) {
      Relation rel{{}, q.source(l, -1), q.target(l, -1), static_cast<int>(l.size())};
      for_each_context(paths, rel, s, t, len, [&](const Word& u, const Word& v) {
        int x = root(id.at(concat(u, l, v))), y = root(id.at(concat(u, r, v)));
        if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
      });
    }
    std::map<int, bool> class_zero;
    for (std::size_t k = 0; k < list.size(); ++k) {
      int c = root(static_cast<int>(k));
      class_zero[c] = class_zero[c] || zero[k];
    }
    for (const auto& [c, z] : class_zero)
      if (!z) ++m[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
  }
  return m;
}

bool relations_sound(const PathAlgebra& a) {
  const Quiver& q = a.quiver();
  for (const auto& z : q.zero_relations)
    if (!a.reduce(z, -1).empty()) return false;
  for (const auto& [l, r] : q.commutation_relations)
    if (a.reduce(l, -1) != a.reduce(r, -1)) return false;
  return true;
}

}  // namespace ortk
