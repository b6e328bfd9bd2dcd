#include "ortk/adjusted.hpp"

#include <algorithm>

namespace ortk {

bool is_lambda_adjusted(const RootSystem& rs, const std::vector<int>& delta_a, const Weight& lambda) {
  std::vector<char> in(static_cast<std::size_t>(rs.size()), 0);
  for (int id : rs.even_positive) in[static_cast<std::size_t>(id)] = 1;
  for (int id : delta_a) in[static_cast<std::size_t>(id)] = 1;
  std::vector<int> all = rs.even_positive;
  all.insert(all.end(), delta_a.begin(), delta_a.end());
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t c = a; c < all.size(); ++c) {
      int s = rs.find(rs.vec(all[a]) + rs.vec(all[c]));
      if (s >= 0 && !in[static_cast<std::size_t>(s)]) return false;
    }
  for (int id : delta_a) {
    int neg = rs.negate(id);
    if (in[static_cast<std::size_t>(neg)] && !rs.orthogonal(lambda, rs.vec(id))) return false;
  }
  return true;
}

HypercubicCollection make_collection(const RootSystem& rs, const Borel& b, const std::vector<int>& j) {
  HypercubicCollection h{j, zero_weight(rs.rank()), {}};
  for (int i : j) {
    h.roots.push_back(b.simple_root(i));
    h.sigma += rs.vec(b.simple_root(i));
  }
  return h;
}

bool is_hypercubic(const RootSystem& rs, const Borel& b, const Weight& lambda, const std::vector<int>& j) {
  for (std::size_t x = 0; x < j.size(); ++x) {
    if (!is_isotropic_simple(rs, b, j[x])) return false;
    const Weight& a = rs.vec(b.simple_root(j[x]));
    if (!rs.orthogonal(lambda, a)) return false;
    for (std::size_t y = 0; y < x; ++y) {
      if (j[y] == j[x] || !rs.orthogonal(a, rs.vec(b.simple_root(j[y])))) return false;
    }
  }
  return true;
}

std::vector<HypercubicCollection> hypercubic_collections(const RootSystem& rs, const Borel& b, const Weight& lambda) {
  std::vector<int> candidates;
  for (int i = 1; i <= b.theta(); ++i)
    if (is_hypercubic(rs, b, lambda, {i})) candidates.push_back(i);
  std::vector<std::vector<int>> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
    std::vector<int> j;
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if ((mask >> k) & 1) j.push_back(candidates[k]);
    if (is_hypercubic(rs, b, lambda, j)) found.push_back(std::move(j));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& c) {
    return a.size() != c.size() ? a.size() < c.size() : a < c;
  });
  std::vector<HypercubicCollection> out;
  for (const auto& j : found) out.push_back(make_collection(rs, b, j));
  return out;
}

Borel reflect_all(const RootSystem& rs, const Borel& b, const std::vector<int>& j) {
  Borel out = b;
  for (int i : j) out = odd_reflect(rs, out, i);
  return out;
}

std::pair<AdjustedBorel, AdjustedBorel> borel_meet_join(const RootSystem& rs, const Borel& b,
                                                        const HypercubicCollection& j) {
  AdjustedBorel meet{{}, b}, join{b.odd_positive, b};
  for (int id : b.odd_positive)
    if (std::find(j.roots.begin(), j.roots.end(), id) == j.roots.end()) meet.delta_a.push_back(id);
  for (int id : j.roots) join.delta_a.push_back(rs.negate(id));
  std::sort(join.delta_a.begin(), join.delta_a.end());
  return {meet, join};
}

BrickCheck brick_decomposition_check(const RootSystem& rs, const Borel& b, const Weight& lambda,
                                     const HypercubicCollection& j) {
  auto [meet, join] = borel_meet_join(rs, b, j);
  NumeratorCharacter lhs = verma_character(rs, meet.delta_a, lambda);
  NumeratorCharacter rhs;
  const std::size_t n = j.roots.size();
  BrickCheck out;
  for (std::uint64_t m1 = 0; m1 < (std::uint64_t{1} << n); ++m1)
    for (std::uint64_t m2 = 0; m2 < (std::uint64_t{1} << n); ++m2) {
      Weight mu = lambda;
      for (std::size_t k = 0; k < n; ++k) {
        if ((m1 >> k) & 1) mu -= rs.vec(j.roots[k]);
        if ((m2 >> k) & 1) mu += rs.vec(j.roots[k]);
      }
      rhs += verma_character(rs, join.delta_a, mu);
      ++out.bricks;
    }
  out.holds = lhs == rhs;
  return out;
}

SplitVerdict split_criterion(const RootSystem& rs, const Borel& b, const Weight& lambda, int i) {
  if (!is_isotropic_simple(rs, b, i)) throw Error(ErrorKind::NotIsotropicSimple, "simple index " + std::to_string(i));
  const int a = b.simple_root(i);
  const Weight& alpha = rs.vec(a);
  const Borel rb = odd_reflect(rs, b, i);
  std::vector<int> meet;
  for (int id : b.odd_positive)
    if (id != a) meet.push_back(id);
  NumeratorCharacter mid = verma_character(rs, meet, lambda);
  NumeratorCharacter via_reflected = verma_character(rs, rb, lambda - alpha);
  via_reflected += verma_character(rs, rb, lambda);
  NumeratorCharacter via_original = verma_character(rs, b, lambda + alpha);
  via_original += verma_character(rs, b, lambda);
  return {!rs.orthogonal(lambda, alpha), mid == via_reflected && mid == via_original};
}

bool semibrick_character_check(const RootSystem& rs, const std::vector<Brick>& bricks) {
  KostantCounter k(rs);
  for (const auto& b : bricks)
    if (character_multiplicity(k, b.character, b.highest) != 1)
      throw Error(ErrorKind::PreconditionViolated, "brick character is not normalized at its highest weight");
  for (std::size_t x = 0; x < bricks.size(); ++x)
    for (std::size_t y = 0; y < bricks.size(); ++y)
      if (x != y && character_multiplicity(k, bricks[x].character, bricks[y].highest) != 0) return false;
  return true;
}

}  // namespace ortk
