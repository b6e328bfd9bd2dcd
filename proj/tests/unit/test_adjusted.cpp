#include <doctest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "ortk/adjusted.hpp"
#include "ortk/orgraph.hpp"
#include "ortk/text.hpp"
#include "ortk/verify.hpp"

using namespace ortk;

namespace {

std::vector<std::vector<int>> js(const std::vector<HypercubicCollection>& cs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cs) out.push_back(c.j);
  return out;
}

std::set<std::string> names(const RootSystem& rs, const std::vector<int>& ids) {
  auto v = root_names(rs, ids);
  return {v.begin(), v.end()};
}

// Direct reading of the definition over all pairs of roots.
bool adjusted_oracle(const RootSystem& rs, const std::vector<int>& delta_a, const Weight& lambda) {
  std::set<int> in(rs.even_positive.begin(), rs.even_positive.end());
  in.insert(delta_a.begin(), delta_a.end());
  for (int a : in)
    for (int b : in) {
      int s = rs.find(rs.vec(a) + rs.vec(b));
      if (s >= 0 && !in.count(s)) return false;
    }
  for (int a : delta_a)
    if (std::count(delta_a.begin(), delta_a.end(), rs.negate(a)) && !rs.orthogonal(lambda, rs.vec(a))) return false;
  return true;
}

nlohmann::json small_grid() { return {{"seed", 3}, {"random", 2}, {"range", 2}, {"orthogonal", 3}}; }

}  // namespace

TEST_SUITE("adjusted") {
  TEST_CASE("adjusted Borels of gl(1|1)") {
    auto rs = build_root_system(FamilySpec::gl(1, 1));
    auto b = standard_borel(rs);
    CHECK(is_lambda_adjusted(rs, rs.delta1, zero_weight(2)));
    CHECK_FALSE(is_lambda_adjusted(rs, rs.delta1, make_weight({1, 0})));
    CHECK(is_lambda_adjusted(rs, {}, make_weight({3, -1})));
    CHECK(is_lambda_adjusted(rs, b.odd_positive, make_weight({3, -1})));
  }

  TEST_CASE("property: adjusted predicate matches the definition") {
    for (auto spec : {FamilySpec::gl(2, 1), FamilySpec::gl(1, 2), FamilySpec::osp_b(1, 1)}) {
      auto rs = build_root_system(spec);
      for (int trial = 0; trial < 150; ++trial) {
        std::vector<int> a;
        for (int id : rs.delta1)
          if (gen::integer(0, 2) == 0) a.push_back(id);
        Weight lambda = gen::integer(0, 1) ? zero_weight(rs.rank()) : gen::weight(rs.rank(), 1);
        CHECK(is_lambda_adjusted(rs, a, lambda) == adjusted_oracle(rs, a, lambda));
      }
    }
  }

  TEST_CASE("hypercubic collections") {
    auto q = build_root_system(FamilySpec::gl11_power(3));
    CHECK(hypercubic_collections(q, standard_borel(q), zero_weight(q.rank())).size() == 8);

    auto rs = build_root_system(FamilySpec::gl(2, 2));
    auto og = build_or_graph(rs);
    const Borel& b1 = og.borel(og.graph.find_vertex("1"));
    CHECK(js(hypercubic_collections(rs, b1, zero_weight(4))) ==
          std::vector<std::vector<int>>{{}, {1}, {2}, {3}, {1, 3}});

    auto g = build_root_system(FamilySpec::gl(1, 1));
    CHECK(js(hypercubic_collections(g, standard_borel(g), make_weight({1, 0}))) == std::vector<std::vector<int>>{{}});
  }

  TEST_CASE("meet and join") {
    auto g = build_root_system(FamilySpec::gl(1, 1));
    auto b = standard_borel(g);
    auto [meet, join] = borel_meet_join(g, b, make_collection(g, b, {1}));
    CHECK(meet.delta_a.empty());
    CHECK(join.delta_a == g.delta1);
    CHECK(names(g, join.delta_a).count("e1-d1"));
    auto [m0, j0] = borel_meet_join(g, b, make_collection(g, b, {}));
    CHECK(m0.delta_a == b.odd_positive);
    CHECK(j0.delta_a == b.odd_positive);

    auto rs = build_root_system(FamilySpec::gl(2, 2));
    auto og = build_or_graph(rs);
    const Borel& b1 = og.borel(og.graph.find_vertex("1"));
    auto [m13, j13] = borel_meet_join(rs, b1, make_collection(rs, b1, {1, 3}));
    auto before = names(rs, b1.odd_positive), after = names(rs, m13.delta_a);
    CHECK(before.size() == after.size() + 2);
    CHECK_FALSE(after.count("e1-d1"));
    CHECK_FALSE(after.count("e2-d2"));
    CHECK(j13.delta_a.size() == b1.odd_positive.size() + 2);
  }

  TEST_CASE("brick decompositions") {
    auto q = build_root_system(FamilySpec::gl11_power(2));
    auto b = standard_borel(q);
    auto j = make_collection(q, b, {1, 2});
    auto r = brick_decomposition_check(q, b, zero_weight(q.rank()), j);
    CHECK(r.holds);
    CHECK(r.bricks == 16);
    auto [meet, join] = borel_meet_join(q, b, j);
    CHECK(total_dimension(verma_character(q, meet.delta_a, zero_weight(q.rank())), q) == 16);
    CHECK(total_dimension(verma_character(q, join.delta_a, zero_weight(q.rank())), q) == 1);
    CHECK(brick_decomposition_check(q, b, zero_weight(q.rank()), make_collection(q, b, {})).holds);

    auto rs = build_root_system(FamilySpec::gl(2, 2));
    auto og = build_or_graph(rs);
    const Borel& b1 = og.borel(og.graph.find_vertex("1"));
    CHECK(brick_decomposition_check(rs, b1, zero_weight(4), make_collection(rs, b1, {1, 3})).holds);
  }

  TEST_CASE("splitting criterion") {
    auto g = build_root_system(FamilySpec::gl(1, 1));
    auto b = standard_borel(g);
    auto s0 = split_criterion(g, b, zero_weight(2), 1);
    CHECK_FALSE(s0.decomposable);
    CHECK(s0.identities_hold);
    auto s1 = split_criterion(g, b, make_weight({1, 0}), 1);
    CHECK(s1.decomposable);
    CHECK(s1.identities_hold);

    auto rs = build_root_system(FamilySpec::gl(2, 2));
    auto og = build_or_graph(rs);
    const Borel& b1 = og.borel(og.graph.find_vertex("1"));
    CHECK_FALSE(split_criterion(rs, b1, zero_weight(4), 1).decomposable);
    try {
      split_criterion(rs, standard_borel(rs), zero_weight(4), 1);
      FAIL("expected NotIsotropicSimple");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotIsotropicSimple);
    }
  }

  TEST_CASE("semibricks") {
    auto g = build_root_system(FamilySpec::gl(1, 1));
    const Weight alpha = g.vec(standard_borel(g).simple_root(1));
    std::vector<Brick> window;
    for (int n = -2; n <= 2; ++n) {
      Weight h = alpha * Rational(n);
      window.push_back({h, verma_character(g, g.delta1, h)});
    }
    CHECK(semibrick_character_check(g, window));
    CHECK_FALSE(semibrick_character_check(g, {window[0], window[0]}));
    Brick unnormalized{make_weight({5, 5}), window[1].character};
    try {
      semibrick_character_check(g, {window[0], unnormalized});
      FAIL("expected PreconditionViolated");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PreconditionViolated);
    }

    auto rs = build_root_system(FamilySpec::gl(2, 2));
    auto og = build_or_graph(rs);
    const Borel& b1 = og.borel(og.graph.find_vertex("1"));
    auto j = make_collection(rs, b1, {1, 3});
    auto join = borel_meet_join(rs, b1, j).second;
    std::vector<Brick> v;
    for (int m1 = -1; m1 <= 1; ++m1)
      for (int m3 = -1; m3 <= 1; ++m3) {
        Weight h = rs.vec(j.roots[0]) * Rational(m1) + rs.vec(j.roots[1]) * Rational(m3);
        v.push_back({h, verma_character(rs, join.delta_a, h)});
      }
    CHECK(semibrick_character_check(rs, v));
  }

  TEST_CASE("property: hypercubic collections on the sweep") {
    for (auto spec : {FamilySpec::gl(2, 1), FamilySpec::gl(2, 2), FamilySpec::gl11_power(2), FamilySpec::gl11_power(3),
                      FamilySpec::osp_b(1, 1), FamilySpec::d21()}) {
      auto rs = build_root_system(spec);
      auto og = build_or_graph(rs);
      CAPTURE(family_name(spec));
      for (const auto& lambda : lambda_grid(rs, og, small_grid(), 1))
        for (const auto& b : og.borels.borels) {
          auto all = hypercubic_collections(rs, b, lambda);
          std::set<std::vector<int>> found;
          for (const auto& c : all) found.insert(c.j);
          for (const auto& c : all) {
            // Every subset is itself hypercubic.
            for (unsigned mask = 0; mask < (1u << c.j.size()); ++mask) {
              std::vector<int> sub;
              for (std::size_t k = 0; k < c.j.size(); ++k)
                if (mask >> k & 1) sub.push_back(c.j[k]);
              CHECK(found.count(sub));
              // Shift stability by the sub-collection sums.
              Weight s = make_collection(rs, b, sub).sigma;
              CHECK(is_hypercubic(rs, b, lambda + s, c.j));
              CHECK(is_hypercubic(rs, b, lambda - s, c.j));
            }
            Borel r = reflect_all(rs, b, c.j);
            auto back = make_collection(rs, r, c.j);
            CHECK(back.sigma == -c.sigma);
            CHECK(characters_equal(verma_character(rs, b, lambda), verma_character(rs, r, lambda - c.sigma)));
            auto [meet, join] = borel_meet_join(rs, b, c);
            CHECK(is_lambda_adjusted(rs, meet.delta_a, lambda));
            CHECK(is_lambda_adjusted(rs, join.delta_a, lambda));
            if (c.j.size() > 3) continue;
            auto bricks = brick_decomposition_check(rs, b, lambda, c);
            CHECK(bricks.holds);
            CHECK(bricks.bricks == (std::size_t{1} << (2 * c.j.size())));
          }
        }
    }
  }
}
