#include <doctest.h>

#include "generators.hpp"
#include "ortk/quiver.hpp"

using namespace ortk;

namespace {

int total(const HomMatrix& h) {
  int t = 0;
  for (const auto& row : h)
    for (int x : row) t += x;
  return t;
}

bool symmetric(const HomMatrix& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      if (h[i][j] != h[j][i]) return false;
  return true;
}

// Random quiver on a few vertices, made finite by killing every path of length 3.
Quiver random_quiver() {
  Quiver q;
  const int nv = gen::integer(1, 3);
  for (int v = 0; v < nv; ++v) q.vertices.push_back(std::to_string(v + 1));
  const int na = gen::integer(1, 4);
  for (int a = 0; a < na; ++a)
    q.arrows.push_back({std::string(1, static_cast<char>('a' + a)), gen::integer(0, nv - 1), gen::integer(0, nv - 1)});
  std::vector<Word> twos;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y)
      if (q.composable({x, y})) twos.push_back({x, y});
  for (const auto& w : twos)
    if (gen::integer(0, 2) == 0) q.zero_relations.push_back(w);
  for (std::size_t i = 0; i < twos.size(); ++i)
    for (std::size_t j = i + 1; j < twos.size(); ++j)
      if (q.source(twos[i], 0) == q.source(twos[j], 0) && q.target(twos[i], 0) == q.target(twos[j], 0) &&
          gen::integer(0, 3) == 0)
        q.commutation_relations.push_back({twos[i], twos[j]});
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y)
      for (int z = 0; z < na; ++z)
        if (q.composable({x, y, z})) q.zero_relations.push_back({x, y, z});
  return q;
}

}  // namespace

TEST_SUITE("quiver") {
  TEST_CASE("preset shapes") {
    auto z = build_quiver(QuiverPreset::ZigzagWindow, 2);
    CHECK(z.vertices.size() == 5);
    CHECK(z.arrows.size() == 8);
    CHECK(build_quiver(QuiverPreset::PreprojectiveA2).arrows.size() == 2);
    CHECK(build_quiver(QuiverPreset::Chain3).vertices.size() == 3);
    CHECK(build_quiver(QuiverPreset::Square4).arrows.size() == 8);
    try {
      build_quiver(QuiverPreset::ZigzagWindow, 1);
      FAIL("expected PreconditionViolated");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PreconditionViolated);
    }
  }

  TEST_CASE("words") {
    auto q = build_quiver(QuiverPreset::Square4);
    CHECK(q.word_name(q.parse_word("bc")) == "bc");
    CHECK(q.composable(q.parse_word("bch")));
    CHECK_FALSE(q.composable({1, 1}));
    try {
      q.parse_word("bb");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
    auto z = build_quiver(QuiverPreset::ZigzagWindow, 2);
    auto w = z.parse_word("a1.b1");
    CHECK(w.size() == 2);
    CHECK(z.word_name(w) == "a1.b1");
  }

  TEST_CASE("preprojective algebra of A2") {
    auto q = build_quiver(QuiverPreset::PreprojectiveA2);
    PathAlgebra a(q, 4);
    CHECK(a.basis(0, 0).size() == 1);
    CHECK(a.basis(0, 0)[0].representative.empty());
    CHECK(q.word_name(a.basis(0, 1)[0].representative) == "a");
    CHECK(q.word_name(a.basis(1, 0)[0].representative) == "b");
    CHECK(a.reduce(q.parse_word("ab"), 0).empty());
    CHECK(total(hom_dimensions(q)) == 4);
    CHECK(relations_sound(a));
  }

  TEST_CASE("zigzag interior is stable") {
    for (int w : {3, 4}) {
      auto q = build_quiver(QuiverPreset::ZigzagWindow, w);
      auto h = hom_dimensions(q);
      const std::size_t c = static_cast<std::size_t>(w);  // index of vertex 0
      CHECK(h[c][c] == 2);
      CHECK(h[c][c + 1] == 1);
      CHECK(h[c][c - 1] == 1);
      CHECK(h[c][c + 2] == 0);
      CHECK(h[c][c - 2] == 0);
      CHECK(h == oracle_hom_dimensions(q, 4));
    }
  }

  TEST_CASE("chain and square") {
    auto chain = build_quiver(QuiverPreset::Chain3);
    auto hc = hom_dimensions(chain);
    // The length-two path through the middle vertex survives the relations.
    CHECK(hc[0][2] == 1);
    CHECK(hc[2][0] == 1);
    CHECK(total(hc) == 9);

    auto sq = build_quiver(QuiverPreset::Square4);
    PathAlgebra a(sq, 4);
    CHECK(relations_sound(a));
    auto hs = hom_dimensions(sq);
    CHECK(hs[1][3] == 1);
    CHECK(hs == oracle_hom_dimensions(sq, 4));
    // Commuting squares identify both routes between opposite corners.
    auto r1 = a.reduce(sq.parse_word("af"), 1), r2 = a.reduce(sq.parse_word("ch"), 1);
    CHECK(r1 == r2);
  }

  TEST_CASE("basis must stabilize") {
    auto q = build_quiver(QuiverPreset::ZigzagWindow, 3);
    try {
      PathAlgebra a(q, 1);
      FAIL("expected BasisNotStabilized");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BasisNotStabilized);
    }
  }

  TEST_CASE("property: presets are symmetric and match the oracle") {
    for (auto p : {QuiverPreset::PreprojectiveA2, QuiverPreset::Chain3, QuiverPreset::Square4})
      CHECK(symmetric(hom_dimensions(build_quiver(p))));
    for (int w = 2; w <= 5; ++w) {
      auto q = build_quiver(QuiverPreset::ZigzagWindow, w);
      auto h = hom_dimensions(q);
      CHECK(symmetric(h));
      CHECK(h == oracle_hom_dimensions(q, 4));
    }
  }

  TEST_CASE("property: random bound quivers match the oracle") {
    for (int trial = 0; trial < 200; ++trial) {
      auto q = random_quiver();
      PathAlgebra a(q, 3);
      CHECK(relations_sound(a));
      CHECK(hom_dimensions(q, 3) == oracle_hom_dimensions(q, 3));
      // Every basis class has length at most two.
      for (std::size_t s = 0; s < q.vertices.size(); ++s)
        for (std::size_t t = 0; t < q.vertices.size(); ++t)
          for (const auto& c : a.basis(static_cast<int>(s), static_cast<int>(t)))
            CHECK(c.representative.size() <= 2);
    }
  }
}
