#ifndef ORTK_ADJUSTED_HPP
#define ORTK_ADJUSTED_HPP

#include <utility>
#include <vector>

#include "ortk/characters.hpp"
#include "ortk/rootsys.hpp"

namespace ortk {

struct AdjustedBorel {
  std::vector<int> delta_a;  // sorted odd root ids, both signs allowed
  Borel base_borel;
};

struct HypercubicCollection {
  std::vector<int> j;      // simple indices, 1-based, increasing
  Weight sigma;            // sum of the roots
  std::vector<int> roots;  // alpha_j for j in J
};

bool is_lambda_adjusted(const RootSystem& rs, const std::vector<int>& delta_a, const Weight& lambda);

HypercubicCollection make_collection(const RootSystem& rs, const Borel& b, const std::vector<int>& j);
std::vector<HypercubicCollection> hypercubic_collections(const RootSystem& rs, const Borel& b, const Weight& lambda);
bool is_hypercubic(const RootSystem& rs, const Borel& b, const Weight& lambda, const std::vector<int>& j);

// r_J b: reflect at each index of J (the roots are orthogonal, so order is irrelevant).
Borel reflect_all(const RootSystem& rs, const Borel& b, const std::vector<int>& j);

// (b meet r_J b, b join r_J b)
std::pair<AdjustedBorel, AdjustedBorel> borel_meet_join(const RootSystem& rs, const Borel& b,
                                                        const HypercubicCollection& j);

struct BrickCheck {
  bool holds = false;
  std::size_t bricks = 0;
};
BrickCheck brick_decomposition_check(const RootSystem& rs, const Borel& b, const Weight& lambda,
                                     const HypercubicCollection& j);

struct SplitVerdict {
  bool decomposable = false;
  bool identities_hold = false;
};
SplitVerdict split_criterion(const RootSystem& rs, const Borel& b, const Weight& lambda, int i);

struct Brick {
  Weight highest;
  NumeratorCharacter character;
};
bool semibrick_character_check(const RootSystem& rs, const std::vector<Brick>& bricks);

}  // namespace ortk

#endif
