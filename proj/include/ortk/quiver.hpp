#ifndef ORTK_QUIVER_HPP
#define ORTK_QUIVER_HPP

#include <map>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "ortk/numerics.hpp"

namespace ortk {

struct Arrow {
  std::string name;
  int source;
  int target;
};

// Words are read left to right: "ab" is a followed by b.
using Word = std::vector<int>;

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Word> zero_relations;
  std::vector<std::pair<Word, Word>> commutation_relations;

  int source(const Word& w, int empty_at) const { return w.empty() ? empty_at : arrows[static_cast<std::size_t>(w.front())].source; }
  int target(const Word& w, int empty_at) const { return w.empty() ? empty_at : arrows[static_cast<std::size_t>(w.back())].target; }
  bool composable(const Word& w) const;
  Word parse_word(const std::string& text) const;
  std::string word_name(const Word& w) const;
};

enum class QuiverPreset { ZigzagWindow, PreprojectiveA2, Chain3, Square4 };

Quiver build_quiver(QuiverPreset preset, int window = 3);

struct PathClass {
  Word representative;  // empty word = idempotent at source
  int source;
  int target;
};

// Basis of kQ/I by length, from exact rational elimination.
class PathAlgebra {
 public:
  PathAlgebra(const Quiver& q, int max_len);

  const Quiver& quiver() const { return q_; }
  int max_len() const { return max_len_; }
  // dim of the length-l part of e_t A e_s
  int dimension(int s, int t, int len) const;
  std::vector<PathClass> basis(int s, int t) const;
  // Coordinates of a path in the basis of its (s, t, length) block; empty map = zero.
  std::map<Word, Rational> reduce(const Word& w, int at) const;

 private:
  struct Block {
    std::vector<Word> paths;  // columns, largest first
    RMatrix rref;             // relation span in reduced form
    std::vector<Eigen::Index> pivots;
  };
  const Quiver& q_;
  int max_len_;
  std::map<std::tuple<int, int, int>, Block> blocks_;
};

std::map<std::pair<int, int>, std::vector<PathClass>> path_normal_forms(const Quiver& q, int max_len);

using HomMatrix = std::vector<std::vector<int>>;  // [source][target]
HomMatrix hom_dimensions(const Quiver& q, int max_len = 4);

// Independent count: congruence classes of paths under the commutation moves,
// discarding classes that contain a zero-relation subword. Covers lengths 0..max_len+1.
HomMatrix oracle_hom_dimensions(const Quiver& q, int max_len);

// Both sides of every commutation reduce to the same class; zero relations reduce to 0.
bool relations_sound(const PathAlgebra& a);

}  // namespace ortk

#endif
