#ifndef ORTK_ROOTSYS_HPP
#define ORTK_ROOTSYS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ortk/numerics.hpp"

namespace ortk {

enum class Family { GL, GL11Power, OspB, OspD, D21 };

struct FamilySpec {
  Family family = Family::GL;
  int m = 0;
  int n = 0;
  std::optional<Rational> alpha;  // D21 only; empty = generic

  static FamilySpec gl(int m, int n) { return {Family::GL, m, n, {}}; }
  static FamilySpec gl11_power(int n) { return {Family::GL11Power, 0, n, {}}; }
  static FamilySpec osp_b(int m, int n) { return {Family::OspB, m, n, {}}; }
  static FamilySpec osp_d(int m, int n) { return {Family::OspD, m, n, {}}; }
  static FamilySpec d21(std::optional<Rational> a = {}) { return {Family::D21, 0, 0, a}; }
};

struct Root {
  Weight vector;
  bool odd = false;
  bool isotropic = false;
};

// Roots are addressed by their index into `roots`; every root set below is a
// sorted vector of such indices.
class RootSystem {
 public:
  FamilySpec spec;
  BilinearForm form;
  std::vector<std::string> basis_labels;
  std::vector<Root> roots;
  std::vector<int> delta0;
  std::vector<int> delta1;
  std::vector<int> delta_iso;
  std::vector<int> even_positive;
  std::vector<int> even_simple;
  bool type_one = false;

  Eigen::Index rank() const { return form.rank(); }
  int size() const { return static_cast<int>(roots.size()); }
  const Weight& vec(int id) const { return roots[static_cast<std::size_t>(id)].vector; }
  const Root& root(int id) const { return roots[static_cast<std::size_t>(id)]; }
  int find(const Weight& v) const;  // -1 when v is not a root
  int negate(int id) const { return neg_[static_cast<std::size_t>(id)]; }
  Scalar inner(const Weight& v, const Weight& w) const { return inner_product(v, w, form); }
  bool orthogonal(const Weight& v, const Weight& w) const { return form.is_zero(inner(v, w)); }

  void index_roots();

 private:
  std::map<Weight, int, WeightLess> index_;
  std::vector<int> neg_;
};

struct Borel {
  std::vector<int> odd_positive;  // sorted
  std::vector<int> simple;        // Pi^b, position k holds simple index k+1
  std::vector<char> positive;     // membership mask over all roots

  bool is_positive(int id) const { return positive[static_cast<std::size_t>(id)] != 0; }
  int theta() const { return static_cast<int>(simple.size()); }
  int simple_root(int i) const { return simple.at(static_cast<std::size_t>(i - 1)); }
  friend bool operator==(const Borel& a, const Borel& b) { return a.odd_positive == b.odd_positive; }
};

RootSystem build_root_system(const FamilySpec& spec);

std::vector<int> indecomposable_roots(const RootSystem& rs, const std::vector<int>& positive);
std::vector<int> positive_roots(const RootSystem& rs, const Borel& b);
Borel standard_borel(const RootSystem& rs);
bool is_isotropic_simple(const RootSystem& rs, const Borel& b, int i);

// Simple indices are 1-based.
Borel odd_reflect(const RootSystem& rs, const Borel& b, int i);

struct ReflectionEdge {
  int from;
  int index;
  int to;
};

struct BorelEnumeration {
  std::vector<Borel> borels;
  std::vector<ReflectionEdge> edges;  // from < to, one per unordered pair and index
  std::map<std::vector<int>, int> index;
  int find(const std::vector<int>& odd_positive) const;  // -1 if absent
};

BorelEnumeration enumerate_borels(const RootSystem& rs);

struct PureRoots {
  std::vector<int> all;        // Delta^{pure+}
  std::vector<int> isotropic;  // Delta_tensor^{pure+}
};
PureRoots pure_positive_roots(const RootSystem& rs, const std::vector<Borel>& borels);

Weight weyl_vector(const RootSystem& rs, const Borel& b);

// Height in the even simple basis; throws NotInSpan outside the even root lattice span.
Rational even_height(const RootSystem& rs, const Weight& v);

}  // namespace ortk

#endif
