#ifndef ORTK_CHARACTERS_HPP
#define ORTK_CHARACTERS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ortk/rootsys.hpp"

namespace ortk {

// Numerator of a character over the common denominator prod_{Delta_0^+}(1 - e^{-gamma}).
struct NumeratorCharacter {
  std::map<Weight, std::int64_t, WeightLess> terms;

  void add(const Weight& w, std::int64_t c);
  std::int64_t coefficient(const Weight& w) const;
  NumeratorCharacter& operator+=(const NumeratorCharacter& o);
  friend bool operator==(const NumeratorCharacter& a, const NumeratorCharacter& b) { return a.terms == b.terms; }
};

// e^lambda prod_{beta in Delta_1 \ delta_a}(1 + e^beta).
NumeratorCharacter verma_character(const RootSystem& rs, const std::vector<int>& delta_a, const Weight& lambda);
NumeratorCharacter verma_character(const RootSystem& rs, const Borel& b, const Weight& lambda);

bool characters_equal(const NumeratorCharacter& a, const NumeratorCharacter& b);

// Kostant partition function of the even positive roots.
class KostantCounter {
 public:
  explicit KostantCounter(const RootSystem& rs);
  std::uint64_t operator()(const Weight& v) const;
  // Coordinates in the even simple basis, if v lies in its span.
  std::optional<Weight> even_coordinates(const Weight& v) const;

 private:
  const RootSystem& rs_;
  std::vector<Eigen::Index> pivot_rows_;
  RMatrix basis_;      // columns: even simple roots
  RMatrix pivot_inv_;  // inverse of the pivot-row block
  std::vector<std::vector<std::int64_t>> roots_;  // even positives in simple coordinates
};

std::uint64_t kostant_partitions(const RootSystem& rs, const Weight& v);

struct MultiplicityQuery {
  std::vector<int> free_odd;
  Weight base;
  Weight target;
};

std::uint64_t weight_multiplicity(const RootSystem& rs, const MultiplicityQuery& q);
std::uint64_t weight_multiplicity(const KostantCounter& k, const RootSystem& rs, const MultiplicityQuery& q);
// Coefficient of e^target in the expanded character.
std::int64_t character_multiplicity(const KostantCounter& k, const NumeratorCharacter& c, const Weight& target);

// Coefficient of e^target read off the series numerator * prod_{Delta_0^+} (1 + e^{-gamma} + ...)
// expanded by brute force up to total height `depth`; nullopt when some term lies deeper.
std::optional<std::int64_t> truncated_series_multiplicity(const RootSystem& rs, const NumeratorCharacter& c,
                                                          const Weight& target, int depth);

// Query for M^b(lambda) at `target`.
MultiplicityQuery verma_query(const RootSystem& rs, const Borel& b, const Weight& lambda, const Weight& target);

// Is v in Z_{>=0} roots? With `pbw`, odd roots may be used at most once.
bool cone_membership(const RootSystem& rs, const Weight& v, const std::vector<int>& roots, bool pbw = false);

std::vector<Weight> kac_flag_constituents(const RootSystem& rs, const Borel& b, const Weight& lambda);

// nullopt means infinite.
std::optional<std::int64_t> total_dimension(const NumeratorCharacter& c, const RootSystem& rs);

// Height relative to the simple roots of b.
Rational borel_height(const RootSystem& rs, const Borel& b, const Weight& v);

}  // namespace ortk

#endif
