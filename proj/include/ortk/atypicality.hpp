#ifndef ORTK_ATYPICALITY_HPP
#define ORTK_ATYPICALITY_HPP

#include <optional>
#include <vector>

#include "ortk/orgraph.hpp"
#include "ortk/rootsys.hpp"

namespace ortk {

// lambda is the highest weight of M^b(lambda).
bool is_typical(const RootSystem& rs, const Borel& b, const Weight& lambda);

enum class Emptiness { Empty, NonEmpty, Undetermined };
const char* emptiness_name(Emptiness e);

struct S1Classification {
  std::vector<int> certified_in;
  std::vector<int> certified_out;
  std::vector<int> unknown;
  Emptiness verdict = Emptiness::Undetermined;
};

constexpr int kDefaultWitnessBound = 4;

// Classifies S_1 M^b(lambda).
S1Classification s1_classify(const RootSystem& rs, const ORGraph& og, const Borel& b, const Weight& lambda,
                             int gamma_bound = kDefaultWitnessBound);
// Same module written as M^b(lambda - rho^b).
S1Classification s1_classify_shifted(const RootSystem& rs, const ORGraph& og, const Borel& b, const Weight& lambda,
                                     int gamma_bound = kDefaultWitnessBound);

struct WitnessConditions {
  bool outside_cone = false;  // gamma - beta not in Z_{>=0} Delta^{bbar+}
  bool orthogonal = false;    // (beta, rho^{bbar} + gamma) = 0
  std::uint64_t multiplicity = 0;
  bool holds() const { return outside_cone && orthogonal && multiplicity == 1; }
};

WitnessConditions witness_conditions(const RootSystem& rs, const Borel& bbar, int beta, const Weight& gamma);

struct EvenWitness {
  int borel;  // vertex id in og
  Weight gamma;
};

// lambda is the shift-free weight: the Verma modules are M^{bbar}(lambda - rho^{bbar}).
std::optional<EvenWitness> simple_even_witness(const RootSystem& rs, const ORGraph& og, int beta,
                                               const Weight& lambda, int gamma_bound = kDefaultWitnessBound);

// Nonnegative integer combinations of even simple roots of height <= bound,
// ordered by height and then by coordinates.
std::vector<Weight> even_cone_points(const RootSystem& rs, int bound);

}  // namespace ortk

#endif
