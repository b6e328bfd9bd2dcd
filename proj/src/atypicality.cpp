#include "ortk/atypicality.hpp"

#include <algorithm>
#include <functional>

#include "ortk/characters.hpp"

namespace ortk {

bool is_typical(const RootSystem& rs, const Borel& b, const Weight& lambda) {
  const Weight mu = lambda + weyl_vector(rs, b);
  return std::none_of(rs.delta_iso.begin(), rs.delta_iso.end(),
                      [&](int id) { return rs.orthogonal(mu, rs.vec(id)); });
}

const char* emptiness_name(Emptiness e) {
  switch (e) {
    case Emptiness::Empty: return "Empty";
    case Emptiness::NonEmpty: return "NonEmpty";
    case Emptiness::Undetermined: return "Undetermined";
  }
  return "?";
}

S1Classification s1_classify(const RootSystem& rs, const ORGraph& og, const Borel& b, const Weight& lambda,
                             int gamma_bound) {
  S1Classification out;
  const Weight shifted = lambda + weyl_vector(rs, b);
  const auto& pure = og.pure.isotropic;
  for (int beta : rs.delta_iso) {
    const Weight& v = rs.vec(beta);
    if (!b.is_positive(beta)) {
      out.certified_out.push_back(beta);
      continue;
    }
    if (std::find(b.simple.begin(), b.simple.end(), beta) != b.simple.end()) {
      (rs.orthogonal(lambda, v) ? out.certified_in : out.certified_out).push_back(beta);
      continue;
    }
    if (!rs.orthogonal(shifted, v)) {
      out.unknown.push_back(beta);
      continue;
    }
    if (!std::binary_search(pure.begin(), pure.end(), beta)) {
      out.certified_in.push_back(beta);
      continue;
    }
    bool witnessed = simple_even_witness(rs, og, beta, shifted, gamma_bound).has_value();
    (witnessed ? out.certified_in : out.unknown).push_back(beta);
  }
  const bool typical = is_typical(rs, b, lambda);
  if (rs.type_one || rs.spec.family == Family::D21)
    out.verdict = typical ? Emptiness::Empty : Emptiness::NonEmpty;
  else if (typical)
    out.verdict = Emptiness::Empty;
  else
    out.verdict = out.certified_in.empty() ? Emptiness::Undetermined : Emptiness::NonEmpty;
  return out;
}

S1Classification s1_classify_shifted(const RootSystem& rs, const ORGraph& og, const Borel& b, const Weight& lambda,
                                     int gamma_bound) {
  return s1_classify(rs, og, b, lambda - weyl_vector(rs, b), gamma_bound);
}

std::vector<Weight> even_cone_points(const RootSystem& rs, int bound) {
  const std::size_t k = rs.even_simple.size();
  std::vector<std::pair<int, Weight>> pts;
  std::vector<int> coeff(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx == k) {
      Weight g = zero_weight(rs.rank());
      int h = 0;
      for (std::size_t i = 0; i < k; ++i) {
        g += Rational(coeff[i]) * rs.vec(rs.even_simple[i]);
        h += coeff[i];
      }
      pts.emplace_back(h, g);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      coeff[idx] = c;
      rec(idx + 1, left - c);
    }
    coeff[idx] = 0;
  };
  rec(0, bound);
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : weight_less(a.second, b.second);
  });
  std::vector<Weight> out;
  for (auto& [h, g] : pts) out.push_back(std::move(g));
  return out;
}

WitnessConditions witness_conditions(const RootSystem& rs, const Borel& bbar, int beta, const Weight& gamma) {
  WitnessConditions w;
  const Weight& v = rs.vec(beta);
  w.outside_cone = !cone_membership(rs, gamma - v, positive_roots(rs, bbar));
  w.orthogonal = rs.orthogonal(v, weyl_vector(rs, bbar) + gamma);
  // the multiplicity at depth beta + gamma does not depend on the highest weight
  const Weight hw = zero_weight(rs.rank());
  w.multiplicity = weight_multiplicity(rs, verma_query(rs, bbar, hw, hw - v - gamma));
  return w;
}

std::optional<EvenWitness> simple_even_witness(const RootSystem& rs, const ORGraph& og, int beta,
                                               const Weight& lambda, int gamma_bound) {
  if (!std::binary_search(og.pure.isotropic.begin(), og.pure.isotropic.end(), beta))
    throw Error(ErrorKind::PreconditionViolated, "beta is not a pure isotropic positive root");
  if (!rs.orthogonal(lambda, rs.vec(beta)))
    throw Error(ErrorKind::PreconditionViolated, "(lambda, beta) != 0");
  const auto gammas = even_cone_points(rs, gamma_bound);
  const KostantCounter kostant(rs);
  const Weight& bv = rs.vec(beta);
  const Weight hw = zero_weight(rs.rank());
  for (std::size_t v = 0; v < og.borels.borels.size(); ++v) {
    const Borel& bbar = og.borels.borels[v];
    const Weight rho = weyl_vector(rs, bbar);
    const auto positive = positive_roots(rs, bbar);
    for (const auto& g : gammas) {
      // cheapest condition first
      if (!rs.orthogonal(bv, rho + g)) continue;
      if (cone_membership(rs, g - bv, positive)) continue;
      if (weight_multiplicity(kostant, rs, verma_query(rs, bbar, hw, hw - bv - g)) != 1) continue;
      return EvenWitness{static_cast<int>(v), g};
    }
  }
  return std::nullopt;
}

}  // namespace ortk
