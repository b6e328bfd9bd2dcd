#include "ortk/characters.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ortk {

void NumeratorCharacter::add(const Weight& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(w, c);
  if (!fresh && (it->second += c) == 0) terms.erase(it);
}

std::int64_t NumeratorCharacter::coefficient(const Weight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? 0 : it->second;
}

NumeratorCharacter& NumeratorCharacter::operator+=(const NumeratorCharacter& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

NumeratorCharacter verma_character(const RootSystem& rs, const std::vector<int>& delta_a, const Weight& lambda) {
  NumeratorCharacter ch;
  ch.add(lambda, 1);
  for (int beta : rs.delta1) {
    if (std::find(delta_a.begin(), delta_a.end(), beta) != delta_a.end()) continue;
    NumeratorCharacter next = ch;
    for (const auto& [w, c] : ch.terms) next.add(w + rs.vec(beta), c);
    ch = std::move(next);
  }
  return ch;
}

NumeratorCharacter verma_character(const RootSystem& rs, const Borel& b, const Weight& lambda) {
  return verma_character(rs, b.odd_positive, lambda);
}

bool characters_equal(const NumeratorCharacter& a, const NumeratorCharacter& b) { return a == b; }

KostantCounter::KostantCounter(const RootSystem& rs) : rs_(rs) {
  const auto k = static_cast<Eigen::Index>(rs.even_simple.size());
  if (k == 0) return;
  basis_.resize(rs.rank(), k);
  for (Eigen::Index j = 0; j < k; ++j) basis_.col(j) = rs.vec(rs.even_simple[static_cast<std::size_t>(j)]);
  RMatrix t = basis_.transpose();
  pivot_rows_ = rref(t);
  RMatrix aug(k, 2 * k);
  for (Eigen::Index r = 0; r < k; ++r) {
    aug.row(r).head(k) = basis_.row(pivot_rows_[static_cast<std::size_t>(r)]);
    aug.row(r).tail(k).setZero();
    aug(r, k + r) = 1;
  }
  rref(aug);
  pivot_inv_ = aug.rightCols(k);
  for (int id : rs.even_positive) {
    auto c = even_coordinates(rs.vec(id));
    std::vector<std::int64_t> ints;
    for (Eigen::Index j = 0; j < k; ++j) ints.push_back((*c)[j].numerator());
    roots_.push_back(std::move(ints));
  }
}

std::optional<Weight> KostantCounter::even_coordinates(const Weight& v) const {
  if (basis_.cols() == 0) return is_zero(v) ? std::optional<Weight>(Weight(0)) : std::nullopt;
  Weight vp(basis_.cols());
  for (Eigen::Index r = 0; r < vp.size(); ++r) vp[r] = v[pivot_rows_[static_cast<std::size_t>(r)]];
  Weight c = pivot_inv_ * vp;
  if (basis_ * c != v) return std::nullopt;
  return c;
}

std::uint64_t KostantCounter::operator()(const Weight& v) const {
  auto c = even_coordinates(v);
  if (!c) return 0;
  std::vector<std::int64_t> rem;
  for (Eigen::Index j = 0; j < c->size(); ++j) {
    if ((*c)[j].denominator() != 1 || (*c)[j] < 0) return 0;
    rem.push_back((*c)[j].numerator());
  }
  std::map<std::pair<std::size_t, std::vector<std::int64_t>>, std::uint64_t> memo;
  std::function<std::uint64_t(std::size_t, const std::vector<std::int64_t>&)> count =
      [&](std::size_t idx, const std::vector<std::int64_t>& r) -> std::uint64_t {
    if (std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; })) return 1;
    if (idx == roots_.size()) return 0;
    auto key = std::make_pair(idx, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    std::vector<std::int64_t> cur = r;
    for (;;) {
      total += count(idx + 1, cur);
      bool ok = true;
      for (std::size_t j = 0; j < cur.size(); ++j) {
        cur[j] -= roots_[idx][j];
        ok = ok && cur[j] >= 0;
      }
      if (!ok) break;
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  return count(0, rem);
}

std::uint64_t kostant_partitions(const RootSystem& rs, const Weight& v) { return KostantCounter(rs)(v); }

std::uint64_t weight_multiplicity(const KostantCounter& k, const RootSystem& rs, const MultiplicityQuery& q) {
  const std::size_t n = q.free_odd.size();
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Weight v = q.base - q.target;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) v += rs.vec(q.free_odd[i]);
    total += k(v);
  }
  return total;
}

std::uint64_t weight_multiplicity(const RootSystem& rs, const MultiplicityQuery& q) {
  return weight_multiplicity(KostantCounter(rs), rs, q);
}

std::int64_t character_multiplicity(const KostantCounter& k, const NumeratorCharacter& c, const Weight& target) {
  std::int64_t total = 0;
  for (const auto& [w, coeff] : c.terms) total += coeff * static_cast<std::int64_t>(k(w - target));
  return total;
}

MultiplicityQuery verma_query(const RootSystem& rs, const Borel& b, const Weight& lambda, const Weight& target) {
  MultiplicityQuery q{{}, lambda, target};
  for (int id : rs.delta1)
    if (!b.is_positive(id)) q.free_odd.push_back(id);
  return q;
}

namespace {

Rational dot(const Weight& a, const Weight& b) {
  Rational acc = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

bool cone_membership(const RootSystem& rs, const Weight& v, const std::vector<int>& roots, bool pbw) {
  if (is_zero(v)) return true;
  if (roots.empty()) return false;
  // perceptron: a functional strictly positive on every root, if one exists
  Weight h = zero_weight(rs.rank());
  for (int id : roots) h += rs.vec(id);
  bool separated = false;
  for (int pass = 0; pass < 1000 && !separated; ++pass) {
    separated = true;
    for (int id : roots)
      if (dot(h, rs.vec(id)) <= 0) {
        h += rs.vec(id);
        separated = false;
      }
  }
  if (!separated) throw Error(ErrorKind::UnboundedCone, "roots do not lie in an open half-space");

  std::vector<Rational> heights;
  for (int id : roots) heights.push_back(dot(h, rs.vec(id)));
  std::set<std::pair<std::size_t, Weight>, std::function<bool(const std::pair<std::size_t, Weight>&,
                                                                 const std::pair<std::size_t, Weight>&)>>
      dead([](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return weight_less(a.second, b.second);
      });
  std::function<bool(std::size_t, const Weight&)> search = [&](std::size_t idx, const Weight& rem) {
    if (is_zero(rem)) return true;
    if (idx == roots.size()) return false;
    Rational hr = dot(h, rem);
    if (hr <= 0) return false;
    if (dead.count({idx, rem})) return false;
    const Root& r = rs.root(roots[idx]);
    Rational cap = hr / heights[idx];
    std::int64_t kmax = cap.numerator() / cap.denominator();
    if (pbw && r.odd) kmax = std::min<std::int64_t>(kmax, 1);
    Weight cur = rem;
    for (std::int64_t k = 0; k <= kmax; ++k) {
      if (search(idx + 1, cur)) return true;
      cur -= r.vector;
    }
    dead.insert({idx, rem});
    return false;
  };
  return search(0, v);
}

Rational borel_height(const RootSystem& rs, const Borel& b, const Weight& v) {
  std::vector<Weight> basis;
  for (int id : b.simple) basis.push_back(rs.vec(id));
  return expand_in_basis(v, basis).sum();
}

std::vector<Weight> kac_flag_constituents(const RootSystem& rs, const Borel& b, const Weight& lambda) {
  const auto& odd = b.odd_positive;
  std::vector<std::pair<Rational, Weight>> items;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << odd.size()); ++mask) {
    Weight s = zero_weight(rs.rank());
    for (std::size_t i = 0; i < odd.size(); ++i)
      if ((mask >> i) & 1) s += rs.vec(odd[i]);
    items.emplace_back(borel_height(rs, b, s), lambda + s);
  }
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& c) {
    if (a.first != c.first) return a.first < c.first;
    return weight_less(c.second, a.second);
  });
  std::vector<Weight> out;
  for (auto& [h, w] : items) out.push_back(std::move(w));
  return out;
}

std::optional<std::int64_t> truncated_series_multiplicity(const RootSystem& rs, const NumeratorCharacter& c,
                                                          const Weight& target, int depth) {
  std::vector<std::pair<Weight, Rational>> even;
  for (int id : rs.even_positive) even.emplace_back(rs.vec(id), even_height(rs, rs.vec(id)));
  // Every product of geometric-series terms of total height <= depth.
  std::map<Weight, std::int64_t, WeightLess> series;
  Weight acc = zero_weight(rs.rank());
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t from, Rational used) {
    ++series[acc];
    for (std::size_t k = from; k < even.size(); ++k) {
      if (used + even[k].second > depth) continue;
      acc += even[k].first;
      rec(k, used + even[k].second);
      acc -= even[k].first;
    }
  };
  rec(0, 0);
  std::int64_t total = 0;
  for (const auto& [w, k] : c.terms) {
    Weight d = w - target;
    if (is_zero(d)) {
      total += k;
      continue;
    }
    Rational h;
    try {
      h = even_height(rs, d);
    } catch (const Error&) {
      continue;  // not in the even root span, unreachable
    }
    if (h.denominator() != 1) continue;  // off the even root lattice
    if (h > depth) return std::nullopt;
    auto it = series.find(d);
    if (it != series.end()) total += k * it->second;
  }
  return total;
}

std::optional<std::int64_t> total_dimension(const NumeratorCharacter& c, const RootSystem& rs) {
  if (!rs.even_positive.empty()) return std::nullopt;
  std::int64_t total = 0;
  for (const auto& [w, k] : c.terms) total += k;
  return total;
}

}  // namespace ortk
