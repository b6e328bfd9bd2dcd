#include "ortk/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ortk {

int RootSystem::find(const Weight& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

void RootSystem::index_roots() {
  index_.clear();
  for (int id = 0; id < size(); ++id) index_[vec(id)] = id;
  neg_.assign(roots.size(), -1);
  for (int id = 0; id < size(); ++id) {
    int k = find(-vec(id));
    if (k < 0) throw std::logic_error("root system is not symmetric");
    neg_[static_cast<std::size_t>(id)] = k;
  }
}

namespace {

struct Builder {
  Eigen::Index rank = 0;
  std::vector<Root> even, odd;

  Weight e(Eigen::Index i) const { return unit_weight(rank, i); }
  void add(const Weight& v, bool is_odd) { (is_odd ? odd : even).push_back({v, is_odd, false}); }
  void add_pm(const Weight& v, bool is_odd) {
    add(v, is_odd);
    add(-v, is_odd);
  }
};

bool descending(const Weight& a, const Weight& b) { return weight_less(b, a); }

void sort_desc(const RootSystem& rs, std::vector<int>& ids) {
  std::sort(ids.begin(), ids.end(), [&](int a, int b) { return descending(rs.vec(a), rs.vec(b)); });
}

Rational evaluate(const Weight& f, const Weight& v) {
  Rational acc = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) acc += f[i] * v[i];
  return acc;
}


// Regular functional: its positive roots are the fixed even positives and the
// standard Borel (distinguished for gl, osp and D(2,1;alpha)).
Weight family_functional(const FamilySpec& s, Eigen::Index rank) {
  Weight f = zero_weight(rank);
  switch (s.family) {
    case Family::GL:
      for (int i = 0; i < s.m + s.n; ++i) f[i] = s.m + s.n - i;
      break;
    case Family::GL11Power:
      for (int i = 0; i < s.n; ++i) {
        f[i] = 2;
        f[s.n + i] = 1;
      }
      break;
    case Family::OspB:
    case Family::OspD:
      // delta_1 > ... > delta_n > eps_1 > ... > eps_m > 0
      for (int i = 0; i < s.m; ++i) f[i] = s.m - i;
      for (int j = 0; j < s.n; ++j) f[s.m + j] = s.m + s.n - j;
      break;
    case Family::D21:
      f = make_weight({3, 1, 1});
      break;
  }
  return f;
}

}  // namespace

RootSystem build_root_system(const FamilySpec& spec) {
  RootSystem rs;
  rs.spec = spec;
  Builder b;

  auto labels = [&](int m, int n) {
    for (int i = 1; i <= m; ++i) rs.basis_labels.push_back("e" + std::to_string(i));
    for (int j = 1; j <= n; ++j) rs.basis_labels.push_back("d" + std::to_string(j));
  };
  auto plain_form = [&](int m, int n) {
    rs.form.diagonal.assign(static_cast<std::size_t>(m), Scalar(1));
    rs.form.diagonal.insert(rs.form.diagonal.end(), static_cast<std::size_t>(n), Scalar(-1));
  };

  switch (spec.family) {
    case Family::GL: {
      const int m = spec.m, n = spec.n;
      if (m < 1 || n < 1) throw Error(ErrorKind::UnsupportedFamily, "gl(m|n) needs m, n >= 1");
      b.rank = m + n;
      labels(m, n);
      plain_form(m, n);
      for (int i = 0; i < m + n; ++i)
        for (int j = 0; j < m + n; ++j) {
          if (i == j) continue;
          bool odd = (i < m) != (j < m);
          b.add(b.e(i) - b.e(j), odd);
        }
      break;
    }
    case Family::GL11Power: {
      const int n = spec.n;
      if (n < 1) throw Error(ErrorKind::UnsupportedFamily, "gl(1|1)^n needs n >= 1");
      b.rank = 2 * n;
      labels(n, n);
      plain_form(n, n);
      for (int i = 0; i < n; ++i) b.add_pm(b.e(i) - b.e(n + (n - 1 - i)), true);
      break;
    }
    case Family::OspB:
    case Family::OspD: {
      const int m = spec.m, n = spec.n;
      const bool type_b = spec.family == Family::OspB;
      if (m < 1 || n < 1) throw Error(ErrorKind::UnsupportedFamily, "osp needs m, n >= 1");
      b.rank = m + n;
      labels(m, n);
      plain_form(m, n);
      auto eps = [&](int i) { return b.e(i); };
      auto del = [&](int j) { return b.e(m + j); };
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          b.add_pm(eps(i) - eps(j), false);
          b.add_pm(eps(i) + eps(j), false);
        }
      if (type_b)
        for (int i = 0; i < m; ++i) b.add_pm(eps(i), false);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          b.add_pm(del(i) - del(j), false);
          b.add_pm(del(i) + del(j), false);
        }
        b.add_pm(Rational(2) * del(i), false);
      }
      if (type_b)
        for (int j = 0; j < n; ++j) b.add_pm(del(j), true);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
          b.add_pm(eps(i) - del(j), true);
          b.add_pm(eps(i) + del(j), true);
        }
      break;
    }
    case Family::D21: {
      if (spec.alpha && (*spec.alpha == 0 || *spec.alpha == -1))
        throw Error(ErrorKind::UnsupportedFamily, "D(2,1;alpha) needs alpha not in {0, -1}");
      b.rank = 3;
      rs.basis_labels = {"d", "e1", "e2"};
      rs.form.diagonal = {Scalar(-1, -1), Scalar(1), Scalar(0, 1)};
      rs.form.alpha = spec.alpha;
      for (int i = 0; i < 3; ++i) b.add_pm(Rational(2) * b.e(i), false);
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          Weight v = b.e(0) + Rational(s1) * b.e(1) + Rational(s2) * b.e(2);
          b.add_pm(v, true);
        }
      break;
    }
  }

  const Weight functional = family_functional(spec, b.rank);
  std::sort(b.even.begin(), b.even.end(), [](const Root& x, const Root& y) { return descending(x.vector, y.vector); });
  std::sort(b.odd.begin(), b.odd.end(), [](const Root& x, const Root& y) { return descending(x.vector, y.vector); });
  rs.roots = b.even;
  rs.roots.insert(rs.roots.end(), b.odd.begin(), b.odd.end());
  for (auto& r : rs.roots) {
    if (evaluate(functional, r.vector) == 0) throw std::logic_error("functional is not regular");
    r.isotropic = r.odd && rs.form.is_zero(rs.inner(r.vector, r.vector));
  }
  rs.index_roots();

  for (int id = 0; id < rs.size(); ++id) {
    const Root& r = rs.root(id);
    (r.odd ? rs.delta1 : rs.delta0).push_back(id);
    if (r.isotropic) rs.delta_iso.push_back(id);
    if (!r.odd && evaluate(functional, r.vector) > 0) rs.even_positive.push_back(id);
  }
  rs.even_simple = indecomposable_roots(rs, rs.even_positive);
  sort_desc(rs, rs.even_simple);
  rs.type_one = spec.family == Family::GL || spec.family == Family::GL11Power ||
                (spec.family == Family::OspD && spec.m == 1);
  return rs;
}

std::vector<int> indecomposable_roots(const RootSystem& rs, const std::vector<int>& positive) {
  std::vector<char> in(static_cast<std::size_t>(rs.size()), 0), dec(static_cast<std::size_t>(rs.size()), 0);
  for (int id : positive) in[static_cast<std::size_t>(id)] = 1;
  for (std::size_t a = 0; a < positive.size(); ++a)
    for (std::size_t c = a; c < positive.size(); ++c) {
      int s = rs.find(rs.vec(positive[a]) + rs.vec(positive[c]));
      if (s >= 0 && in[static_cast<std::size_t>(s)]) dec[static_cast<std::size_t>(s)] = 1;
    }
  std::vector<int> out;
  for (int id : positive)
    if (!dec[static_cast<std::size_t>(id)]) out.push_back(id);
  return out;
}

std::vector<int> positive_roots(const RootSystem& rs, const Borel& b) {
  std::vector<int> out = rs.even_positive;
  out.insert(out.end(), b.odd_positive.begin(), b.odd_positive.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void fill_mask(const RootSystem& rs, Borel& b) {
  b.positive.assign(static_cast<std::size_t>(rs.size()), 0);
  for (int id : rs.even_positive) b.positive[static_cast<std::size_t>(id)] = 1;
  for (int id : b.odd_positive) b.positive[static_cast<std::size_t>(id)] = 1;
}

}  // namespace

Borel standard_borel(const RootSystem& rs) {
  const Weight f = family_functional(rs.spec, rs.rank());
  Borel b;
  for (int id : rs.delta1)
    if (evaluate(f, rs.vec(id)) > 0) b.odd_positive.push_back(id);
  fill_mask(rs, b);
  b.simple = indecomposable_roots(rs, positive_roots(rs, b));
  sort_desc(rs, b.simple);
  return b;
}

bool is_isotropic_simple(const RootSystem& rs, const Borel& b, int i) {
  return i >= 1 && i <= b.theta() && rs.root(b.simple_root(i)).isotropic;
}

Borel odd_reflect(const RootSystem& rs, const Borel& b, int i) {
  if (!is_isotropic_simple(rs, b, i))
    throw Error(ErrorKind::NotIsotropicSimple, "simple index " + std::to_string(i));
  const int a = b.simple_root(i);
  const int na = rs.negate(a);
  Borel out;
  out.odd_positive = b.odd_positive;
  std::replace(out.odd_positive.begin(), out.odd_positive.end(), a, na);
  std::sort(out.odd_positive.begin(), out.odd_positive.end());
  fill_mask(rs, out);
  for (int beta : b.simple) {
    if (beta == a) {
      out.simple.push_back(na);
      continue;
    }
    int s = rs.find(rs.vec(a) + rs.vec(beta));
    out.simple.push_back(s >= 0 ? s : beta);
  }
  std::vector<int> check = indecomposable_roots(rs, positive_roots(rs, out));
  std::vector<int> got = out.simple;
  std::sort(got.begin(), got.end());
  if (got != check) throw std::logic_error("odd reflection formula disagrees with indecomposables");
  return out;
}

int BorelEnumeration::find(const std::vector<int>& odd_positive) const {
  auto it = index.find(odd_positive);
  return it == index.end() ? -1 : it->second;
}

BorelEnumeration enumerate_borels(const RootSystem& rs) {
  BorelEnumeration en;
  en.borels.push_back(standard_borel(rs));
  en.index[en.borels[0].odd_positive] = 0;
  for (std::size_t k = 0; k < en.borels.size(); ++k) {
    const Borel b = en.borels[k];
    for (int i = 1; i <= b.theta(); ++i) {
      if (!is_isotropic_simple(rs, b, i)) continue;
      Borel c = odd_reflect(rs, b, i);
      int t = en.find(c.odd_positive);
      if (t < 0) {
        t = static_cast<int>(en.borels.size());
        en.index[c.odd_positive] = t;
        en.borels.push_back(std::move(c));
      }
      if (static_cast<int>(k) < t) en.edges.push_back({static_cast<int>(k), i, t});
    }
  }
  return en;
}

PureRoots pure_positive_roots(const RootSystem& rs, const std::vector<Borel>& borels) {
  PureRoots out;
  for (int id = 0; id < rs.size(); ++id) {
    bool all = !borels.empty();
    for (const auto& b : borels) all = all && b.is_positive(id);
    if (!all) continue;
    out.all.push_back(id);
    if (rs.root(id).isotropic) out.isotropic.push_back(id);
  }
  return out;
}

Weight weyl_vector(const RootSystem& rs, const Borel& b) {
  Weight rho = zero_weight(rs.rank());
  for (int id : rs.even_positive) rho += rs.vec(id);
  for (int id : b.odd_positive) rho -= rs.vec(id);
  return rho * Rational(1, 2);
}

Rational even_height(const RootSystem& rs, const Weight& v) {
  if (rs.even_simple.empty()) {
    if (is_zero(v)) return 0;
    throw Error(ErrorKind::NotInSpan, "no even roots");
  }
  std::vector<Weight> basis;
  for (int id : rs.even_simple) basis.push_back(rs.vec(id));
  Weight c = expand_in_basis(v, basis);
  return c.sum();
}

}  // namespace ortk
