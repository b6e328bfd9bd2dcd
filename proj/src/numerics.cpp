#include "ortk/numerics.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ortk {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::NotIsotropicSimple: return "NotIsotropicSimple";
    case ErrorKind::DisconnectedEndpoints: return "DisconnectedEndpoints";
    case ErrorKind::InvalidWalk: return "InvalidWalk";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::UnboundedCone: return "UnboundedCone";
    case ErrorKind::BasisNotStabilized: return "BasisNotStabilized";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (s_ != 0 && o.s_ != 0) throw Error(ErrorKind::DegreeOverflow, "alpha^2 term");
  Rational r = r_ * o.r_;
  Rational s = r_ * o.s_ + s_ * o.r_;
  r_ = r;
  s_ = s;
  return *this;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::Add: return a + b;
    case ScalarOp::Mul: return a * b;
    case ScalarOp::Neg: return -a;
  }
  return a;
}

Scalar inner_product(const Weight& v, const Weight& w, const BilinearForm& form) {
  if (v.size() != w.size() || v.size() != form.rank())
    throw Error(ErrorKind::RankMismatch, "inner product of ranks " + std::to_string(v.size()) +
                                             ", " + std::to_string(w.size()) + " under form of rank " +
                                             std::to_string(form.rank()));
  Scalar acc;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rational c = v[i] * w[i];
    if (c != 0) acc += Scalar(c) * form.diagonal[static_cast<std::size_t>(i)];
  }
  return acc;
}

Weight zero_weight(Eigen::Index rank) {
  Weight v(rank);
  v.setConstant(Rational(0));
  return v;
}

Weight unit_weight(Eigen::Index rank, Eigen::Index i) {
  Weight v = zero_weight(rank);
  v[i] = 1;
  return v;
}

Weight make_weight(std::initializer_list<Rational> coords) {
  Weight v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) v[i++] = c;
  return v;
}

bool is_zero(const Weight& v) {
  return std::all_of(v.data(), v.data() + v.size(), [](const Rational& q) { return q == 0; });
}

bool weight_less(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

std::vector<Eigen::Index> rref(RMatrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(row));
    Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (Eigen::Index j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Eigen::Index rank_of(RMatrix m) { return static_cast<Eigen::Index>(rref(m).size()); }

std::vector<Weight> null_space(const RMatrix& m) {
  RMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Weight> out;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Weight x = zero_weight(m.cols());
    x[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      x[pivots[k]] = -r(static_cast<Eigen::Index>(k), free);
    out.push_back(std::move(x));
  }
  return out;
}

Weight expand_in_basis(const Weight& v, const std::vector<Weight>& basis) {
  const auto k = static_cast<Eigen::Index>(basis.size());
  RMatrix aug(v.size(), k + 1);
  for (Eigen::Index j = 0; j < k; ++j) {
    if (basis[static_cast<std::size_t>(j)].size() != v.size())
      throw Error(ErrorKind::RankMismatch, "basis vector rank differs from target");
    aug.col(j) = basis[static_cast<std::size_t>(j)];
  }
  aug.col(k) = v;
  auto pivots = rref(aug);
  const bool outside = !pivots.empty() && pivots.back() == k;
  const auto basis_rank = static_cast<Eigen::Index>(pivots.size()) - (outside ? 1 : 0);
  if (basis_rank < k)
    throw Error(ErrorKind::SingularBasis, "basis of size " + std::to_string(k) + " has rank " +
                                              std::to_string(basis_rank));
  if (outside) throw Error(ErrorKind::NotInSpan, format_weight(v));
  Weight c(k);
  for (Eigen::Index j = 0; j < k; ++j) c[j] = aug(j, k);
  return c;
}

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string format_scalar(const Scalar& s) {
  if (s.s() == 0) return format_rational(s.r());
  std::string a = s.s() == 1 ? "a" : s.s() == -1 ? "-a" : format_rational(s.s()) + "a";
  if (s.r() == 0) return a;
  return format_rational(s.r()) + (a[0] == '-' ? "" : "+") + a;
}

std::string format_weight(const Weight& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_rational(v[i]);
  }
  return out;
}

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::int64_t parse_int(std::string_view t, const std::string& whole) {
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  std::int64_t x = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size())
    throw Error(ErrorKind::ParseError, "bad number '" + whole + "'");
  return x;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t = strip(text);
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_int(t, text));
  std::int64_t num = parse_int(std::string_view(t).substr(0, slash), text);
  std::int64_t den = parse_int(std::string_view(t).substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

Scalar parse_scalar(const std::string& text) {
  std::string t = strip(text);
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty coordinate");
  if (t.back() != 'a') return Scalar(parse_rational(t));
  t.pop_back();
  // split "r+s" at the last sign that is not the leading one
  std::size_t cut = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;)
    if (t[i] == '+' || t[i] == '-') {
      cut = i;
      break;
    }
  std::string rpart = cut == std::string::npos ? "" : t.substr(0, cut);
  std::string spart = cut == std::string::npos ? t : t.substr(cut);
  Rational s;
  if (spart.empty() || spart == "+") s = 1;
  else if (spart == "-") s = -1;
  else s = parse_rational(spart);
  Rational r = rpart.empty() ? Rational(0) : parse_rational(rpart);
  return {r, s};
}

Weight parse_weight(const std::string& text, Eigen::Index rank, const std::optional<Rational>& alpha) {
  std::string t = strip(text);
  if (t == "0") return zero_weight(rank);
  std::vector<std::string> parts;
  std::stringstream ss(t);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (!t.empty() && t.back() == ',') parts.emplace_back();
  if (static_cast<Eigen::Index>(parts.size()) != rank)
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(rank) + " coordinates, got " +
                                           std::to_string(parts.size()) + " in '" + text + "'");
  Weight v(rank);
  for (Eigen::Index i = 0; i < rank; ++i) {
    Scalar c = parse_scalar(parts[static_cast<std::size_t>(i)]);
    if (!c.is_rational() && !alpha)
      throw Error(ErrorKind::ParseError, "coordinate '" + parts[static_cast<std::size_t>(i)] +
                                             "' involves alpha; pass --alpha to specialize");
    v[i] = alpha ? c.evaluate(*alpha) : c.r();
  }
  return v;
}

}  // namespace ortk
