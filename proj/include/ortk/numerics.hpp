#ifndef ORTK_NUMERICS_HPP
#define ORTK_NUMERICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <Eigen/Core>

#include "ortk/error.hpp"

namespace ortk {
using Rational = boost::rational<std::int64_t>;
}

// Boost 1.74 mixed comparisons recurse forever under C++20 reversed-operator
// rewriting; exact non-template overloads win overload resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator!=(int b, const rational<std::int64_t>& a) { return !(a == b); }
}  // namespace boost

namespace Eigen {
template <>
struct NumTraits<ortk::Rational> : GenericNumTraits<ortk::Rational> {
  typedef ortk::Rational Real;
  typedef ortk::Rational NonInteger;
  typedef ortk::Rational Nested;
  typedef ortk::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace ortk {

using Weight = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// r + s*alpha. Products are allowed only while the result stays linear in alpha.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational r) : r_(r) {}  // NOLINT: rationals embed implicitly
  Scalar(std::int64_t r) : r_(r) {}  // NOLINT
  Scalar(Rational r, Rational s) : r_(r), s_(s) {}

  static Scalar alpha() { return {Rational(0), Rational(1)}; }

  const Rational& r() const { return r_; }
  const Rational& s() const { return s_; }
  bool is_rational() const { return s_ == 0; }

  // Generic-mode zero test; see BilinearForm::is_zero for the specialized one.
  bool is_zero() const { return r_ == 0 && s_ == 0; }
  Rational evaluate(const Rational& a) const { return r_ + s_ * a; }

  Scalar operator-() const { return {-r_, -s_}; }
  Scalar& operator+=(const Scalar& o) { r_ += o.r_; s_ += o.s_; return *this; }
  Scalar& operator-=(const Scalar& o) { r_ -= o.r_; s_ -= o.s_; return *this; }
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.r_ == b.r_ && a.s_ == b.s_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Rational r_{0};
  Rational s_{0};
};

enum class ScalarOp { Add, Mul, Neg };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

// Diagonal form. When `alpha` is set the system is specialized and zero tests
// substitute it; otherwise alpha is an indeterminate.
struct BilinearForm {
  std::vector<Scalar> diagonal;
  std::optional<Rational> alpha;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(diagonal.size()); }
  bool is_zero(const Scalar& x) const { return alpha ? x.evaluate(*alpha) == 0 : x.is_zero(); }
};

Scalar inner_product(const Weight& v, const Weight& w, const BilinearForm& form);

Weight zero_weight(Eigen::Index rank);
Weight unit_weight(Eigen::Index rank, Eigen::Index i);
Weight make_weight(std::initializer_list<Rational> coords);

bool is_zero(const Weight& v);
bool weight_less(const Weight& a, const Weight& b);

struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const { return weight_less(a, b); }
};

// Exact coefficients of v in a linearly independent family.
Weight expand_in_basis(const Weight& v, const std::vector<Weight>& basis);

// Reduced row echelon form in place; returns pivot columns.
std::vector<Eigen::Index> rref(RMatrix& m);
Eigen::Index rank_of(RMatrix m);
// Basis of {x : m x = 0}.
std::vector<Weight> null_space(const RMatrix& m);

std::string format_rational(const Rational& q);
std::string format_scalar(const Scalar& s);
std::string format_weight(const Weight& v);

Rational parse_rational(const std::string& text);
Scalar parse_scalar(const std::string& text);
// Coordinates with alpha parts are accepted only when `alpha` specializes them.
Weight parse_weight(const std::string& text, Eigen::Index rank,
                    const std::optional<Rational>& alpha = std::nullopt);

}  // namespace ortk

#endif
