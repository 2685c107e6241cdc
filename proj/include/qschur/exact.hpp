#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Exact arithmetic layer: integers and rationals are GMP-backed; on top of
// them sit bivariate polynomials in (q,t), normalized rational functions in
// (q,t), and multivariate x-polynomials with rational-function coefficients.

namespace qschur {

using ZZ = mpz_class;
using QQ = mpq_class;

inline QQ make_qq(const ZZ& num, const ZZ& den) {
  if (den == 0) throw std::invalid_argument("make_qq: zero denominator");
  QQ r(num, den);
  r.canonicalize();
  return r;
}

// Dense univariate polynomial over ZZ, used internally by the bivariate gcd.
struct ZPoly {
  std::vector<ZZ> c;  // c[i] = coefficient of x^i; no trailing zeros

  void trim();
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const ZZ& lead() const { return c.back(); }

  static ZPoly zero() { return {}; }
  static ZPoly constant(const ZZ& k);

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly scaled(const ZZ& k) const;

  ZZ content() const;            // gcd of coefficients, nonnegative
  ZPoly primitive_part() const;  // content divided out, sign from lead
  ZPoly div_exact(const ZPoly& d) const;

  static ZPoly gcd(ZPoly a, ZPoly b);  // primitive PRS, lead coefficient > 0
};

// Sparse bivariate polynomial in (q,t) over ZZ.
class QTPoly {
 public:
  using Key = std::pair<int, int>;  // (q-exponent, t-exponent), both >= 0
  std::map<Key, ZZ> terms;          // no zero coefficients stored

  QTPoly() = default;
  static QTPoly zero() { return {}; }
  static QTPoly one() { return monomial(0, 0, 1); }
  static QTPoly monomial(int qe, int te, ZZ coeff = 1);
  static QTPoly constant(const ZZ& k) { return monomial(0, 0, k); }

  bool is_zero() const { return terms.empty(); }
  bool is_one() const;
  int deg_q() const;
  int deg_t() const;

  QTPoly operator+(const QTPoly& o) const;
  QTPoly operator-(const QTPoly& o) const;
  QTPoly operator*(const QTPoly& o) const;
  QTPoly operator-() const;
  bool operator==(const QTPoly& o) const { return terms == o.terms; }

  ZZ content() const;
  // Sign of the lexicographically least term (by (q,t)); 0 for the zero poly.
  int trailing_sign() const;

  QQ eval(const QQ& q0, const QQ& t0) const;
  // f(1/q, 1/t) * q^deg_q * t^deg_t, i.e. exponent-reversed polynomial.
  QTPoly reversed() const;

  static QTPoly gcd(const QTPoly& a, const QTPoly& b);
  QTPoly div_exact(const QTPoly& d) const;

  std::string str() const;  // human-readable, e.g. "1 - q t^2"
};

// Normalized rational function in (q,t): gcd(num,den)=1 and the denominator's
// lexicographically least term has positive coefficient.
class QTRatio {
 public:
  QTPoly num, den;

  QTRatio() : num(QTPoly::zero()), den(QTPoly::one()) {}
  QTRatio(QTPoly n, QTPoly d);
  explicit QTRatio(const ZZ& k) : num(QTPoly::constant(k)), den(QTPoly::one()) {}
  QTRatio(long k) : QTRatio(ZZ(k)) {}

  static QTRatio zero() { return QTRatio(); }
  static QTRatio one() { return QTRatio(1); }
  // q^a t^b with possibly negative exponents.
  static QTRatio qt_monomial(int a, int b, ZZ coeff = 1);

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return num.is_one() && den.is_one(); }
  bool is_integer() const { return den.is_one(); }

  QTRatio operator+(const QTRatio& o) const;
  QTRatio operator-(const QTRatio& o) const;
  QTRatio operator*(const QTRatio& o) const;
  QTRatio operator/(const QTRatio& o) const;
  QTRatio operator-() const;
  QTRatio inverse() const;
  QTRatio pow(int e) const;
  bool operator==(const QTRatio& o) const { return num == o.num && den == o.den; }

  QQ eval(const QQ& q0, const QQ& t0) const;
  QTRatio substituted_inverse_qt() const;  // r(1/q, 1/t)

  std::string str() const;

 private:
  void normalize();
};

QTRatio qt_normalize(const QTPoly& num, const QTPoly& den);

// One variable image for XPoly::substitute: x_i -> scale * x_target.
struct VarImage {
  int target = 1;  // 1-based variable index
  QTRatio scale = QTRatio::one();
};

// Graded lexicographic order on exponent vectors (total degree, then lex).
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return a < b;
  }
};

// Multivariate polynomial in x_1..x_n over QTRatio coefficients.
class XPoly {
 public:
  int n = 0;
  std::map<std::vector<int>, QTRatio, GradedLexLess> terms;  // no zero coeffs

  XPoly() = default;
  explicit XPoly(int nvars) : n(nvars) {}

  static XPoly zero(int n) { return XPoly(n); }
  static XPoly one(int n);
  static XPoly var(int i, int n);  // x_i
  static XPoly monomial(std::vector<int> exps, QTRatio coeff = QTRatio::one());
  // x^beta for a composition beta (padded/truncated checks are the caller's).
  static XPoly x_power(const std::vector<int>& beta, int n);

  bool is_zero() const { return terms.empty(); }
  bool operator==(const XPoly& o) const;

  XPoly operator+(const XPoly& o) const;
  XPoly operator-(const XPoly& o) const;
  XPoly operator*(const XPoly& o) const;
  XPoly operator-() const;
  XPoly scaled(const QTRatio& k) const;

  void add_term(const std::vector<int>& exps, const QTRatio& coeff);
  QTRatio coeff(const std::vector<int>& exps) const;
  long total_degree() const;

  // Substitute x_i -> images[i-1].scale * x_{images[i-1].target}; the targets
  // must form a permutation of 1..n with nonzero scales.
  XPoly substitute(const std::vector<VarImage>& images) const;
  XPoly swap_vars(int i) const;       // s_i: x_i <-> x_{i+1}
  XPoly reverse_vars() const;         // x_i -> x_{n+1-i}
  XPoly multiply_by_var(int i) const; // * x_i

  // (f - s_i f)/(x_i - x_{i+1}); divisibility is guaranteed by antisymmetry
  // and a nonzero remainder aborts.
  XPoly divided_difference(int i) const;

  QQ eval(const std::vector<QQ>& xs, const QQ& q0, const QQ& t0) const;
  // Evaluate coefficients at (q0,t0); throws if a denominator vanishes there.
  XPoly specialize_qt(const QQ& q0, const QQ& t0) const;
  XPoly substituted_inverse_qt() const;  // coefficientwise q->1/q, t->1/t

  std::string str() const;
  std::string latex() const;
};

}  // namespace qschur
