#include "qschur/exact.hpp"

#include <algorithm>
#include <sstream>

namespace qschur {

// ---------------------------------------------------------------------------
// ZPoly

void ZPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly ZPoly::constant(const ZZ& k) {
  ZPoly p;
  if (k != 0) p.c.push_back(k);
  return p;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  ZPoly r;
  r.c.resize(std::max(c.size(), o.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) {
    if (i < c.size()) r.c[i] += c[i];
    if (i < o.c.size()) r.c[i] += o.c[i];
  }
  r.trim();
  return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  ZPoly r;
  r.c.resize(std::max(c.size(), o.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) {
    if (i < c.size()) r.c[i] += c[i];
    if (i < o.c.size()) r.c[i] -= o.c[i];
  }
  r.trim();
  return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  ZPoly r;
  r.c.assign(c.size() + o.c.size() - 1, ZZ(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  r.trim();
  return r;
}

ZPoly ZPoly::scaled(const ZZ& k) const {
  if (k == 0) return {};
  ZPoly r = *this;
  for (auto& x : r.c) x *= k;
  return r;
}

ZZ ZPoly::content() const {
  ZZ g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return {};
  ZZ g = content();
  if (lead() < 0) g = -g;
  ZPoly r = *this;
  for (auto& x : r.c) x /= g;
  return r;
}

ZPoly ZPoly::div_exact(const ZPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("ZPoly::div_exact by zero");
  ZPoly rem = *this, quo;
  if (rem.is_zero()) return quo;
  if (rem.deg() < d.deg()) throw std::logic_error("ZPoly::div_exact: not divisible");
  quo.c.assign(rem.deg() - d.deg() + 1, ZZ(0));
  while (!rem.is_zero() && rem.deg() >= d.deg()) {
    ZZ q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.lead().get_mpz_t(), d.lead().get_mpz_t());
    if (r != 0) throw std::logic_error("ZPoly::div_exact: leading coeff not divisible");
    int shift = rem.deg() - d.deg();
    quo.c[shift] = q;
    for (size_t i = 0; i < d.c.size(); ++i) rem.c[i + shift] -= q * d.c[i];
    rem.trim();
  }
  if (!rem.is_zero()) throw std::logic_error("ZPoly::div_exact: nonzero remainder");
  quo.trim();
  return quo;
}

ZPoly ZPoly::gcd(ZPoly a, ZPoly b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part().scaled(b.content());
  if (b.is_zero()) return a.primitive_part().scaled(a.content());
  ZZ ca = a.content(), cb = b.content();
  ZZ cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.deg() < b.deg()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder of a by b
    ZPoly rem = a.scaled([&] {
      ZZ l = b.lead();
      ZZ p = 1;
      for (int k = 0; k <= a.deg() - b.deg(); ++k) p *= l;
      return p;
    }());
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
      ZZ q = rem.lead() / b.lead();
      int shift = rem.deg() - b.deg();
      for (size_t i = 0; i < b.c.size(); ++i) rem.c[i + shift] -= q * b.c[i];
      rem.trim();
    }
    a = b;
    b = rem.primitive_part();
  }
  return a.primitive_part().scaled(cg);
}

// ---------------------------------------------------------------------------
// QTPoly

QTPoly QTPoly::monomial(int qe, int te, ZZ coeff) {
  QTPoly p;
  if (coeff != 0) p.terms[{qe, te}] = std::move(coeff);
  return p;
}

bool QTPoly::is_one() const {
  return terms.size() == 1 && terms.begin()->first == Key{0, 0} && terms.begin()->second == 1;
}

int QTPoly::deg_q() const {
  int d = 0;
  for (const auto& [k, v] : terms) d = std::max(d, k.first);
  return d;
}

int QTPoly::deg_t() const {
  int d = 0;
  for (const auto& [k, v] : terms) d = std::max(d, k.second);
  return d;
}

QTPoly QTPoly::operator+(const QTPoly& o) const {
  QTPoly r = *this;
  for (const auto& [k, v] : o.terms) {
    auto it = r.terms.find(k);
    if (it == r.terms.end()) {
      r.terms[k] = v;
    } else {
      it->second += v;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

QTPoly QTPoly::operator-(const QTPoly& o) const { return *this + (-o); }

QTPoly QTPoly::operator-() const {
  QTPoly r = *this;
  for (auto& [k, v] : r.terms) v = -v;
  return r;
}

QTPoly QTPoly::operator*(const QTPoly& o) const {
  QTPoly r;
  for (const auto& [ka, va] : terms)
    for (const auto& [kb, vb] : o.terms) {
      Key k{ka.first + kb.first, ka.second + kb.second};
      auto it = r.terms.find(k);
      if (it == r.terms.end()) {
        ZZ prod = va * vb;
        if (prod != 0) r.terms[k] = std::move(prod);
      } else {
        it->second += va * vb;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  return r;
}

ZZ QTPoly::content() const {
  ZZ g = 0;
  for (const auto& [k, v] : terms) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

int QTPoly::trailing_sign() const {
  if (terms.empty()) return 0;
  return sgn(terms.begin()->second);
}

QQ QTPoly::eval(const QQ& q0, const QQ& t0) const {
  QQ acc = 0;
  for (const auto& [k, v] : terms) {
    QQ term(v);
    for (int i = 0; i < k.first; ++i) term *= q0;
    for (int i = 0; i < k.second; ++i) term *= t0;
    acc += term;
  }
  return acc;
}

QTPoly QTPoly::reversed() const {
  int dq = deg_q(), dt = deg_t();
  QTPoly r;
  for (const auto& [k, v] : terms) r.terms[{dq - k.first, dt - k.second}] = v;
  return r;
}

namespace {

// View a QTPoly as a polynomial in t with ZPoly (in q) coefficients.
std::vector<ZPoly> t_slices(const QTPoly& p) {
  std::vector<ZPoly> s(p.deg_t() + 1);
  if (p.is_zero()) return {};
  for (const auto& [k, v] : p.terms) {
    auto& poly = s[k.second];
    if (static_cast<int>(poly.c.size()) <= k.first) poly.c.resize(k.first + 1);
    poly.c[k.first] = v;
  }
  for (auto& poly : s) poly.trim();
  while (!s.empty() && s.back().is_zero()) s.pop_back();
  return s;
}

QTPoly from_t_slices(const std::vector<ZPoly>& s) {
  QTPoly p;
  for (size_t te = 0; te < s.size(); ++te)
    for (size_t qe = 0; qe < s[te].c.size(); ++qe)
      if (s[te].c[qe] != 0) p.terms[{static_cast<int>(qe), static_cast<int>(te)}] = s[te].c[qe];
  return p;
}

std::vector<ZPoly> slices_mul(const std::vector<ZPoly>& a, const std::vector<ZPoly>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<ZPoly> r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

std::vector<ZPoly> slices_sub(std::vector<ZPoly> a, const std::vector<ZPoly>& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

ZPoly slices_content(const std::vector<ZPoly>& s) {
  ZPoly g;
  for (const auto& p : s) g = ZPoly::gcd(g, p);
  return g;
}

std::vector<ZPoly> slices_div_zpoly(const std::vector<ZPoly>& s, const ZPoly& d) {
  std::vector<ZPoly> r(s.size());
  for (size_t i = 0; i < s.size(); ++i) r[i] = s[i].is_zero() ? ZPoly{} : s[i].div_exact(d);
  return r;
}

// Primitive PRS in t over the UFD Z[q].
std::vector<ZPoly> slices_prim_gcd(std::vector<ZPoly> a, std::vector<ZPoly> b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    // pseudo-remainder: lead(b)^(da-db+1) * a mod b
    ZPoly lb = b.back();
    ZPoly scale = ZPoly::constant(1);
    for (int k = 0; k <= da - db; ++k) scale = scale * lb;
    std::vector<ZPoly> rem(a.size());
    for (size_t i = 0; i < a.size(); ++i) rem[i] = a[i] * scale;
    while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
      ZPoly q = rem.back().div_exact(lb);
      int shift = static_cast<int>(rem.size()) - 1 - db;
      for (int i = 0; i <= db; ++i) rem[i + shift] = rem[i + shift] - q * b[i];
      while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
      if (static_cast<int>(rem.size()) - 1 < db) break;
    }
    // make primitive over Z[q]
    ZPoly cont = slices_content(rem);
    if (!cont.is_zero()) rem = slices_div_zpoly(rem, cont);
    a = b;
    b = rem;
  }
  ZPoly cont = slices_content(a);
  if (!cont.is_zero()) a = slices_div_zpoly(a, cont);
  return a;
}

}  // namespace

QTPoly QTPoly::gcd(const QTPoly& a, const QTPoly& b) {
  if (a.is_zero() && b.is_zero()) return QTPoly::zero();
  if (a.is_zero()) return b.trailing_sign() < 0 ? -b : b;
  if (b.is_zero()) return a.trailing_sign() < 0 ? -a : a;
  auto sa = t_slices(a), sb = t_slices(b);
  ZPoly ca = slices_content(sa), cb = slices_content(sb);
  auto pa = slices_div_zpoly(sa, ca), pb = slices_div_zpoly(sb, cb);
  auto pg = slices_prim_gcd(pa, pb);
  ZPoly cg = ZPoly::gcd(ca, cb);
  std::vector<ZPoly> gs(pg.size());
  for (size_t i = 0; i < pg.size(); ++i) gs[i] = pg[i] * cg;
  QTPoly g = from_t_slices(gs);
  if (g.trailing_sign() < 0) g = -g;
  return g;
}

QTPoly QTPoly::div_exact(const QTPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("QTPoly::div_exact by zero");
  if (is_zero()) return QTPoly::zero();
  // Long division with the (t-degree, q-degree) lex leading term.
  auto lead_key = [](const QTPoly& p) {
    Key best = p.terms.begin()->first;
    for (const auto& [k, v] : p.terms) {
      if (k.second > best.second || (k.second == best.second && k.first > best.first)) best = k;
    }
    return best;
  };
  QTPoly rem = *this, quo;
  Key dl = lead_key(d);
  const ZZ& dc = d.terms.at(dl);
  while (!rem.is_zero()) {
    Key rl = lead_key(rem);
    if (rl.first < dl.first || rl.second < dl.second)
      throw std::logic_error("QTPoly::div_exact: not divisible (monomial)");
    ZZ q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.terms.at(rl).get_mpz_t(), dc.get_mpz_t());
    if (r != 0) throw std::logic_error("QTPoly::div_exact: not divisible (coefficient)");
    QTPoly m = QTPoly::monomial(rl.first - dl.first, rl.second - dl.second, q);
    quo = quo + m;
    rem = rem - m * d;
  }
  return quo;
}

std::string QTPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms) {
    ZZ av = v < 0 ? ZZ(-v) : v;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    bool coeff_one = (av == 1) && (k.first > 0 || k.second > 0);
    if (!coeff_one) os << av.get_str();
    if (k.first > 0) {
      os << (coeff_one ? "" : " ") << "q";
      if (k.first > 1) os << "^" << k.first;
      coeff_one = false;
    }
    if (k.second > 0) {
      if (!coeff_one || k.first > 0) os << (k.first > 0 ? " " : (av == 1 ? "" : " "));
      os << "t";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// QTRatio

QTRatio::QTRatio(QTPoly n, QTPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

void QTRatio::normalize() {
  if (den.is_zero()) throw std::invalid_argument("QTRatio: zero denominator");
  if (num.is_zero()) {
    den = QTPoly::one();
    return;
  }
  QTPoly g = QTPoly::gcd(num, den);
  if (!g.is_one()) {
    num = num.div_exact(g);
    den = den.div_exact(g);
  }
  if (den.trailing_sign() < 0) {
    num = -num;
    den = -den;
  }
}

QTRatio QTRatio::qt_monomial(int a, int b, ZZ coeff) {
  QTPoly n = QTPoly::monomial(std::max(a, 0), std::max(b, 0), std::move(coeff));
  QTPoly d = QTPoly::monomial(std::max(-a, 0), std::max(-b, 0), 1);
  return QTRatio(n, d);
}

QTRatio QTRatio::operator+(const QTRatio& o) const {
  return QTRatio(num * o.den + o.num * den, den * o.den);
}

QTRatio QTRatio::operator-(const QTRatio& o) const {
  return QTRatio(num * o.den - o.num * den, den * o.den);
}

QTRatio QTRatio::operator*(const QTRatio& o) const { return QTRatio(num * o.num, den * o.den); }

QTRatio QTRatio::operator/(const QTRatio& o) const {
  if (o.is_zero()) throw std::invalid_argument("QTRatio: division by zero");
  return QTRatio(num * o.den, den * o.num);
}

QTRatio QTRatio::operator-() const {
  QTRatio r = *this;
  r.num = -r.num;
  return r;
}

QTRatio QTRatio::inverse() const {
  if (is_zero()) throw std::invalid_argument("QTRatio: inverse of zero");
  return QTRatio(den, num);
}

QTRatio QTRatio::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QTRatio r = QTRatio::one(), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

QQ QTRatio::eval(const QQ& q0, const QQ& t0) const {
  QQ d = den.eval(q0, t0);
  if (d == 0) throw std::domain_error("QTRatio::eval: denominator vanishes");
  return num.eval(q0, t0) / d;
}

QTRatio QTRatio::substituted_inverse_qt() const {
  // num(1/q,1/t)/den(1/q,1/t) = rev(num)/rev(den) * q^(dq_den-dq_num) t^(dt_den-dt_num)
  QTRatio base(num.reversed(), den.reversed());
  return base * qt_monomial(den.deg_q() - num.deg_q(), den.deg_t() - num.deg_t());
}

std::string QTRatio::str() const {
  if (den.is_one()) return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}

QTRatio qt_normalize(const QTPoly& num, const QTPoly& den) { return QTRatio(num, den); }

// ---------------------------------------------------------------------------
// XPoly

XPoly XPoly::one(int n) {
  XPoly p(n);
  p.terms[std::vector<int>(n, 0)] = QTRatio::one();
  return p;
}

XPoly XPoly::var(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("XPoly::var: index out of range");
  XPoly p(n);
  std::vector<int> e(n, 0);
  e[i - 1] = 1;
  p.terms[e] = QTRatio::one();
  return p;
}

XPoly XPoly::monomial(std::vector<int> exps, QTRatio coeff) {
  XPoly p(static_cast<int>(exps.size()));
  if (!coeff.is_zero()) p.terms[std::move(exps)] = std::move(coeff);
  return p;
}

XPoly XPoly::x_power(const std::vector<int>& beta, int n) {
  if (static_cast<int>(beta.size()) > n)
    throw std::invalid_argument("XPoly::x_power: exponent vector longer than n");
  std::vector<int> e(n, 0);
  std::copy(beta.begin(), beta.end(), e.begin());
  for (int v : e)
    if (v < 0) throw std::invalid_argument("XPoly::x_power: negative exponent");
  return monomial(std::move(e));
}

bool XPoly::operator==(const XPoly& o) const {
  if (n != o.n) return false;
  return terms == o.terms;
}

void XPoly::add_term(const std::vector<int>& exps, const QTRatio& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms.find(exps);
  if (it == terms.end()) {
    terms[exps] = coeff;
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

QTRatio XPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms.find(exps);
  return it == terms.end() ? QTRatio::zero() : it->second;
}

long XPoly::total_degree() const {
  long d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, std::accumulate(e.begin(), e.end(), 0L));
  return d;
}

XPoly XPoly::operator+(const XPoly& o) const {
  if (n != o.n) throw std::invalid_argument("XPoly: mismatched variable counts");
  XPoly r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, c);
  return r;
}

XPoly XPoly::operator-(const XPoly& o) const { return *this + (-o); }

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
  if (n != o.n) throw std::invalid_argument("XPoly: mismatched variable counts");
  XPoly r(n);
  for (const auto& [ea, ca] : terms)
    for (const auto& [eb, cb] : o.terms) {
      std::vector<int> e(n);
      for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

XPoly XPoly::scaled(const QTRatio& k) const {
  XPoly r(n);
  if (k.is_zero()) return r;
  for (const auto& [e, c] : terms) {
    QTRatio p = c * k;
    if (!p.is_zero()) r.terms[e] = p;
  }
  return r;
}

XPoly XPoly::substitute(const std::vector<VarImage>& images) const {
  if (static_cast<int>(images.size()) != n)
    throw std::invalid_argument("XPoly::substitute: need exactly n images");
  std::vector<bool> seen(n, false);
  for (const auto& im : images) {
    if (im.target < 1 || im.target > n || seen[im.target - 1] || im.scale.is_zero())
      throw std::invalid_argument("XPoly::substitute: images must permute variables");
    seen[im.target - 1] = true;
  }
  XPoly r(n);
  for (const auto& [e, c] : terms) {
    std::vector<int> ne(n, 0);
    QTRatio nc = c;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      ne[images[i].target - 1] += e[i];
      if (!images[i].scale.is_one()) nc = nc * images[i].scale.pow(e[i]);
    }
    r.add_term(ne, nc);
  }
  return r;
}

XPoly XPoly::swap_vars(int i) const {
  if (i < 1 || i >= n) throw std::invalid_argument("XPoly::swap_vars: index out of range");
  std::vector<VarImage> im(n);
  for (int k = 0; k < n; ++k) im[k].target = k + 1;
  im[i - 1].target = i + 1;
  im[i].target = i;
  return substitute(im);
}

XPoly XPoly::reverse_vars() const {
  std::vector<VarImage> im(n);
  for (int k = 0; k < n; ++k) im[k].target = n - k;
  return substitute(im);
}

XPoly XPoly::multiply_by_var(int i) const {
  if (i < 1 || i > n) throw std::invalid_argument("XPoly::multiply_by_var: index out of range");
  XPoly r(n);
  for (const auto& [e, c] : terms) {
    std::vector<int> ne = e;
    ne[i - 1] += 1;
    r.terms[ne] = c;
  }
  return r;
}

XPoly XPoly::divided_difference(int i) const {
  if (i < 1 || i >= n) throw std::invalid_argument("divided_difference: index out of range");
  XPoly g = *this - swap_vars(i);
  if (g.is_zero()) return XPoly::zero(n);
  // Synthetic division of g by (x_i - x_{i+1}), viewing g in powers of x_i.
  int d = 0;
  for (const auto& [e, c] : g.terms) d = std::max(d, e[i - 1]);
  // slice k: terms of g with x_i-exponent k, with that exponent removed
  std::vector<XPoly> gk(d + 1, XPoly(n));
  for (const auto& [e, c] : g.terms) {
    std::vector<int> e0 = e;
    int k = e0[i - 1];
    e0[i - 1] = 0;
    gk[k].add_term(e0, c);
  }
  std::vector<XPoly> hk(d, XPoly(n));  // quotient slices, degrees 0..d-1
  for (int k = d; k >= 1; --k) {
    XPoly carry = (k == d) ? XPoly::zero(n) : hk[k].multiply_by_var(i + 1);
    hk[k - 1] = gk[k] + carry;
  }
  XPoly check = gk[0] + hk[0].multiply_by_var(i + 1);
  if (!check.is_zero())
    throw std::logic_error("divided_difference: nonzero remainder (antisymmetry violated)");
  XPoly r(n);
  for (int k = 0; k < d; ++k)
    for (const auto& [e, c] : hk[k].terms) {
      std::vector<int> ne = e;
      ne[i - 1] += k;
      r.add_term(ne, c);
    }
  return r;
}

QQ XPoly::eval(const std::vector<QQ>& xs, const QQ& q0, const QQ& t0) const {
  if (static_cast<int>(xs.size()) != n) throw std::invalid_argument("XPoly::eval: need n values");
  QQ acc = 0;
  for (const auto& [e, c] : terms) {
    QQ term = c.eval(q0, t0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) term *= xs[i];
    acc += term;
  }
  return acc;
}

XPoly XPoly::specialize_qt(const QQ& q0, const QQ& t0) const {
  XPoly r(n);
  for (const auto& [e, c] : terms) {
    QQ v = c.eval(q0, t0);
    if (v == 0) continue;
    r.terms[e] = QTRatio(QTPoly::constant(v.get_num()), QTPoly::constant(v.get_den()));
  }
  return r;
}

XPoly XPoly::substituted_inverse_qt() const {
  XPoly r(n);
  for (const auto& [e, c] : terms) {
    QTRatio nc = c.substituted_inverse_qt();
    if (!nc.is_zero()) r.terms[e] = nc;
  }
  return r;
}

namespace {
std::string monomial_str(const std::vector<int>& e, bool latex) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (latex) {
      os << "x_{" << i + 1 << "}";
      if (e[i] > 1) os << "^{" << e[i] << "}";
    } else {
      if (!first) os << " ";
      os << "x" << i + 1;
      if (e[i] > 1) os << "^" << e[i];
    }
    first = false;
  }
  return os.str();
}
}  // namespace

std::string XPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [e, c] = *it;
    std::string ms = monomial_str(e, false);
    if (ms.empty()) {
      os << c.str();
    } else if (c.is_one()) {
      os << ms;
    } else {
      os << "[" << c.str() << "] " << ms;
    }
  }
  return os.str();
}

std::string XPoly::latex() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [e, c] = *it;
    std::string ms = monomial_str(e, true);
    if (!c.is_one() || ms.empty()) {
      if (c.den.is_one()) {
        os << "\\left(" << c.num.str() << "\\right)";
      } else {
        os << "\\frac{" << c.num.str() << "}{" << c.den.str() << "}";
      }
    }
    os << ms;
  }
  return os.str();
}

}  // namespace qschur
