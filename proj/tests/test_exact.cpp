#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qschur/exact.hpp"
#include "qschur/serialize.hpp"

using namespace qschur;

namespace {

// deterministic xorshift for property tests
struct Rng {
  uint64_t s = 0x9e3779b97f4a7c15ull;
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

QTPoly random_qtpoly(Rng& rng, int max_terms = 4, int max_deg = 3) {
  QTPoly p;
  int terms = rng.range(0, max_terms);
  for (int k = 0; k < terms; ++k) {
    int c = rng.range(-5, 5);
    if (c == 0) c = 1;
    p = p + QTPoly::monomial(rng.range(0, max_deg), rng.range(0, max_deg), c);
  }
  return p;
}

QTRatio random_qtratio(Rng& rng) {
  QTPoly num = random_qtpoly(rng);
  QTPoly den = random_qtpoly(rng);
  if (den.is_zero()) den = QTPoly::one();
  return QTRatio(num, den);
}

QQ random_point(Rng& rng) { return make_qq(rng.range(-7, 7), rng.range(1, 5)); }

const QTPoly q = QTPoly::monomial(1, 0);
const QTPoly t = QTPoly::monomial(0, 1);
const QTPoly one = QTPoly::one();

}  // namespace

TEST_CASE("qt_normalize worked examples") {
  // zero numerator
  CHECK(qt_normalize(q - q, one).is_zero());
  // exact cancellation: (1-t^2)/(1-t) = 1+t
  QTRatio r = qt_normalize(one - t * t, one - t);
  CHECK(r.num == one + t);
  CHECK(r.den == one);
  // ((1-t)(1-qt), (1-qt)(1-qt^2)) -> (1-t)/(1-qt^2)
  QTRatio s = qt_normalize((one - t) * (one - q * t), (one - q * t) * (one - q * t * t));
  CHECK(s.num == one - t);
  CHECK(s.den == one - q * t * t);
  // cross-check against evaluation at 20 random rational points
  Rng rng;
  int checked = 0;
  while (checked < 20) {
    QQ q0 = random_point(rng), t0 = random_point(rng);
    QQ den_val = ((one - q * t) * (one - q * t * t)).eval(q0, t0);
    if (den_val == 0) continue;
    QQ lhs = ((one - t) * (one - q * t)).eval(q0, t0) / den_val;
    CHECK(lhs == s.eval(q0, t0));
    ++checked;
  }
  CHECK_THROWS_AS(qt_normalize(one, QTPoly::zero()), std::invalid_argument);
}

TEST_CASE("denominator sign normalization is canonical") {
  QTRatio a(one - t, t - one);     // = -1
  CHECK(a == QTRatio(-1));
  QTRatio b(-(one - t), one - t);  // also -1
  CHECK(a == b);
  // equal fractions normalize identically
  QTRatio c((one - t) * (one + q), (one - t) * (one - q * t));
  QTRatio d(one + q, one - q * t);
  CHECK(c == d);
}

TEST_CASE("field axioms on random triples") {
  Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    QTRatio a = random_qtratio(rng), b = random_qtratio(rng), c = random_qtratio(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!a.is_zero()) CHECK(a * a.inverse() == QTRatio::one());
  }
}

TEST_CASE("exact division: divisor times quotient is the dividend") {
  Rng rng;
  for (int trial = 0; trial < 100; ++trial) {
    QTPoly a = random_qtpoly(rng), b = random_qtpoly(rng);
    if (b.is_zero()) continue;
    QTPoly prod = a * b;
    CHECK(prod.div_exact(b) * b == prod);
    QTPoly g = QTPoly::gcd(a, b);
    if (!a.is_zero()) CHECK(a.div_exact(g) * g == a);
    CHECK(b.div_exact(g) * g == b);
  }
}

TEST_CASE("normalization idempotence and evaluation homomorphism") {
  Rng rng;
  for (int trial = 0; trial < 100; ++trial) {
    QTRatio a = random_qtratio(rng), b = random_qtratio(rng);
    CHECK(QTRatio(a.num, a.den) == a);
    QQ q0 = random_point(rng), t0 = random_point(rng);
    bool ok = true;
    QQ ea, eb;
    try {
      ea = a.eval(q0, t0);
      eb = b.eval(q0, t0);
    } catch (const std::domain_error&) {
      ok = false;  // a denominator vanished at the sample point
    }
    if (!ok) continue;
    CHECK((a * b).eval(q0, t0) == ea * eb);
    CHECK((a + b).eval(q0, t0) == ea + eb);
  }
}

TEST_CASE("xpoly arithmetic basics") {
  XPoly x1 = XPoly::var(1, 3), x2 = XPoly::var(2, 3);
  XPoly sum = x1 + x2;
  CHECK(sum.coeff({1, 0, 0}) == QTRatio::one());
  CHECK(sum.coeff({0, 1, 0}) == QTRatio::one());
  XPoly m = XPoly::monomial({2, 1, 0});
  CHECK(m * XPoly::one(3) == m);
  CHECK((m - m).is_zero());
  CHECK_THROWS_AS(XPoly::one(2) + XPoly::one(3), std::invalid_argument);
}

TEST_CASE("substitute: transposition, rotation, and iterated rotation") {
  XPoly m = XPoly::monomial({2, 1, 0});  // x1^2 x2
  XPoly swapped = m.swap_vars(1);
  CHECK(swapped == XPoly::monomial({1, 2, 0}));

  // pi-style map x1->x2, x2->x3, x3->q^{-1} x1 applied to x3
  std::vector<VarImage> im(3);
  im[0] = {2, QTRatio::one()};
  im[1] = {3, QTRatio::one()};
  im[2] = {1, QTRatio::qt_monomial(-1, 0)};
  XPoly x3 = XPoly::var(3, 3);
  XPoly img = x3.substitute(im);
  CHECK(img == XPoly::monomial({1, 0, 0}, QTRatio::qt_monomial(-1, 0)));

  // pi applied n times to x1 gives q^{-1} x1
  XPoly cur = XPoly::var(1, 3);
  for (int k = 0; k < 3; ++k) cur = cur.substitute(im);
  CHECK(cur == XPoly::monomial({1, 0, 0}, QTRatio::qt_monomial(-1, 0)));

  // non-permutation images are rejected
  std::vector<VarImage> bad(3);
  bad[0] = {1, QTRatio::one()};
  bad[1] = {1, QTRatio::one()};
  bad[2] = {3, QTRatio::one()};
  CHECK_THROWS_AS(m.substitute(bad), std::invalid_argument);
}

TEST_CASE("divided difference") {
  XPoly x1 = XPoly::var(1, 2), x2 = XPoly::var(2, 2);
  CHECK(x1.divided_difference(1) == XPoly::one(2));
  // (x1^2 x2 - x2^2 x1)/(x1 - x2) = x1 x2, verified by re-multiplication
  XPoly f = XPoly::monomial({2, 1});
  XPoly d = f.divided_difference(1);
  CHECK(d == XPoly::monomial({1, 1}));
  CHECK(d * (x1 - x2) == f - f.swap_vars(1));
  // symmetric input vanishes
  XPoly sym = x1 * x2 + x1 + x2;
  CHECK(sym.divided_difference(1).is_zero());
}

TEST_CASE("divided difference against re-multiplication on random inputs") {
  Rng rng;
  for (int trial = 0; trial < 60; ++trial) {
    XPoly f(3);
    for (int k = rng.range(1, 4); k > 0; --k)
      f.add_term({rng.range(0, 3), rng.range(0, 3), rng.range(0, 2)}, QTRatio(rng.range(-3, 3)));
    int i = rng.range(1, 2);
    XPoly d = f.divided_difference(i);
    XPoly xi = XPoly::var(i, 3), xi1 = XPoly::var(i + 1, 3);
    CHECK(d * (xi - xi1) == f - f.swap_vars(i));
  }
}

TEST_CASE("canonical JSON round-trips") {
  XPoly p(2);
  p.add_term({2, 0}, QTRatio(QTPoly::one() - t, QTPoly::one() - q * t));
  p.add_term({0, 1}, QTRatio(3));
  json j = xpoly_to_json(p);
  CHECK(xpoly_from_json(j) == p);
  // determinism: serializing twice gives identical text
  CHECK(j.dump() == xpoly_to_json(p).dump());
}

TEST_CASE("inverse-parameter substitution") {
  // r = (1-t)/(1-qt): r(1/q,1/t) = (1-1/t)/(1-1/(qt)) = q(t-1)/(qt-1)
  QTRatio r(one - t, one - q * t);
  QTRatio s = r.substituted_inverse_qt();
  QTRatio expect(q * t - q, q * t - one);
  CHECK(s == expect);
  Rng rng;
  for (int trial = 0; trial < 40; ++trial) {
    QTRatio a = random_qtratio(rng);
    QQ q0 = random_point(rng), t0 = random_point(rng);
    if (q0 == 0 || t0 == 0) continue;
    try {
      QQ lhs = a.substituted_inverse_qt().eval(q0, t0);
      QQ rhs = a.eval(QQ(1) / q0, QQ(1) / t0);
      CHECK(lhs == rhs);
    } catch (const std::domain_error&) {
      continue;
    }
  }
}
