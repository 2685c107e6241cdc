#include "qschur/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qschur/demazure.hpp"
#include "qschur/insertion.hpp"
#include "qschur/lrrule.hpp"
#include "qschur/lspaths.hpp"
#include "qschur/patterns.hpp"

namespace qschur {

namespace {

struct Rng {
  uint64_t s = 0x2545f4914f6cdd1dull;
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

QTPoly random_qtpoly(Rng& rng) {
  QTPoly p;
  for (int k = rng.range(0, 4); k > 0; --k) {
    int c = rng.range(-5, 5);
    if (c == 0) c = 1;
    p = p + QTPoly::monomial(rng.range(0, 3), rng.range(0, 3), c);
  }
  return p;
}

QTRatio random_qtratio(Rng& rng) {
  QTPoly den = random_qtpoly(rng);
  if (den.is_zero()) den = QTPoly::one();
  return QTRatio(random_qtpoly(rng), den);
}

void add(std::vector<Report>& out, const std::string& id, bool pass,
         const std::string& detail = "") {
  out.push_back({id, pass, detail});
}

std::vector<Grid> rcts_upto(int max_size, int n) {
  std::vector<Grid> out;
  for (int d = 0; d <= max_size; ++d)
    for (const Composition& shape : strong_compositions_of(d))
      enumerate(TabKind::RCT, shape, n, [&](const Grid& g) { out.push_back(g); });
  return out;
}

}  // namespace

std::vector<Report> verify_exact(int trials) {
  std::vector<Report> out;
  Rng rng;
  bool field = true, division = true, idem = true, evalhom = true;
  for (int k = 0; k < trials; ++k) {
    QTRatio a = random_qtratio(rng), b = random_qtratio(rng), c = random_qtratio(rng);
    if (!((a + b) + c == a + (b + c))) field = false;
    if (!((a * b) * c == a * (b * c))) field = false;
    if (!(a * (b + c) == a * b + a * c)) field = false;
    if (!a.is_zero() && !(a * a.inverse() == QTRatio::one())) field = false;
    if (!(QTRatio(a.num, a.den) == a)) idem = false;
    QTPoly p = random_qtpoly(rng), q = random_qtpoly(rng);
    if (!q.is_zero() && !((p * q).div_exact(q) == p)) division = false;
    QQ q0 = make_qq(rng.range(-7, 7), rng.range(1, 5)), t0 = make_qq(rng.range(-7, 7), rng.range(1, 5));
    try {
      if (!((a * b).eval(q0, t0) == a.eval(q0, t0) * b.eval(q0, t0))) evalhom = false;
    } catch (const std::domain_error&) {
    }
  }
  add(out, "field axioms on random rational functions", field);
  add(out, "exact division round-trips", division);
  add(out, "normalization idempotence", idem);
  add(out, "evaluation is a ring homomorphism", evalhom);
  return out;
}

std::vector<Report> verify_combinat(int dmax) {
  std::vector<Report> out;
  bool total = true;
  for (int d = 1; d <= dmax; ++d) {
    auto comps = strong_compositions_of(d);
    for (size_t a = 0; a < comps.size(); ++a)
      for (size_t b = 0; b < comps.size(); ++b) {
        int ab = lexrev_compare(comps[a], comps[b]);
        if (ab != -lexrev_compare(comps[b], comps[a])) total = false;
        if (a != b && ab == 0) total = false;
      }
  }
  add(out, "lexrev is a total order", total);
  bool bij = true;
  for (int d = 0; d <= dmax; ++d) {
    std::set<Composition> images;
    long count = 0;
    for (int k = 0; k <= d; ++k)
      for (const Composition& lam : partitions_of(k))
        for (const Composition& alpha : strong_compositions_of(d - k)) {
          if (!is_pure(alpha) || !is_inverting(alpha)) continue;
          ++count;
          images.insert(phi_pair(lam, alpha));
        }
    long target = d == 0 ? 1 : (1L << (d - 1));
    if (count != target || static_cast<long>(images.size()) != count) bij = false;
  }
  add(out, "phi is a bijection onto compositions", bij);
  return out;
}

std::vector<Report> verify_insertion(int max_size, int n) {
  std::vector<Report> out;
  std::vector<Grid> pool = rcts_upto(max_size, n);
  bool rows_ok = true, lastrow_ok = true, roundtrip_ok = true;
  for (const Grid& u : pool)
    for (int b = 1; b <= n; ++b) {
      InsertionResult r = rct_insert(u, b);  // validity + one path box per row
      std::vector<int> per_row(r.tableau.rows.size(), 0);
      for (const auto& [i, j] : r.path)
        if (++per_row[i - 1] > 1) rows_ok = false;
      Composition shape = r.tableau.shape();
      int len = shape[r.new_box.first - 1];
      for (size_t row = r.new_box.first; row < shape.size(); ++row)
        if (shape[row] == len) lastrow_ok = false;
      auto [back, k] = rct_uninsert(r.tableau, r.new_box.first);
      if (k != b || !(back == u)) roundtrip_ok = false;
    }
  add(out, "each insertion path hits a row at most once", rows_ok);
  add(out, "no row below the augmented row shares its length", lastrow_ok);
  add(out, "insert/un-insert round-trip", roundtrip_ok);

  bool bump_ok = true, knuth_ok = true, order_ok = true;
  auto adjust = [](std::vector<std::pair<int, int>>& boxes, std::pair<int, int> nb) {
    if (nb.second != 1) return;
    for (auto& [i, j] : boxes)
      if (i >= nb.first) ++i;
  };
  for (const Grid& u : pool) {
    for (int b = 1; b <= n; ++b)
      for (int c = b; c <= n; ++c)
        for (int a = 1; a < b; ++a) {
          InsertionResult rb = rct_insert(u, b);
          InsertionResult rc = rct_insert(rb.tableau, c);
          if (rc.new_box.second > rb.new_box.second) bump_ok = false;
          InsertionResult ra = rct_insert(rb.tableau, a);
          if (ra.new_box.second <= rb.new_box.second) bump_ok = false;
          std::map<int, int> pb;
          std::vector<std::pair<int, int>> path_b = rb.path;
          adjust(path_b, rc.new_box);
          for (auto [i, j] : path_b) pb[i] = j;
          for (auto [i, j] : rc.path)
            if (pb.count(i) && j > pb[i]) bump_ok = false;
          pb.clear();
          for (auto [i, j] : rb.path) pb[i] = j;
          for (auto [i, j] : ra.path)
            if (pb.count(i) && j <= pb[i]) bump_ok = false;
          if (!(rct_insert_word(u, {b, c, a}) == rct_insert_word(u, {b, a, c}))) knuth_ok = false;
        }
    for (int b1 = 1; b1 <= n; ++b1)
      for (int b2 = b1; b2 <= n; ++b2) {
        Grid cur = u;
        std::vector<std::pair<int, int>> boxes;
        for (int b : {b1, b2}) {
          InsertionResult r = rct_insert(cur, b);
          adjust(boxes, r.new_box);
          boxes.push_back(r.new_box);
          cur = r.tableau;
        }
        auto cl = [](std::pair<int, int> x, std::pair<int, int> y) {
          return x.second != y.second ? x.second < y.second : x.first > y.first;
        };
        if (!cl(boxes[1], boxes[0])) order_ok = false;
      }
  }
  add(out, "new boxes respect the bumping comparisons", bump_ok);
  add(out, "weakly increasing insertions add boxes in falling reading order", order_ok);
  add(out, "insertion is constant on elementary equivalence moves", knuth_ok);
  return out;
}

std::vector<Report> verify_lrrule(int amax, int lmax) {
  std::vector<Report> out;
  bool expansions = true, roundtrip = true;
  std::string detail;
  for (int da = 0; da <= amax; ++da)
    for (const Composition& alpha : strong_compositions_of(da))
      for (int dl = 0; dl <= lmax; ++dl)
        for (const Composition& lam : partitions_of(dl)) {
          try {
            expand_product(alpha, lam, std::max(da + dl, 1));
          } catch (const std::exception& e) {
            expansions = false;
            detail = "alpha=(" + comp_to_text(alpha) + ") lambda=(" + comp_to_text(lam) + ")";
          }
        }
  add(out, "expansions match the exact polynomial product", expansions, detail);
  int ra = std::min(amax, 3), rl = std::min(lmax, 3);
  for (int da = 0; da <= ra; ++da)
    for (const Composition& alpha : strong_compositions_of(da))
      for (int dl = 1; dl <= rl; ++dl)
        for (const Composition& lam : partitions_of(dl)) {
          std::vector<Grid> ts;
          enumerate(TabKind::RRST, transpose(lam), 3, [&](const Grid& t) { ts.push_back(t); });
          enumerate(TabKind::RCT, alpha, 3, [&](const Grid& u) {
            for (const Grid& t : ts) {
              RhoResult r = rho(u, t);
              if (!validate_lr_skew(r.s).ok) roundtrip = false;
              auto [u2, t2] = rho_inverse(r.v, r.s);
              if (!(u2 == u) || !(t2 == t)) roundtrip = false;
            }
          });
        }
  add(out, "the insertion bijection round-trips", roundtrip);
  return out;
}

std::vector<Report> verify_coinvariant(int dmax) {
  std::vector<Report> out;
  bool tri = true, unique = true;
  std::string detail;
  for (int d = 0; d <= dmax; ++d) {
    CoinvariantBasis cb = coinvariant_basis(d, std::max(d, 1));
    if (!cb.uni_upper) {
      tri = false;
      detail = "d=" + std::to_string(d);
    }
  }
  add(out, "transition matrices are uni-uppertriangular", tri, detail);
  for (int dl = 1; dl <= dmax; ++dl)
    for (const Composition& lam : partitions_of(dl))
      for (int da = 0; da + dl <= dmax + 1; ++da)
        for (const Composition& alpha : strong_compositions_of(da)) {
          if (!is_pure(alpha) || !is_inverting(alpha)) continue;
          SkewGrid su = super_filling(lam, alpha);
          if (!validate_lr_skew(su).ok) unique = false;
          Composition beta = phi_pair(lam, alpha);
          long count = 0;
          for (const Composition& gamma : zero_placements(strip_zeros(su.inner), beta))
            enumerate_lr_fillings(beta, gamma, reverse_comp(lam), [&](const SkewGrid&) { ++count; });
          if (count != 1) unique = false;
        }
  add(out, "super fillings are the unique fillings of their shape", unique);
  return out;
}

std::vector<Report> verify_atoms(int max_size, int n) {
  std::vector<Report> out;
  bool positive = true, ways = true;
  std::string detail;
  for (int d = 0; d <= max_size; ++d)
    for (const Composition& gamma : weak_compositions_of(d, n)) {
      XPoly atom = demazure_atom(gamma, n);
      for (const auto& [e, c] : atom.terms)
        if (!c.is_integer() || c.num.trailing_sign() < 0) positive = false;
      bool agree = atom_via_ct(gamma, n) == atom && atom_via_keys(gamma, n) == atom &&
                   atom_via_paths(gamma, n) == atom &&
                   macdonald_hat(gamma, n).specialize_qt(QQ(0), QQ(0)) == atom;
      XPoly caps = XPoly::zero(n);
      enumerate_caps(gamma, [&](const TriArray& x) { caps = caps + cap_weight(x); });
      agree = agree && caps == atom;
      if (!agree) {
        ways = false;
        detail = "gamma=(" + comp_to_text(gamma) + ")";
      }
    }
  add(out, "atom coefficients are nonnegative integers", positive);
  add(out, "six atom constructions agree", ways, detail);
  return out;
}

std::vector<Report> verify_patterns(int max_size, int n) {
  std::vector<Report> out;
  bool psi_ok = true, theta_ok = true, big_ok = true, square_ok = true;
  for (int d = 0; d <= max_size; ++d)
    for (const Composition& gamma : weak_compositions_of(d, n))
      enumerate_caps(gamma, [&](const TriArray& x) {
        Grid ct = psi(x);
        if (!validate(TabKind::CT, ct).ok || !(psi_inverse(ct, n) == x)) psi_ok = false;
        TriArray g = cap_to_gt(x);
        if (!(gt_to_cap(g) == x)) big_ok = false;
      });
  for (int d = 1; d <= max_size; ++d)
    for (const Composition& shape : strong_compositions_of(d))
      enumerate(TabKind::CT, shape, n, [&](const Grid& ct) {
        if (!(theta_inverse(theta(ct)) == ct)) theta_ok = false;
        int m = 0;
        for (const auto& row : ct.rows)
          for (int v : row) m = std::max(m, v);
        TriArray x = psi_inverse(ct, m);
        if (!(tableau_from_gt(cap_to_gt(x)) == theta(ct))) square_ok = false;
      });
  add(out, "psi round-trips", psi_ok);
  add(out, "theta round-trips", theta_ok);
  add(out, "Theta and its inverse round-trip", big_ok);
  add(out, "the square of bijections commutes", square_ok);
  return out;
}

std::vector<Report> verify_lspaths(int dmax, int n) {
  std::vector<Report> out;
  bool closure_ok = true, inverse_ok = true, dim_ok = true, atoms_ok = true;
  for (int d = 0; d <= dmax; ++d)
    for (const Composition& lam : partitions_of(d)) {
      if (static_cast<int>(lam.size()) > n) continue;
      std::vector<RationalPath> paths;
      try {
        paths = enumerate_paths(lam, n);  // re-certifies each member
      } catch (const std::exception&) {
        closure_ok = false;
        continue;
      }
      long tabs = 0;
      if (strip_zeros(lam).empty())
        tabs = 1;
      else
        enumerate(TabKind::RRST, transpose(strip_zeros(lam)), n, [&](const Grid&) { ++tabs; });
      if (static_cast<long>(paths.size()) != tabs) dim_ok = false;
      for (const RationalPath& p : paths)
        for (int i = 1; i < n; ++i) {
          auto f = f_op(p, i);
          if (f) {
            auto back = e_op(*f, i);
            if (!back || !(*back == p)) inverse_ok = false;
            Composition w = path_weight_integral(p);
            w[i - 1] -= 1;
            w[i] += 1;
            if (path_weight_integral(*f) != w) inverse_ok = false;
          }
        }
      for (const Composition& gamma : weak_compositions_of(d, n)) {
        Composition padded = lam;
        padded.resize(n, 0);
        if (sort_to_partition(gamma) != padded) continue;
        if (!(atom_via_paths(gamma, n) == demazure_atom(gamma, n))) atoms_ok = false;
      }
    }
  add(out, "the raising/lowering closure certifies", closure_ok);
  add(out, "e undoes f and weights shift by a simple root", inverse_ok);
  add(out, "path counts match tableau counts", dim_ok);
  add(out, "atoms by paths match divided differences", atoms_ok);
  return out;
}

std::vector<Report> verify_hecke_relations(int deg, int n) {
  std::vector<Report> out;
  bool quad = true, braid = true, comm = true, rotate = true, ycomm = true;
  QTRatio t = QTRatio::qt_monomial(0, 1);
  for (int d = 0; d <= deg; ++d)
    for (const Composition& e : weak_compositions_of(d, n)) {
      XPoly f = XPoly::monomial(e);
      for (int i = 1; i < n; ++i) {
        XPoly tf = hecke_Ti(f, i);
        if (!(hecke_Ti(tf, i) == tf.scaled(t - QTRatio::one()) + f.scaled(t))) quad = false;
      }
      for (int i = 1; i + 1 < n; ++i) {
        if (!(hecke_Ti(hecke_Ti(hecke_Ti(f, i), i + 1), i) ==
              hecke_Ti(hecke_Ti(hecke_Ti(f, i + 1), i), i + 1)))
          braid = false;
        if (!(hecke_pi(hecke_Ti(hecke_pi_inverse(f), i)) == hecke_Ti(f, i + 1))) rotate = false;
      }
      for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
          if (!(hecke_Ti(hecke_Ti(f, i), j) == hecke_Ti(hecke_Ti(f, j), i))) comm = false;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (!(Y_op(i, Y_op(j, f)) == Y_op(j, Y_op(i, f)))) ycomm = false;
    }
  add(out, "quadratic relation", quad);
  add(out, "braid relation", braid);
  add(out, "distant generators commute", comm);
  add(out, "rotation conjugates the generators", rotate);
  add(out, "Cherednik operators commute", ycomm);
  return out;
}

}  // namespace qschur
