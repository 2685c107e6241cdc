#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qschur/lrrule.hpp"

using namespace qschur;

TEST_CASE("rho on the worked instance") {
  Grid u{{{1}, {4, 3, 2}, {5, 4}, {5, 3}}};
  Grid t{{{4, 3, 2, 1}, {4, 3}, {2}}};  // shape (3,2,1,1)^t = (4,2,1)
  RhoResult r = rho(u, t);
  CHECK(r.v.rows ==
        std::vector<std::vector<int>>{{1}, {3, 2}, {4, 3, 2}, {4}, {5, 4, 3, 2, 1}, {5, 4, 3}});
  CHECK(r.s.outer == Composition{1, 2, 3, 1, 5, 3});
  CHECK(r.s.inner == Composition{1, 0, 3, 0, 2, 2});
  CHECK(r.s.rows == std::vector<std::vector<int>>{{}, {4, 3}, {}, {4}, {4, 2, 1}, {3}});
  CHECK(validate_lr_skew(r.s).ok);
  CHECK(column_reading_word(r.s) == Word{4, 4, 3, 3, 4, 2, 1});

  auto [u2, t2] = rho_inverse(r.v, r.s);
  CHECK(u2 == u);
  CHECK(t2 == t);
}

TEST_CASE("rho trivial case: empty T") {
  Grid u{{{1}, {3, 2}}};
  RhoResult r = rho(u, Grid{});
  CHECK(r.v == u);
  CHECK(r.s.outer == u.shape());
  CHECK(r.s.inner == u.shape());
  auto [u2, t2] = rho_inverse(r.v, r.s);
  CHECK(u2 == u);
  CHECK(t2.rows.empty());
}

TEST_CASE("rho round-trips exhaustively") {
  // all (U, T) with |alpha| <= 3, |lambda| <= 3, entries <= 3
  for (int da = 0; da <= 3; ++da)
    for (const Composition& alpha : strong_compositions_of(da))
      for (int dl = 1; dl <= 3; ++dl)
        for (const Composition& lam : partitions_of(dl)) {
          std::vector<Grid> ts;
          enumerate(TabKind::RRST, transpose(lam), 3, [&](const Grid& g) { ts.push_back(g); });
          enumerate(TabKind::RCT, alpha, 3, [&](const Grid& u) {
            for (const Grid& t : ts) {
              RhoResult r = rho(u, t);
              CHECK(validate_lr_skew(r.s).ok);
              CHECK(skew_content(r.s) == reverse_comp(lam));
              auto [u2, t2] = rho_inverse(r.v, r.s);
              CHECK(u2 == u);
              CHECK(t2 == t);
            }
          });
        }
}

TEST_CASE("LR coefficients: worked shape and trivial lambda") {
  // the Fig. instance witnesses beta = (1,2,3,1,5,3)
  CHECK(lr_coefficient({1, 3, 2, 2}, {3, 2, 1, 1}, {1, 2, 3, 1, 5, 3}) >= 1);
  // lambda empty: 1 iff beta = alpha
  CHECK(lr_coefficient({1, 2}, {}, {1, 2}) == 1);
  CHECK(lr_coefficient({1, 2}, {}, {2, 1}) == 0);
  CHECK_THROWS_AS(lr_coefficient({1, 2}, {2}, {1, 2}), std::invalid_argument);
}

TEST_CASE("expansion equals the product (alpha=(1,2), lambda=(2,1), 6 vars)") {
  // expand_product verifies the polynomial identity internally and would
  // throw on any mismatch
  LRExpansion ex = expand_product({1, 2}, {2, 1}, 6);
  CHECK(!ex.terms.empty());
  for (const auto& [beta, c] : ex.terms) {
    CHECK(c > 0);
    CHECK(comp_size(beta) == 6);
    CHECK(lr_coefficient({1, 2}, {2, 1}, beta) == c);
  }
  LRExpansion small = expand_product({1}, {1}, 2);
  CHECK(!small.terms.empty());
  CHECK_THROWS_AS(expand_product({1}, {1}, 1), std::invalid_argument);
}

TEST_CASE("super filling: worked instance, trivial case, uniqueness") {
  Composition lam{3, 3, 2, 2, 2, 1, 1}, alpha{1, 3, 1, 2, 3, 1, 2};
  SkewGrid su = super_filling(lam, alpha);
  CHECK(su.inner == alpha);
  CHECK(su.outer == phi_pair(lam, alpha));
  CHECK(su.rows == std::vector<std::vector<int>>{{},
                                                 {7, 6, 5, 4, 3},
                                                 {},
                                                 {},
                                                 {7, 6, 5, 4, 3, 2, 1},
                                                 {},
                                                 {7, 6}});
  CHECK(validate_lr_skew(su).ok);
  CHECK(skew_content(su) == reverse_comp(lam));

  SkewGrid trivial = super_filling({}, {2, 1});
  CHECK(trivial.outer == Composition{2, 1});
  CHECK(trivial.inner == Composition{2, 1});

  // SU is the unique LR skew filling of shape phi(lam,alpha)/alpha with
  // content reverse(lambda), |lambda|+|alpha| <= 6
  for (int dl = 1; dl <= 4; ++dl)
    for (const Composition& l : partitions_of(dl))
      for (int da = 0; da + dl <= 6; ++da)
        for (const Composition& a : strong_compositions_of(da)) {
          if (!is_pure(a) || !is_inverting(a)) continue;
          SkewGrid s = super_filling(l, a);
          CHECK(validate_lr_skew(s).ok);
          Composition beta = phi_pair(l, a);
          long count = 0;
          for (const Composition& gamma : zero_placements(strip_zeros(s.inner), beta))
            enumerate_lr_fillings(beta, gamma, reverse_comp(l),
                                  [&](const SkewGrid&) { ++count; });
          CHECK(count == 1);
        }
}

TEST_CASE("coefficients are insertion-certified: the (2,2) regression") {
  // the stated skew conditions alone admit a filling of shape (1,1,2) with
  // content (2,2) that no insertion produces; the certified count excludes it
  CHECK(lr_coefficient({}, {2, 2}, {1, 1, 2}) == 0);
  CHECK(lr_coefficient({}, {2, 2}, {2, 2}) == 1);
  LRExpansion ex = expand_product({}, {2, 2}, 4);  // verified internally
  CHECK(ex.terms.size() == 1);
  CHECK(ex.terms.count({2, 2}) == 1);
  // certification does not depend on the companion tableau: the expansion
  // identity holds across every alpha of size <= 2 against lambda = (2,2)
  for (int da = 0; da <= 2; ++da)
    for (const Composition& alpha : strong_compositions_of(da))
      CHECK_NOTHROW(expand_product(alpha, {2, 2}, da + 4));
}

TEST_CASE("coinvariant transition matrices are uni-uppertriangular, d <= 4") {
  for (int d = 0; d <= 4; ++d) {
    CoinvariantBasis cb = coinvariant_basis(d, std::max(d, 1));
    CHECK(cb.pairs.size() == cb.comps.size());
    CHECK(cb.uni_upper);
    // leading term of s_lambda RS_alpha is RS_{phi(lambda,alpha)}
    for (size_t r = 0; r < cb.pairs.size(); ++r)
      CHECK(phi_pair(cb.pairs[r].first, cb.pairs[r].second) == cb.comps[r]);
  }
  // d = 1: the single element is s_(1) RS_empty
  CoinvariantBasis cb1 = coinvariant_basis(1, 1);
  CHECK(cb1.pairs.size() == 1);
  CHECK(cb1.pairs[0].first == Composition{1});
  CHECK(cb1.pairs[0].second.empty());
  CHECK(cb1.matrix == std::vector<std::vector<long>>{{1}});
}
