#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "qschur/tableaux.hpp"

using namespace qschur;

namespace {

// independent oracle: all fillings of the shape with entries <= n, filtered
// by the validator
std::set<Grid> brute_force(TabKind kind, const Composition& shape, int n) {
  std::set<Grid> out;
  Grid g;
  for (int p : shape) g.rows.push_back(std::vector<int>(p, 0));
  std::vector<std::pair<int, int>> cells;
  for (size_t i = 0; i < shape.size(); ++i)
    for (int j = 1; j <= shape[i]; ++j) cells.push_back({static_cast<int>(i) + 1, j});
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == cells.size()) {
      if (validate(kind, g).ok) out.insert(g);
      return;
    }
    auto [i, j] = cells[idx];
    for (int v = 1; v <= n; ++v) {
      g.rows[i - 1][j - 1] = v;
      rec(idx + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("worked validations: the RCT U and the LR skew filling S") {
  Grid u{{{1}, {4, 3, 2}, {5, 4}, {5, 3}}};
  CHECK(validate(TabKind::RCT, u).ok);
  CHECK(u.shape() == Composition{1, 3, 2, 2});

  SkewGrid s;
  s.outer = {1, 2, 3, 1, 5, 3};
  s.inner = {1, 0, 3, 0, 2, 2};
  s.rows = {{}, {4, 3}, {}, {4}, {4, 2, 1}, {3}};
  CHECK(validate_lr_skew(s).ok);
  CHECK(column_reading_word(s) == Word{4, 4, 3, 3, 4, 2, 1});
  CHECK(skew_content(s) == Composition{1, 1, 2, 3});

  Grid single{{{1}}};
  CHECK(validate(TabKind::RRST, single).ok);
  CHECK(validate(TabKind::RCT, single).ok);
  CHECK(validate(TabKind::CT, single).ok);
}

TEST_CASE("validator reports name the first failing rule") {
  Grid bad_rct{{{1}, {3, 3}}};
  Violation v = validate(TabKind::RCT, bad_rct);
  CHECK_FALSE(v.ok);
  CHECK(v.rule == "rows strictly decrease");
  Grid bad_ct{{{2}, {2, 1}}};
  CHECK_FALSE(validate(TabKind::CT, bad_ct).ok);
  Grid bad_rrst{{{2, 1}, {3}}};
  CHECK_FALSE(validate(TabKind::RRST, bad_rrst).ok);  // column increases
}

TEST_CASE("triple rule catches the zero-padded configurations") {
  // rows (1),(3,2): hat entry (2,2)=2 > hat(1,2)=0 forces 2 >= U(1,1)=1: fine
  CHECK(validate(TabKind::RCT, Grid{{{1}, {3, 2}}}).ok);
  // rows (2),(3,1): 1 > 0 but 1 < 2: triple rule violation
  Violation v = validate(TabKind::RCT, Grid{{{2}, {3, 1}}});
  CHECK_FALSE(v.ok);
  CHECK(v.rule == "triple rule");
}

TEST_CASE("column reading word and contents") {
  Grid u{{{1}, {4, 3, 2}, {5, 4}, {5, 3}}};
  CHECK(column_reading_word(u) == Word{5, 5, 4, 1, 3, 4, 3, 2});
  CHECK(grid_content(u) == Composition{1, 1, 2, 2, 2});
  CHECK(column_reading_word(Grid{}).empty());

  // T_lambda for lambda = (2,2,1): column i filled with m+1-i
  Grid t = t_tableau({2, 2, 1});
  CHECK(t.rows == std::vector<std::vector<int>>{{2, 1}, {2, 1}, {2}});
  CHECK(column_reading_word(t) == Word{2, 2, 2, 1, 1});
  CHECK(grid_content(t) == Composition{2, 3});
  CHECK(validate(TabKind::RRST, t).ok);
}

TEST_CASE("enumeration agrees with the brute-force filter") {
  for (const Composition& shape :
       std::vector<Composition>{{1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 1}, {1, 1, 2}, {2, 1, 1}}) {
    for (int n = 1; n <= 4; ++n) {
      for (TabKind kind : {TabKind::RCT, TabKind::CT}) {
        std::set<Grid> fast;
        enumerate(kind, shape, n, [&](const Grid& g) { CHECK(fast.insert(g).second); });
        CHECK(fast == brute_force(kind, shape, n));
      }
    }
  }
  for (const Composition& shape : std::vector<Composition>{{2, 1}, {2, 2}, {3, 1}}) {
    std::set<Grid> fast;
    enumerate(TabKind::RRST, shape, 4, [&](const Grid& g) { CHECK(fast.insert(g).second); });
    CHECK(fast == brute_force(TabKind::RRST, shape, 4));
  }
}

TEST_CASE("enumerate smallest cases") {
  auto rcts = enumerate_all(TabKind::RCT, {1}, 2);
  CHECK(rcts.size() == 2);  // [1] and [2]
  // the worked CT of shape (1,3,2,2) appears among fillings with entries <= 7
  Grid want{{{1}, {3, 2, 2}, {6, 4}, {7, 7}}};
  bool found = false;
  enumerate(TabKind::CT, {1, 3, 2, 2}, 7, [&](const Grid& g) { found = found || g == want; });
  CHECK(found);
  CHECK(validate(TabKind::CT, want).ok);
}

TEST_CASE("generating functions: RS identities") {
  // RS_(3,2) = RS_(1,3,1) in three variables
  CHECK(gen_rs({3, 2}, 3) == gen_rs({1, 3, 1}, 3));
  // RS of the empty composition is 1
  CHECK(gen_rs({}, 3) == XPoly::one(3));

  // s_lambda = sum of RS_alpha over alpha rearranging transpose(lambda)
  for (int d = 1; d <= 5; ++d)
    for (const Composition& lam : partitions_of(d)) {
      int n = d;
      XPoly schur = gen_schur(lam, n);
      XPoly sum = XPoly::zero(n);
      Composition lt = transpose(lam);
      for (const Composition& alpha : strong_compositions_of(d))
        if (sort_to_partition(alpha) == sort_to_partition(lt)) sum = sum + gen_rs(alpha, n);
      CHECK(schur == sum);
    }
}

TEST_CASE("quasisymmetry of RS") {
  // coefficients agree across all strictly increasing variable index choices
  for (const Composition& alpha : std::vector<Composition>{{2, 1}, {1, 2}, {1, 1, 1}, {3, 1}}) {
    int n = comp_size(alpha) + 1;
    XPoly rs = gen_rs(alpha, n);
    for (const auto& [e, c] : rs.terms) {
      // the strong exponent pattern and its support
      std::vector<int> pattern;
      for (int v : e)
        if (v > 0) pattern.push_back(v);
      if (pattern.empty()) continue;
      // place the pattern at every increasing index sequence and compare
      std::vector<int> idx(pattern.size());
      std::function<void(size_t, int)> rec = [&](size_t k, int from) {
        if (k == pattern.size()) {
          std::vector<int> exps(n, 0);
          for (size_t a = 0; a < pattern.size(); ++a) exps[idx[a]] = pattern[a];
          CHECK(rs.coeff(exps) == c);
          return;
        }
        for (int p = from; p < n; ++p) {
          idx[k] = p;
          rec(k + 1, p + 1);
        }
      };
      rec(0, 0);
    }
  }
}

TEST_CASE("Schur polynomials are symmetric") {
  for (const Composition& lam : std::vector<Composition>{{2, 1}, {3, 1}, {2, 2}, {1, 1, 1}}) {
    XPoly s = gen_schur(lam, 4);
    for (int i = 1; i < 4; ++i) CHECK(s == s.swap_vars(i));
  }
}

TEST_CASE("every enumerated grid validates") {
  for (const Composition& shape : strong_compositions_of(4))
    for (TabKind kind : {TabKind::RCT, TabKind::CT})
      enumerate(kind, shape, 4, [&](const Grid& g) { CHECK(validate(kind, g).ok); });
}
