#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qschur/demazure.hpp"
#include "qschur/lspaths.hpp"
#include "qschur/tableaux.hpp"

using namespace qschur;

TEST_CASE("straight path: weight and h-profile") {
  RationalPath p = straight_path({2, 1, 0}, 3);
  CHECK(path_weight_integral(p) == Composition{2, 1, 0});
  HProfile hp = h_profile(p, 1);
  CHECK(hp.h.back() == QQ(1));  // lambda_1 - lambda_2
  CHECK(hp.Q == QQ(0));
  CHECK(hp.P == QQ(1));
  CHECK(is_ls_path(p));
}

TEST_CASE("single-step paths are always LS paths") {
  for (const Perm& tau : all_perms(3)) {
    Composition lam{2, 1, 0};
    auto [rep, sorted] = min_coset_rep(tau.apply_to_vector(lam));
    if (!(rep == tau)) continue;
    RationalPath p;
    p.lambda = lam;
    p.chain = {tau};
    p.cuts = {QQ(0), QQ(1)};
    CHECK(is_ls_path(p));
  }
}

TEST_CASE("f on the straight path of (2,1,0) lowers the weight by alpha_1") {
  RationalPath p = straight_path({2, 1, 0}, 3);
  auto f = f_op(p, 1);
  REQUIRE(f.has_value());
  CHECK(path_weight_integral(*f) == Composition{1, 2, 0});
  CHECK(is_ls_path(*f));
  // P = 0 gives null: h stays at 0 for i = 1 after weight (1,2,0)? use a case
  // with equal adjacent entries instead
  RationalPath q = straight_path({2, 2, 0}, 3);
  CHECK_FALSE(f_op(q, 1).has_value());  // <lambda, alpha_1> = 0
}

TEST_CASE("e undoes f across the full closure") {
  for (const Composition& lam : std::vector<Composition>{{1, 0, 0}, {2, 1, 0}, {2, 2, 0}, {1, 1, 0}}) {
    for (const RationalPath& p : enumerate_paths(lam, 3)) {
      for (int i = 1; i < 3; ++i) {
        auto f = f_op(p, i);
        if (f) {
          auto back = e_op(*f, i);
          REQUIRE(back.has_value());
          CHECK(*back == p);
        }
        auto e = e_op(p, i);
        if (e) {
          auto fwd = f_op(*e, i);
          REQUIRE(fwd.has_value());
          CHECK(*fwd == p);
          CHECK(is_ls_path(*e));
        }
      }
    }
  }
}

TEST_CASE("f shifts the weight by exactly -alpha_i") {
  for (const RationalPath& p : enumerate_paths({2, 1, 0}, 3))
    for (int i = 1; i < 3; ++i) {
      auto f = f_op(p, i);
      if (!f) continue;
      Composition w = path_weight_integral(p), fw = path_weight_integral(*f);
      w[i - 1] -= 1;
      w[i] += 1;
      CHECK(fw == w);
    }
}

TEST_CASE("closure size matches the tableau count") {
  for (int n = 2; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d)
      for (const Composition& lam : partitions_of(d)) {
        if (static_cast<int>(lam.size()) > n) continue;
        if (n == 4 && d > 4) continue;
        long tabs = 0;
        if (strip_zeros(lam).empty()) {
          tabs = 1;
        } else {
          enumerate(TabKind::RRST, transpose(strip_zeros(lam)), n,
                    [&](const Grid&) { ++tabs; });
        }
        CHECK(static_cast<long>(enumerate_paths(lam, n).size()) == tabs);
      }
}

TEST_CASE("perturbing a cut breaks the chain integrality") {
  // take a two-segment LS path and replace its internal cut with 1/3
  for (const RationalPath& p : enumerate_paths({2, 1, 0}, 3)) {
    if (p.segments() != 2) continue;
    RationalPath q = p;
    QQ bad = make_qq(1, 3);
    if (q.cuts[1] == bad) bad = make_qq(2, 5);
    q.cuts[1] = bad;
    CHECK_FALSE(is_ls_path(q));
  }
}

TEST_CASE("direction stability along f-strings") {
  for (const Composition& lam : std::vector<Composition>{{2, 1, 0}, {2, 2, 0}})
    for (const RationalPath& p : enumerate_paths(lam, 3))
      for (int i = 1; i < 3; ++i) {
        if (e_op(p, i)) continue;  // only string heads
        RationalPath cur = p;
        bool changed = false;
        while (auto f = f_op(cur, i)) {
          bool same_dir = f->chain.front() == cur.chain.front();
          if (changed) CHECK(same_dir);  // once changed, never changes back
          if (!same_dir) changed = true;
          cur = *f;
        }
      }
}

TEST_CASE("partition of the path set by first direction") {
  Composition lam{2, 1, 0};
  auto paths = enumerate_paths(lam, 3);
  long total = 0;
  for (const Perm& tau : all_perms(3)) {
    auto [rep, sorted] = min_coset_rep(tau.apply_to_vector(lam));
    if (!(rep == tau)) continue;
    for (const RationalPath& p : paths)
      if (p.chain.front() == tau) ++total;
  }
  CHECK(total == static_cast<long>(paths.size()));
}

TEST_CASE("weights of Pi((1,0,0)) give the first elementary symmetric polynomial") {
  auto paths = enumerate_paths({1, 0, 0}, 3);
  CHECK(paths.size() == 3);
  XPoly sum = XPoly::zero(3);
  for (const RationalPath& p : paths) sum = sum + XPoly::x_power(path_weight_integral(p), 3);
  CHECK(sum == gen_schur({1}, 3));
}

TEST_CASE("atoms and characters via paths") {
  // gamma = lambda keeps only the straight path
  CHECK(atom_via_paths({2, 1, 0}, 3) == XPoly::x_power({2, 1, 0}, 3));
  // full character equals the Schur polynomial
  Perm w0({3, 2, 1});
  CHECK(char_via_paths(w0, {2, 1, 0}, 3) == gen_schur({2, 1}, 3));
  // atoms by paths equal the divided-difference atoms
  for (const Composition& lam : std::vector<Composition>{{2, 1, 0}, {2, 2, 0}})
    for (const Composition& g : weak_compositions_of(comp_size(lam), 3))
      if (sort_to_partition(g) == lam) CHECK(atom_via_paths(g, 3) == demazure_atom(g, 3));
  // characters by paths equal the divided-difference characters
  Composition lam{2, 1, 0};
  for (const Perm& tau : all_perms(3)) {
    auto [rep, sorted] = min_coset_rep(tau.apply_to_vector(lam));
    if (!(rep == tau)) continue;
    CHECK(char_via_paths(tau, lam, 3) == demazure_char(tau, lam, 3));
  }
}

TEST_CASE("h profile exposes the cut data") {
  // two-segment path: chain s1 > e on lambda = (2,1,0) after one f_1
  RationalPath p = straight_path({2, 1, 0}, 3);
  auto f = f_op(p, 1);
  REQUIRE(f.has_value());
  HProfile hp = h_profile(*f, 1);
  CHECK(hp.h.front() == QQ(0));
  CHECK(hp.P + hp.Q == hp.h.back());
  CHECK(hp.q <= hp.p);
}

#include "qschur/serialize.hpp"

TEST_CASE("path JSON round-trips with exact cuts") {
  for (const RationalPath& p : enumerate_paths({2, 1, 0}, 3)) {
    json j = path_to_json(p);
    RationalPath back = path_from_json(j);
    CHECK(back == p);
    CHECK(path_to_json(back).dump() == j.dump());
  }
}
