#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "qschur/combinat.hpp"
#include "qschur/perm.hpp"

using namespace qschur;

TEST_CASE("shape operations") {
  Composition g{1, 0, 2, 3, 0, 2};
  CHECK(strip_zeros(g) == Composition{1, 2, 3, 2});
  CHECK(sort_to_partition(g) == Composition{3, 2, 2, 1, 0, 0});
  Composition lam{3, 2, 2, 1};
  CHECK(transpose(lam) == Composition{4, 3, 1});
  CHECK(reverse_comp(lam) == Composition{1, 2, 2, 3});
  CHECK(strip_zeros(Composition{0, 0}).empty());
  CHECK(comp_size(g) == 8);
  CHECK(foundation(g) == std::vector<int>{1, 3, 4, 6});
  CHECK_THROWS_AS(transpose(Composition{1, 2}), std::invalid_argument);
}

TEST_CASE("reverse lattice words") {
  CHECK(is_regular_reverse_lattice({4, 4, 3, 3, 4, 2, 1}));
  // the section's displayed content has a typo; counting the letters of
  // 4433421 gives (1,1,2,3), the reverse of (3,2,1,1)
  CHECK(word_content({4, 4, 3, 3, 4, 2, 1}) == Composition{1, 1, 2, 3});
  CHECK(is_regular_reverse_lattice({1}));
  CHECK_FALSE(is_regular_reverse_lattice({1, 2}));
  CHECK_FALSE(is_regular_reverse_lattice({4, 4, 3}));  // no 1: not regular
  CHECK(is_reverse_lattice({4, 4, 3}));
}

TEST_CASE("lexrev order: displayed chain of compositions of 4") {
  std::vector<Composition> chain{{4},       {1, 3},    {3, 1},    {2, 2},
                                 {1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {1, 1, 1, 1}};
  for (size_t a = 0; a < chain.size(); ++a)
    for (size_t b = 0; b < chain.size(); ++b) {
      int want = a == b ? 0 : (a < b ? 1 : -1);
      CHECK(lexrev_compare(chain[a], chain[b]) == want);
    }
  CHECK(lexrev_compare({2, 1}, {2, 1}) == 0);
  CHECK_THROWS_AS(lexrev_compare({2}, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("lexrev is a total order on compositions of d <= 7") {
  for (int d = 1; d <= 7; ++d) {
    std::vector<Composition> comps = strong_compositions_of(d);
    // antisymmetry and totality
    for (size_t a = 0; a < comps.size(); ++a)
      for (size_t b = 0; b < comps.size(); ++b) {
        int ab = lexrev_compare(comps[a], comps[b]);
        int ba = lexrev_compare(comps[b], comps[a]);
        CHECK(ab == -ba);
        if (a != b) CHECK(ab != 0);
      }
    // transitivity via sort consistency: a strictly decreasing chain exists
    std::sort(comps.begin(), comps.end(),
              [](const Composition& x, const Composition& y) { return lexrev_compare(x, y) > 0; });
    for (size_t k = 1; k < comps.size(); ++k)
      CHECK(lexrev_compare(comps[k - 1], comps[k]) > 0);
  }
}

TEST_CASE("inverting and pure") {
  CHECK(is_inverting({1, 3, 1, 2, 3, 1, 2}));
  CHECK_FALSE(is_inverting({1, 2, 1, 2, 3, 1, 3}));
  CHECK(is_pure({5, 4, 3, 5, 2, 1, 1}));   // k = 2
  CHECK_FALSE(is_pure({5, 4, 3, 5, 1}));   // k = 1
  CHECK(is_pure({3, 2}));                  // last part != 1: k = 0
  CHECK(is_pure({}));
  CHECK(is_inverting({}));
}

TEST_CASE("phi on the worked pair and trivial cases") {
  Composition lam{3, 3, 2, 2, 2, 1, 1}, alpha{1, 3, 1, 2, 3, 1, 2};
  CHECK(phi_pair(lam, alpha) == Composition{1, 8, 1, 2, 10, 1, 4});
  CHECK(phi_pair({}, alpha) == alpha);
}

TEST_CASE("phi is a bijection PB_d -> C_d for d <= 7") {
  for (int d = 0; d <= 7; ++d) {
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
    CHECK(count == target);                              // cardinality matches C_d
    CHECK(static_cast<long>(images.size()) == count);    // injective
    for (const Composition& img : images) CHECK(comp_size(img) == d);  // onto C_d
  }
}

TEST_CASE("strip_zeros commutes with sorting") {
  for (const Composition& g : weak_compositions_of(5, 4))
    CHECK(strip_zeros(sort_to_partition(g)) == sort_to_partition(strip_zeros(g)));
}

TEST_CASE("perm basics") {
  // s2 s1 s3 in S4 has one-line (3,1,4,2) and length 3
  Perm p = Perm::simple(2, 4).compose(Perm::simple(1, 4)).compose(Perm::simple(3, 4));
  CHECK(p.one_line() == std::vector<int>{3, 1, 4, 2});
  CHECK(p.length() == 3);
  CHECK(Perm::identity(4).length() == 0);
  CHECK(Perm::identity(4).inversion_set().empty());
  CHECK_THROWS_AS(Perm({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("group axioms and reduced words in S6") {
  uint64_t seed = 12345;
  auto rnd = [&]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };
  std::vector<Perm> s6 = all_perms(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Perm& p = s6[rnd() % s6.size()];
    CHECK(p.compose(p.inverse()) == Perm::identity(6));
    for (bool small : {true, false}) {
      std::vector<int> word = p.reduced_word(small);
      CHECK(static_cast<int>(word.size()) == p.length());
      Perm rebuilt = Perm::identity(6);
      for (int i : word) rebuilt = rebuilt.compose(Perm::simple(i, 6));
      CHECK(rebuilt == p);
    }
  }
  // length is subadditive and moves by exactly one under simple reflections
  for (int trial = 0; trial < 60; ++trial) {
    const Perm& a = s6[rnd() % s6.size()];
    const Perm& b = s6[rnd() % s6.size()];
    CHECK(a.compose(b).length() <= a.length() + b.length());
    int i = 1 + static_cast<int>(rnd() % 5);
    int diff = Perm::simple(i, 6).compose(a).length() - a.length();
    CHECK((diff == 1 || diff == -1));
  }
}

TEST_CASE("apply_to_vector places value lambda_i at position tau(i)") {
  Perm tau({2, 3, 1});
  std::vector<int> lam{2, 1, 0};
  CHECK(tau.apply_to_vector(lam) == std::vector<int>{0, 2, 1});
}

TEST_CASE("bruhat order: identity minimum, subword case, and cover closure in S4") {
  for (const Perm& tau : all_perms(3)) CHECK(bruhat_leq(Perm::identity(3), tau));
  Perm s1 = Perm::simple(1, 3);
  Perm w0 = s1.compose(Perm::simple(2, 3)).compose(s1);
  CHECK(bruhat_leq(s1, w0));

  // brute-force order: transitive closure of length-1 covers by reflections
  std::vector<Perm> s4 = all_perms(4);
  std::map<std::vector<int>, int> idx;
  for (size_t k = 0; k < s4.size(); ++k) idx[s4[k].one_line()] = static_cast<int>(k);
  std::vector<std::vector<bool>> leq(s4.size(), std::vector<bool>(s4.size(), false));
  for (size_t k = 0; k < s4.size(); ++k) leq[k][k] = true;
  bool changed = true;
  // covers: sigma < t*sigma with l(t*sigma) = l(sigma)+1 for a transposition t
  std::vector<std::pair<int, int>> covers;
  for (size_t k = 0; k < s4.size(); ++k)
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        std::vector<int> ol = s4[k].one_line();
        std::swap(ol[i - 1], ol[j - 1]);
        Perm up(ol);
        if (up.length() == s4[k].length() + 1) covers.push_back({static_cast<int>(k), idx[ol]});
      }
  for (auto& [lo, hi] : covers) leq[lo][hi] = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < s4.size(); ++a)
      for (size_t b = 0; b < s4.size(); ++b)
        if (leq[a][b])
          for (size_t c = 0; c < s4.size(); ++c)
            if (leq[b][c] && !leq[a][c]) {
              leq[a][c] = true;
              changed = true;
            }
  }
  for (size_t a = 0; a < s4.size(); ++a)
    for (size_t b = 0; b < s4.size(); ++b) CHECK(bruhat_leq(s4[a], s4[b]) == leq[a][b]);
}

TEST_CASE("minimal coset representatives") {
  {
    auto [tau, lam] = min_coset_rep({2, 1, 0});
    CHECK(tau == Perm::identity(3));
    CHECK(lam == Composition{2, 1, 0});
  }
  {
    auto [tau, lam] = min_coset_rep({0, 2, 1});
    CHECK(lam == Composition{2, 1, 0});
    CHECK(tau.length() == 2);
    CHECK(tau.apply_to_vector(lam) == Composition{0, 2, 1});
    // exhaustive: no shorter permutation achieves tau(lambda) = gamma
    for (const Perm& p : all_perms(3))
      if (p.apply_to_vector(lam) == Composition{0, 2, 1}) CHECK(p.length() >= tau.length());
  }
  // every gamma with parts <= 2, n = 3: minimality and the coset criterion
  for (const Composition& g : weak_compositions_of(3, 3)) {
    if (*std::max_element(g.begin(), g.end()) > 2) continue;
    auto [tau, lam] = min_coset_rep(g);
    CHECK(tau.apply_to_vector(lam) == g);
    for (const Perm& p : all_perms(3))
      if (p.apply_to_vector(lam) == g) CHECK(tau.length() <= p.length());
    // tau s_i > tau whenever lambda_i = lambda_{i+1}
    for (int i = 1; i < 3; ++i)
      if (lam[i - 1] == lam[i])
        CHECK(tau.compose(Perm::simple(i, 3)).length() > tau.length());
  }
}

TEST_CASE("text round-trips") {
  CHECK(comp_to_text({1, 0, 3, 2}) == "1,0,3,2");
  CHECK(comp_from_text("1,0,3,2") == Composition{1, 0, 3, 2});
  CHECK(Perm::from_text("3,1,4,2").one_line() == std::vector<int>{3, 1, 4, 2});
}
