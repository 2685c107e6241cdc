#include "qschur/demazure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qschur/insertion.hpp"

namespace qschur {

XPoly partial_op(const XPoly& f, int i) { return f.divided_difference(i); }

XPoly pi_op(const XPoly& f, int i) { return f.multiply_by_var(i).divided_difference(i); }

XPoly pibar_op(const XPoly& f, int i) { return pi_op(f, i) - f; }

XPoly pi_word(XPoly f, const std::vector<int>& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = pi_op(f, *it);
  return f;
}

XPoly pibar_word(XPoly f, const std::vector<int>& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = pibar_op(f, *it);
  return f;
}

XPoly demazure_char(const Perm& tau, const Composition& lambda, int n) {
  if (tau.degree() != n) throw std::invalid_argument("demazure_char: tau must lie in S_n");
  Composition lam = lambda;
  lam.resize(n, 0);
  if (!is_partition(lam)) throw std::invalid_argument("demazure_char: lambda not a partition");
  XPoly x = XPoly::x_power(lam, n);
  XPoly a = pi_word(x, tau.reduced_word(true));
  XPoly b = pi_word(x, tau.reduced_word(false));
  if (!(a == b)) throw std::logic_error("demazure_char: reduced words disagree");
  return a;
}

XPoly demazure_atom(const Composition& gamma, int n) {
  if (static_cast<int>(gamma.size()) != n)
    throw std::invalid_argument("demazure_atom: gamma must have length n");
  auto [tau, lambda] = min_coset_rep(gamma);
  XPoly x = XPoly::x_power(lambda, n);
  XPoly a = pibar_word(x, tau.reduced_word(true));
  XPoly b = pibar_word(x, tau.reduced_word(false));
  if (!(a == b)) throw std::logic_error("demazure_atom: reduced words disagree");
  return a;
}

bool is_ssyt(const Grid& t) {
  Composition shape = t.shape();
  if (!is_partition(shape)) return false;
  int k = static_cast<int>(shape.size());
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= shape[i - 1]; ++j) {
      if (t.at(i, j) < 1) return false;
      if (j >= 2 && !(t.at(i, j - 1) <= t.at(i, j))) return false;
      if (i >= 2 && j <= shape[i - 2] && !(t.at(i - 1, j) < t.at(i, j))) return false;
    }
  return true;
}

bool is_key(const Grid& t) {
  if (!is_ssyt(t)) return false;
  Composition shape = t.shape();
  int m = shape.empty() ? 0 : shape[0];
  for (int j = 2; j <= m; ++j) {
    std::set<int> prev, cur;
    for (int i = 1; i <= static_cast<int>(shape.size()); ++i) {
      if (j - 1 <= shape[i - 1]) prev.insert(t.at(i, j - 1));
      if (j <= shape[i - 1]) cur.insert(t.at(i, j));
    }
    if (!std::includes(prev.begin(), prev.end(), cur.begin(), cur.end())) return false;
  }
  return true;
}

void enumerate_ssyt(const Composition& lambda, int n,
                    const std::function<void(const Grid&)>& visit) {
  Composition lam = strip_zeros(lambda);
  if (!is_partition(lam)) throw std::invalid_argument("enumerate_ssyt: partition required");
  Grid g;
  for (int p : lam) g.rows.push_back(std::vector<int>(p, 0));
  int k = static_cast<int>(lam.size());
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i > k) {
      visit(g);
      return;
    }
    int ni = i, nj = j + 1;
    if (nj > lam[i - 1]) {
      ni = i + 1;
      nj = 1;
    }
    int lo = 1;
    if (j >= 2) lo = std::max(lo, g.at(i, j - 1));
    if (i >= 2) lo = std::max(lo, g.at(i - 1, j) + 1);
    for (int v = lo; v <= n; ++v) {
      g.rows[i - 1][j - 1] = v;
      rec(ni, nj);
    }
    g.rows[i - 1][j - 1] = 0;
  };
  if (k == 0)
    visit(g);
  else
    rec(1, 1);
}

Grid key_of_composition(const Composition& gamma) {
  Composition shape = sort_to_partition(strip_zeros(gamma));
  int m = shape.empty() ? 0 : shape[0];
  std::vector<std::vector<int>> cols(m);
  for (int j = 1; j <= m; ++j)
    for (size_t i = 0; i < gamma.size(); ++i)
      if (gamma[i] >= j) cols[j - 1].push_back(static_cast<int>(i) + 1);
  Grid g;
  for (size_t r = 0; r < shape.size(); ++r) {
    std::vector<int> row;
    for (int j = 0; j < m; ++j)
      if (r < cols[j].size()) row.push_back(cols[j][r]);
    g.rows.push_back(std::move(row));
  }
  return g;
}

Grid key_from_perm(const Perm& sigma, const Composition& mu) {
  if (!is_partition(mu)) throw std::invalid_argument("key_from_perm: mu must be a partition");
  int m = static_cast<int>(strip_zeros(mu).size());
  std::vector<std::vector<int>> cols(m);
  for (int j = 1; j <= m; ++j) {
    for (int p = 1; p <= mu[j - 1]; ++p) cols[j - 1].push_back(sigma(p));
    std::sort(cols[j - 1].begin(), cols[j - 1].end());
  }
  Grid g;
  size_t rows = cols.empty() ? 0 : cols[0].size();
  for (size_t r = 0; r < rows; ++r) {
    std::vector<int> row;
    for (int j = 0; j < m; ++j)
      if (r < cols[j].size()) row.push_back(cols[j][r]);
    g.rows.push_back(std::move(row));
  }
  return g;
}

std::vector<Word> column_word_factorization(const Word& w) {
  std::vector<Word> runs;
  for (int x : w) {
    if (runs.empty() || !(runs.back().back() > x)) runs.push_back({});
    runs.back().push_back(x);
  }
  return runs;
}

Composition colform(const Word& w) {
  Composition c;
  for (const Word& run : column_word_factorization(w)) c.push_back(static_cast<int>(run.size()));
  return c;
}

std::optional<Grid> tableau_of_column_word(const Word& w) {
  auto runs = column_word_factorization(w);
  // runs are columns read bottom to top; column j+1 must be weakly shorter
  for (size_t j = 1; j < runs.size(); ++j)
    if (runs[j].size() > runs[j - 1].size()) return std::nullopt;
  Grid g;
  size_t height = runs.empty() ? 0 : runs[0].size();
  for (size_t r = 0; r < height; ++r) {
    std::vector<int> row;
    for (const auto& run : runs) {
      if (r >= run.size()) break;
      row.push_back(run[run.size() - 1 - r]);
    }
    g.rows.push_back(std::move(row));
  }
  if (!is_ssyt(g)) return std::nullopt;
  return g;
}

Grid right_key(const Grid& t) {
  if (!is_ssyt(t)) throw std::invalid_argument("right_key: not a Young tableau");
  Composition shape = t.shape();
  if (shape.empty()) return Grid{};
  Composition lt = transpose(shape);
  Word w = column_reading_word(t);
  std::set<Word> cls = knuth_class_bfs(w, false);
  Composition lt_sorted = sort_to_partition(lt);

  int m = shape[0];
  std::vector<std::vector<int>> cols(m);
  for (int j = 1; j <= m; ++j) {
    bool found = false;
    for (const Word& v : cls) {
      Composition cf = colform(v);
      if (cf.empty() || cf.back() != lt[j - 1]) continue;
      if (sort_to_partition(cf) != lt_sorted) continue;
      auto runs = column_word_factorization(v);
      std::vector<int> col(runs.back().rbegin(), runs.back().rend());
      if (!found) {
        cols[j - 1] = col;
        found = true;
      } else if (cols[j - 1] != col) {
        throw std::logic_error("right_key: column-frank words disagree");
      }
    }
    if (!found) throw std::logic_error("right_key: no column-frank word found");
  }
  Grid g;
  for (size_t r = 0; r < cols[0].size(); ++r) {
    std::vector<int> row;
    for (int j = 0; j < m; ++j)
      if (r < cols[j].size()) row.push_back(cols[j][r]);
    g.rows.push_back(std::move(row));
  }
  if (!is_key(g)) throw std::logic_error("right_key: result is not a key");
  return g;
}

XPoly atom_via_keys(const Composition& gamma, int n) {
  if (static_cast<int>(gamma.size()) != n)
    throw std::invalid_argument("atom_via_keys: gamma must have length n");
  auto [sigma, lambda] = min_coset_rep(gamma);
  Composition lam = strip_zeros(lambda);
  Composition lt = lam.empty() ? Composition{} : transpose(lam);
  Grid target = key_from_perm(sigma, lt);
  XPoly acc = XPoly::zero(n);
  enumerate_ssyt(lam, n, [&](const Grid& t) {
    if (right_key(t) == target) acc = acc + weight_monomial(t, n);
  });
  if (lam.empty()) acc = XPoly::one(n);
  return acc;
}

XPoly atom_via_ct(const Composition& gamma, int n) {
  if (static_cast<int>(gamma.size()) != n)
    throw std::invalid_argument("atom_via_ct: gamma must have length n");
  Composition alpha = strip_zeros(gamma);
  std::vector<int> fnd = foundation(gamma);
  XPoly acc = XPoly::zero(n);
  enumerate(TabKind::CT, alpha, n, [&](const Grid& g) {
    for (size_t i = 0; i < alpha.size(); ++i)
      if (g.rows[i][0] != fnd[i]) return;
    acc = acc + weight_monomial(g, n);
  });
  if (alpha.empty()) acc = XPoly::one(n);
  return acc;
}

}  // namespace qschur
