#include "qschur/patterns.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qschur {

namespace {
Violation check_triangular(const TriArray& x) {
  int n = x.n();
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(x.rows[i - 1].size()) != n - i + 1)
      return {false, "triangular structure", i, 0};
    for (int j = 1; j <= n - i + 1; ++j)
      if (x.at(i, j) < 0) return {false, "nonnegative entries", i, j};
  }
  return {};
}
}  // namespace

Violation validate_gt(const TriArray& g) {
  Violation v = check_triangular(g);
  if (!v.ok) return v;
  int n = g.n();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n - i; ++j) {
      if (!(g.at(i, j) >= g.at(i + 1, j))) return {false, "x(i,j) >= x(i+1,j)", i, j};
      if (!(g.at(i + 1, j) >= g.at(i, j + 1))) return {false, "x(i+1,j) >= x(i,j+1)", i, j};
    }
  return {};
}

Violation validate_cap(const TriArray& x) {
  Violation v = check_triangular(x);
  if (!v.ok) return v;
  int n = x.n();
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j <= n - i + 1; ++j)
      if (!(x.at(i, j) <= x.at(i - 1, j + 1))) return {false, "x(i,j) <= x(i-1,j+1)", i, j};
  for (int i = 1; i < n; ++i)
    for (int r = 0; r < n - i; ++r)
      for (int s = r + 1; s <= n - i; ++s) {
        if (x.at(i + 1, r) >= x.at(i + 1, s)) {
          if (!(x.at(i + 1, r) >= x.at(i, s + 1)))
            return {false, "weakly longer row dominates", i, s};
        } else if (x.at(i + 1, s) < x.at(i, s + 1)) {
          if (!(x.at(i, r + 1) < x.at(i + 1, s)))
            return {false, "strictly shorter row bounds", i, s};
        }
      }
  return {};
}

Grid psi(const TriArray& x) {
  Violation v = validate_cap(x);
  if (!v.ok) throw std::invalid_argument("psi: invalid composition array pattern: " + v.rule);
  int n = x.n();
  std::vector<std::vector<int>> cur;  // weak-composition-shaped filling, built upward
  for (int i = n; i >= 1; --i) {
    std::vector<std::vector<int>> next;
    next.push_back(std::vector<int>(x.at(i, 1), i));
    for (int k = 1; k <= n - i; ++k) {
      std::vector<int> row = cur[k - 1];
      int want = x.at(i, k + 1);
      if (want < static_cast<int>(row.size())) throw std::logic_error("psi: shrinking row");
      while (static_cast<int>(row.size()) < want) row.push_back(i);
      next.push_back(std::move(row));
    }
    cur = std::move(next);
  }
  Grid g;
  for (auto& row : cur)
    if (!row.empty()) g.rows.push_back(std::move(row));
  return g;
}

TriArray psi_inverse(const Grid& ct, int n) {
  Violation v = validate(TabKind::CT, ct);
  if (!v.ok) throw std::invalid_argument("psi_inverse: not a CT: " + v.rule);
  // expand to the weak shape gamma: row of first-column entry f sits in row f
  std::vector<std::vector<int>> ssaf(n);
  for (const auto& row : ct.rows) {
    int f = row[0];
    if (f > n) throw std::invalid_argument("psi_inverse: entry exceeds n");
    ssaf[f - 1] = row;
  }
  for (const auto& row : ct.rows)
    for (int e : row)
      if (e > n) throw std::invalid_argument("psi_inverse: entry exceeds n");

  TriArray x;
  x.rows.assign(n, {});
  for (int i = n; i >= 1; --i) {
    x.rows[i - 1].assign(n - i + 1, 0);
    for (int j = 1; j <= n - i + 1; ++j) {
      int below = (j >= 2) ? x.at(i + 1, j - 1) : 0;
      int cnt = 0;
      for (int e : ssaf[i + j - 2]) cnt += (e == i);
      x.rows[i - 1][j - 1] = below + cnt;
    }
  }
  Violation vc = validate_cap(x);
  if (!vc.ok) throw std::logic_error("psi_inverse: produced invalid pattern: " + vc.rule);
  return x;
}

Grid theta(const Grid& ct) {
  Violation v = validate(TabKind::CT, ct);
  if (!v.ok) throw std::invalid_argument("theta: not a CT: " + v.rule);
  Composition shape = ct.shape();
  int m = 0;
  for (int p : shape) m = std::max(m, p);
  std::vector<std::vector<int>> cols(m);
  for (size_t i = 0; i < ct.rows.size(); ++i)
    for (size_t j = 0; j < ct.rows[i].size(); ++j) cols[j].push_back(ct.rows[i][j]);
  for (auto& col : cols) std::sort(col.begin(), col.end(), std::greater<int>());
  Grid g;
  size_t height = cols.empty() ? 0 : cols[0].size();
  for (size_t r = 0; r < height; ++r) {
    std::vector<int> row;
    for (int j = 0; j < m; ++j)
      if (r < cols[j].size()) row.push_back(cols[j][r]);
    g.rows.push_back(std::move(row));
  }
  return g;
}

Grid theta_inverse(const Grid& ryt) {
  Composition shape = ryt.shape();
  int m = shape.empty() ? 0 : shape[0];
  std::vector<std::vector<int>> cols(m);
  for (size_t i = 0; i < ryt.rows.size(); ++i)
    for (size_t j = 0; j < ryt.rows[i].size(); ++j) cols[j].push_back(ryt.rows[i][j]);

  Grid g;
  if (m == 0) return g;
  std::vector<int> first = cols[0];
  std::sort(first.begin(), first.end());
  for (int e : first) g.rows.push_back({e});
  for (int j = 2; j <= m; ++j) {
    std::vector<int> entries = cols[j - 1];
    std::sort(entries.begin(), entries.end(), std::greater<int>());
    for (int e : entries) {
      // the map preserves column contents, so the entry lands in column j:
      // the highest row of length j-1 whose rightmost entry is weakly greater
      int best = -1;
      for (size_t r = 0; r < g.rows.size(); ++r) {
        if (static_cast<int>(g.rows[r].size()) != j - 1) continue;
        if (g.rows[r].back() < e) continue;
        best = static_cast<int>(r);
        break;
      }
      if (best < 0) throw std::invalid_argument("theta_inverse: no feasible row");
      g.rows[best].push_back(e);
    }
  }
  Violation v = validate(TabKind::CT, g);
  if (!v.ok) throw std::logic_error("theta_inverse: produced invalid CT: " + v.rule);
  return g;
}

Grid tableau_from_gt(const TriArray& g) {
  Violation v = validate_gt(g);
  if (!v.ok) throw std::invalid_argument("tableau_from_gt: invalid pattern: " + v.rule);
  int n = g.n();
  Grid t;
  for (int i = n; i >= 1; --i) {
    for (int r = 1; r <= n - i + 1; ++r) {
      int hi = g.at(i, r);
      int lo = (i < n && r <= n - i) ? g.at(i + 1, r) : 0;
      if (hi == 0) continue;
      if (r > static_cast<int>(t.rows.size())) t.rows.push_back({});
      for (int c = lo + 1; c <= hi; ++c) t.rows[r - 1].push_back(i);
    }
  }
  return t;
}

TriArray gt_from_tableau(const Grid& t, int n) {
  TriArray g;
  g.rows.assign(n, {});
  for (int i = 1; i <= n; ++i) {
    Composition shape;
    for (const auto& row : t.rows) {
      int cnt = 0;
      for (int e : row) {
        if (e > n) throw std::invalid_argument("gt_from_tableau: entry exceeds n");
        if (e >= i) ++cnt;
      }
      shape.push_back(cnt);
    }
    // entries >= i occupy a top-left-justified prefix in each row
    shape.resize(n - i + 1, 0);
    g.rows[i - 1] = shape;
  }
  Violation v = validate_gt(g);
  if (!v.ok) throw std::logic_error("gt_from_tableau: produced invalid pattern: " + v.rule);
  return g;
}

TriArray cap_to_gt(const TriArray& x) {
  Violation v = validate_cap(x);
  if (!v.ok) throw std::invalid_argument("cap_to_gt: invalid pattern: " + v.rule);
  TriArray g = x;
  for (auto& row : g.rows) std::sort(row.begin(), row.end(), std::greater<int>());
  Violation vg = validate_gt(g);
  if (!vg.ok) throw std::logic_error("cap_to_gt: sorted rows are not a GT pattern: " + vg.rule);
  return g;
}

TriArray gt_to_cap(const TriArray& g) {
  Violation v = validate_gt(g);
  if (!v.ok) throw std::invalid_argument("gt_to_cap: invalid pattern: " + v.rule);
  int n = g.n();
  TriArray x;
  x.rows.assign(n, {});
  x.rows[n - 1] = g.rows[n - 1];
  for (int i = n - 1; i >= 1; --i) {
    int len = n - i + 1;
    std::vector<int> slot(len, -1);
    std::vector<int> entries = g.rows[i - 1];
    std::sort(entries.begin(), entries.end());  // least to greatest
    for (int b : entries) {
      int placed = -1;
      for (int k = len; k >= 2; --k) {
        if (slot[k - 1] >= 0) continue;
        if (x.at(i + 1, k - 1) <= b) {
          placed = k;
          break;
        }
      }
      if (placed < 0) {
        if (slot[0] >= 0)
          throw std::logic_error("gt_to_cap: placement failed (leftmost slot occupied)");
        placed = 1;
      }
      slot[placed - 1] = b;
    }
    x.rows[i - 1].assign(slot.begin(), slot.end());
  }
  Violation vc = validate_cap(x);
  if (!vc.ok) throw std::logic_error("gt_to_cap: produced invalid pattern: " + vc.rule);
  return x;
}

Composition cap_content(const TriArray& x) {
  int n = x.n();
  Composition c(n, 0);
  for (int i = 1; i <= n; ++i) {
    int hi = std::accumulate(x.rows[i - 1].begin(), x.rows[i - 1].end(), 0);
    int lo = (i < n) ? std::accumulate(x.rows[i].begin(), x.rows[i].end(), 0) : 0;
    c[i - 1] = hi - lo;
  }
  return c;
}

XPoly cap_weight(const TriArray& x) {
  Composition c = cap_content(x);
  for (int v : c)
    if (v < 0) throw std::logic_error("cap_weight: negative content");
  return XPoly::x_power(c, x.n());
}

void enumerate_caps(const Composition& gamma, const std::function<void(const TriArray&)>& visit) {
  int n = static_cast<int>(gamma.size());
  if (n == 0) {
    visit(TriArray{});
    return;
  }
  TriArray x;
  x.rows.assign(n, {});
  x.rows[0] = gamma;
  // condition coupling rows i and i+1, as in validate_cap
  auto pair_ok = [&](int i) {
    for (int r = 0; r < n - i; ++r)
      for (int s = r + 1; s <= n - i; ++s) {
        if (x.at(i + 1, r) >= x.at(i + 1, s)) {
          if (!(x.at(i + 1, r) >= x.at(i, s + 1))) return false;
        } else if (x.at(i + 1, s) < x.at(i, s + 1)) {
          if (!(x.at(i, r + 1) < x.at(i + 1, s))) return false;
        }
      }
    return true;
  };
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i > n) {
      if (validate_cap(x).ok) visit(x);
      return;
    }
    if (j > n - i + 1) {
      if (!pair_ok(i - 1)) return;
      rec(i + 1, 1);
      return;
    }
    for (int v = 0; v <= x.at(i - 1, j + 1); ++v) {
      x.rows[i - 1].resize(j);
      x.rows[i - 1][j - 1] = v;
      rec(i, j + 1);
    }
    x.rows[i - 1].resize(j > 1 ? j - 1 : 0);
  };
  rec(2, 1);
}

void enumerate_gts(const Composition& lambda, const std::function<void(const TriArray&)>& visit) {
  int n = static_cast<int>(lambda.size());
  if (!is_partition(lambda)) throw std::invalid_argument("enumerate_gts: partition required");
  if (n == 0) {
    visit(TriArray{});
    return;
  }
  TriArray g;
  g.rows.assign(n, {});
  g.rows[0] = lambda;
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i > n) {
      visit(g);
      return;
    }
    if (j > n - i + 1) {
      rec(i + 1, 1);
      return;
    }
    int lo = g.at(i - 1, j + 1), hi = g.at(i - 1, j);
    for (int v = lo; v <= hi; ++v) {
      g.rows[i - 1].resize(j);
      g.rows[i - 1][j - 1] = v;
      rec(i, j + 1);
    }
    g.rows[i - 1].resize(j > 1 ? j - 1 : 0);
  };
  rec(2, 1);
}

std::string triarray_to_text(const TriArray& x) {
  std::ostringstream os;
  int n = x.n();
  int width = 1;
  for (const auto& row : x.rows)
    for (int v : row) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  for (int i = 1; i <= n; ++i) {
    os << std::string((i - 1) * (width + 1) / 2, ' ');
    for (int j = 1; j <= n - i + 1; ++j) {
      std::string s = std::to_string(x.at(i, j));
      os << s << std::string(width + 1 - s.size(), ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace qschur
