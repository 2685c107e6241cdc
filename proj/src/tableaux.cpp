#include "qschur/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qschur {

Composition Grid::shape() const {
  Composition s;
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

namespace {

// Rank encoding for skew cells: any infinity cell outranks every integer, and
// infinity cells compare by column (leftward is larger, same column is equal).
constexpr int kInfBase = 1 << 24;
inline int inf_rank(int col) { return kInfBase - col; }

// Cell rank in the augmented skew diagram (0th column included); -1 if the
// cell does not exist.
int skew_rank(const SkewGrid& s, int i, int j) {
  if (i < 1 || i > static_cast<int>(s.outer.size())) return -1;
  if (j == 0) return inf_rank(0);
  if (j < 0 || j > s.outer[i - 1]) return -1;
  if (j <= s.inner[i - 1]) return inf_rank(j);
  return s.rows[i - 1][j - 1 - s.inner[i - 1]];
}

bool inv_triple(int b, int a, int c) {
  // inversion triple: b <= a < c or a < c <= b
  return (b <= a && a < c) || (a < c && c <= b);
}

}  // namespace

Violation validate(TabKind kind, const Grid& g) {
  Composition shape = g.shape();
  int k = static_cast<int>(shape.size());
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= shape[i - 1]; ++j)
      if (g.at(i, j) < 1) return {false, "positive entries", i, j};

  if (kind == TabKind::RRST) {
    if (!is_partition(shape)) return {false, "partition shape", 0, 0};
    for (int i = 1; i <= k; ++i)
      for (int j = 2; j <= shape[i - 1]; ++j)
        if (!(g.at(i, j - 1) > g.at(i, j))) return {false, "rows strictly decrease", i, j};
    for (int i = 2; i <= k; ++i)
      for (int j = 1; j <= shape[i - 1]; ++j)
        if (!(g.at(i - 1, j) >= g.at(i, j))) return {false, "columns weakly decrease", i, j};
    return {};
  }

  if (!is_strong(shape)) return {false, "strong composition shape", 0, 0};
  int m = 0;
  for (int p : shape) m = std::max(m, p);
  auto hat = [&](int i, int j) { return j <= shape[i - 1] ? g.at(i, j) : 0; };

  if (kind == TabKind::RCT) {
    for (int i = 2; i <= k; ++i)
      if (!(g.at(i - 1, 1) <= g.at(i, 1))) return {false, "first column weakly increases", i, 1};
    for (int i = 1; i <= k; ++i)
      for (int j = 2; j <= shape[i - 1]; ++j)
        if (!(g.at(i, j - 1) > g.at(i, j))) return {false, "rows strictly decrease", i, j};
    for (int i1 = 1; i1 <= k; ++i1)
      for (int i2 = i1 + 1; i2 <= k; ++i2)
        for (int j = 2; j <= m; ++j) {
          int b = hat(i2, j), a = hat(i1, j), c = hat(i1, j - 1);
          if (b != 0 && b > a && !(b >= c)) return {false, "triple rule", i2, j};
        }
    return {};
  }

  // CT
  for (int i = 2; i <= k; ++i)
    if (!(g.at(i - 1, 1) < g.at(i, 1))) return {false, "first column strictly increases", i, 1};
  for (int i = 1; i <= k; ++i)
    for (int j = 2; j <= shape[i - 1]; ++j)
      if (!(g.at(i, j - 1) >= g.at(i, j))) return {false, "rows weakly decrease", i, j};
  for (int i1 = 1; i1 <= k; ++i1)
    for (int i2 = i1 + 1; i2 <= k; ++i2)
      for (int j = 2; j <= m; ++j) {
        int b = hat(i2, j), a = hat(i1, j), c = hat(i1, j - 1);
        if (b != 0 && b >= a && !(b > c)) return {false, "triple rule", i2, j};
      }
  return {};
}

Violation validate_lr_skew(const SkewGrid& s) {
  int k = static_cast<int>(s.outer.size());
  if (static_cast<int>(s.inner.size()) != k || static_cast<int>(s.rows.size()) != k)
    return {false, "ragged skew data", 0, 0};
  for (int i = 1; i <= k; ++i) {
    if (s.inner[i - 1] < 0 || s.inner[i - 1] > s.outer[i - 1])
      return {false, "inner not contained in outer", i, 0};
    if (static_cast<int>(s.rows[i - 1].size()) != s.outer[i - 1] - s.inner[i - 1])
      return {false, "row length mismatch", i, 0};
    for (int v : s.rows[i - 1])
      if (v < 1) return {false, "positive entries", i, 0};
  }

  // rows strictly decrease (the infinity prefix is decreasing by convention)
  for (int i = 1; i <= k; ++i)
    for (int j = s.inner[i - 1] + 2; j <= s.outer[i - 1]; ++j)
      if (!(skew_rank(s, i, j - 1) > skew_rank(s, i, j)))
        return {false, "rows strictly decrease", i, j};

  // every Type A and Type B triple is an inversion triple
  for (int i1 = 1; i1 <= k; ++i1)
    for (int i2 = i1 + 1; i2 <= k; ++i2) {
      if (s.outer[i1 - 1] >= s.outer[i2 - 1]) {
        for (int j = 1; j <= std::min(s.outer[i1 - 1], s.outer[i2 - 1]); ++j) {
          int c = skew_rank(s, i1, j - 1), a = skew_rank(s, i1, j), b = skew_rank(s, i2, j);
          if (!inv_triple(b, a, c)) return {false, "type A inversion triple", i2, j};
        }
      } else {
        for (int j = 0; j + 1 <= s.outer[i2 - 1]; ++j) {
          if (j > s.outer[i1 - 1] && j > 0) break;
          int b = skew_rank(s, i1, j), c = skew_rank(s, i2, j), a = skew_rank(s, i2, j + 1);
          if (b < 0) continue;
          if (!inv_triple(b, a, c)) return {false, "type B inversion triple", i2, j};
        }
      }
    }

  Word w = column_reading_word(s);
  if (!w.empty() && !is_regular_reverse_lattice(w))
    return {false, "regular reverse lattice word", 0, 0};
  return {};
}

Word column_reading_word(const Grid& g) {
  Word w;
  Composition shape = g.shape();
  int m = 0;
  for (int p : shape) m = std::max(m, p);
  for (int j = 1; j <= m; ++j)
    for (int i = static_cast<int>(shape.size()); i >= 1; --i)
      if (j <= shape[i - 1]) w.push_back(g.at(i, j));
  return w;
}

Word column_reading_word(const SkewGrid& s) {
  Word w;
  int m = 0;
  for (int p : s.outer) m = std::max(m, p);
  for (int j = 1; j <= m; ++j)
    for (int i = static_cast<int>(s.outer.size()); i >= 1; --i)
      if (j > s.inner[i - 1] && j <= s.outer[i - 1])
        w.push_back(s.rows[i - 1][j - 1 - s.inner[i - 1]]);
  return w;
}

Composition grid_content(const Grid& g) {
  Word w = column_reading_word(g);
  if (w.empty()) return {};
  return word_content(w);
}

Composition skew_content(const SkewGrid& s) {
  Word w = column_reading_word(s);
  if (w.empty()) return {};
  return word_content(w);
}

XPoly weight_monomial(const Grid& g, int n) {
  Composition cont = grid_content(g);
  if (static_cast<int>(cont.size()) > n)
    throw std::invalid_argument("weight_monomial: entries exceed variable count");
  return XPoly::x_power(cont, n);
}

Grid t_tableau(const Composition& lambda) {
  if (!is_partition(lambda)) throw std::invalid_argument("t_tableau: partition required");
  Grid g;
  int m = lambda.empty() ? 0 : lambda[0];
  for (int part : lambda) {
    if (part == 0) break;
    std::vector<int> row(part);
    for (int c = 1; c <= part; ++c) row[c - 1] = m + 1 - c;
    g.rows.push_back(std::move(row));
  }
  return g;
}

namespace {

struct Enumerator {
  TabKind kind;
  Composition shape;
  int n;
  const std::function<void(const Grid&)>* visit;
  std::vector<std::pair<int, int>> cells;  // column reading order
  Grid g;

  int hat(int i, int j) const {
    if (j < 1 || j > shape[i - 1]) return 0;
    int v = g.rows[i - 1][j - 1];
    return v;
  }

  bool feasible(int i, int j, int v) const {
    int k = static_cast<int>(shape.size());
    switch (kind) {
      case TabKind::RRST:
        if (j >= 2 && !(g.at(i, j - 1) > v)) return false;
        if (i < k && j <= shape[i] && !(v >= g.at(i + 1, j))) return false;
        return true;
      case TabKind::RCT: {
        if (j >= 2 && !(g.at(i, j - 1) > v)) return false;
        if (j == 1 && i < k && !(v <= g.at(i + 1, 1))) return false;
        if (j >= 2) {
          // as the (i1,j) cell of a triple, i2 below already filled
          for (int i2 = i + 1; i2 <= k; ++i2) {
            if (j > shape[i2 - 1]) continue;
            int b = g.at(i2, j);
            if (b > v && !(b >= g.at(i, j - 1))) return false;
          }
          // as the (i2,j) cell against rows above that stop before column j
          for (int i1 = 1; i1 < i; ++i1) {
            if (j <= shape[i1 - 1]) continue;  // their (i1,j) is filled later
            int c = hat(i1, j - 1);
            if (v > 0 && !(v >= c)) return false;
          }
        }
        return true;
      }
      case TabKind::CT: {
        if (j >= 2 && !(g.at(i, j - 1) >= v)) return false;
        if (j == 1 && i < k && !(v < g.at(i + 1, 1))) return false;
        if (j >= 2) {
          for (int i2 = i + 1; i2 <= k; ++i2) {
            if (j > shape[i2 - 1]) continue;
            int b = g.at(i2, j);
            if (b >= v && !(b > g.at(i, j - 1))) return false;
          }
          for (int i1 = 1; i1 < i; ++i1) {
            if (j <= shape[i1 - 1]) continue;
            int c = hat(i1, j - 1);
            if (!(v > c)) return false;
          }
        }
        return true;
      }
    }
    return false;
  }

  void rec(size_t idx) {
    if (idx == cells.size()) {
      if (validate(kind, g).ok) (*visit)(g);
      return;
    }
    auto [i, j] = cells[idx];
    for (int v = 1; v <= n; ++v) {
      if (!feasible(i, j, v)) continue;
      g.rows[i - 1][j - 1] = v;
      rec(idx + 1);
    }
    g.rows[i - 1][j - 1] = 0;
  }
};

}  // namespace

void enumerate(TabKind kind, const Composition& shape, int n,
               const std::function<void(const Grid&)>& visit) {
  if (n < 1) throw std::invalid_argument("enumerate: n >= 1 required");
  if (kind == TabKind::RRST && !is_partition(shape))
    throw std::invalid_argument("enumerate: RRST needs a partition shape");
  if (kind != TabKind::RRST && !is_strong(shape))
    throw std::invalid_argument("enumerate: composition tableaux need a strong shape");
  Enumerator e;
  e.kind = kind;
  e.shape = shape;
  e.n = n;
  e.visit = &visit;
  for (int p : shape) e.g.rows.push_back(std::vector<int>(p, 0));
  int m = 0;
  for (int p : shape) m = std::max(m, p);
  for (int j = 1; j <= m; ++j)
    for (int i = static_cast<int>(shape.size()); i >= 1; --i)
      if (j <= shape[i - 1]) e.cells.emplace_back(i, j);
  e.rec(0);
}

std::vector<Grid> enumerate_all(TabKind kind, const Composition& shape, int n) {
  std::vector<Grid> out;
  enumerate(kind, shape, n, [&](const Grid& g) { out.push_back(g); });
  return out;
}

XPoly gen_rs(const Composition& alpha, int n) {
  XPoly p = XPoly::zero(n);
  enumerate(TabKind::RCT, alpha, n, [&](const Grid& g) { p = p + weight_monomial(g, n); });
  return p;
}

XPoly gen_cs(const Composition& alpha, int n) {
  XPoly p = XPoly::zero(n);
  enumerate(TabKind::CT, alpha, n, [&](const Grid& g) { p = p + weight_monomial(g, n); });
  return p;
}

XPoly gen_schur(const Composition& lambda, int n) {
  Composition lam = strip_zeros(lambda);
  if (!is_partition(lam)) throw std::invalid_argument("gen_schur: partition required");
  XPoly p = XPoly::zero(n);
  enumerate(TabKind::RRST, transpose(lam), n, [&](const Grid& g) { p = p + weight_monomial(g, n); });
  return p;
}

std::string grid_to_latex(const Grid& g) {
  std::ostringstream os;
  os << "\\begin{array}{l}\n";
  for (const auto& row : g.rows) {
    os << "\\fbox{$";
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << "\\;";
      os << row[j];
    }
    os << "$}\\\\\n";
  }
  os << "\\end{array}";
  return os.str();
}

std::string skew_to_latex(const SkewGrid& s) {
  std::ostringstream os;
  os << "\\begin{array}{l}\n";
  for (size_t i = 0; i < s.outer.size(); ++i) {
    os << "\\fbox{$\\infty";
    for (int j = 1; j <= s.inner[i]; ++j) os << "\\;\\infty";
    for (int v : s.rows[i]) os << "\\;" << v;
    os << "$}\\\\\n";
  }
  os << "\\end{array}";
  return os.str();
}

}  // namespace qschur
