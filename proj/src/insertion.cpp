#include "qschur/insertion.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace qschur {

SchenstedResult schensted_insert(const Grid& t, int b) {
  if (b < 1) throw std::invalid_argument("schensted_insert: positive letter required");
  Grid g = t;
  int cur = b;
  for (size_t r = 0;; ++r) {
    if (r == g.rows.size()) {
      g.rows.push_back({cur});
      return {g, {static_cast<int>(r) + 1, 1}};
    }
    auto& row = g.rows[r];
    // rows strictly decrease, so the entries <= cur form a suffix and the
    // largest of them is the leftmost of that suffix
    int pos = -1;
    for (int j = 0; j < static_cast<int>(row.size()); ++j) {
      if (row[j] <= cur) {
        pos = j;
        break;
      }
    }
    if (pos < 0) {
      row.push_back(cur);
      return {g, {static_cast<int>(r) + 1, static_cast<int>(row.size())}};
    }
    std::swap(row[pos], cur);
  }
}

bool is_valid_two_line(const TwoLineArray& a) {
  for (size_t r = 1; r < a.cols.size(); ++r) {
    if (a.cols[r - 1].first < a.cols[r].first) return false;
    if (a.cols[r - 1].first == a.cols[r].first && a.cols[r - 1].second > a.cols[r].second)
      return false;
  }
  for (const auto& [u, l] : a.cols)
    if (u < 1 || l < 1) return false;
  return true;
}

std::pair<Grid, Grid> rsk(const TwoLineArray& a) {
  if (!is_valid_two_line(a)) throw std::invalid_argument("rsk: invalid two-line array");
  Grid p, q;
  for (const auto& [upper, lower] : a.cols) {
    SchenstedResult res = schensted_insert(p, lower);
    p = res.tableau;
    auto [i, j] = res.new_box;
    if (i > static_cast<int>(q.rows.size())) q.rows.push_back({});
    q.rows[i - 1].push_back(upper);
  }
  return {p, q};
}

namespace {

// Reverse one Schensted insertion, starting from the corner box (row, col).
std::pair<Grid, int> schensted_uninsert(const Grid& t, int row, int col) {
  Grid g = t;
  if (col != static_cast<int>(g.rows[row - 1].size()))
    throw std::invalid_argument("schensted_uninsert: not a corner box");
  int cur = g.rows[row - 1].back();
  g.rows[row - 1].pop_back();
  if (g.rows[row - 1].empty()) g.rows.erase(g.rows.begin() + (row - 1));
  for (int r = row - 1; r >= 1; --r) {
    auto& above = g.rows[r - 1];
    // the bumper is the smallest entry >= cur; rows strictly decrease
    int pos = -1;
    for (int j = static_cast<int>(above.size()) - 1; j >= 0; --j) {
      if (above[j] >= cur) {
        pos = j;
        break;
      }
    }
    if (pos < 0) throw std::logic_error("schensted_uninsert: no bumper found");
    std::swap(above[pos], cur);
  }
  return {g, cur};
}

}  // namespace

TwoLineArray rsk_inverse(const Grid& p, const Grid& q) {
  if (p.shape() != q.shape()) throw std::invalid_argument("rsk_inverse: shapes differ");
  // Process recording labels from smallest value upward; equal labels in
  // column reading order.
  std::vector<std::pair<int, std::pair<int, int>>> boxes;  // (label, (i,j))
  Composition shape = q.shape();
  int m = 0;
  for (int x : shape) m = std::max(m, x);
  for (int j = 1; j <= m; ++j)
    for (int i = static_cast<int>(shape.size()); i >= 1; --i)
      if (j <= shape[i - 1]) boxes.push_back({q.at(i, j), {i, j}});
  std::stable_sort(boxes.begin(), boxes.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  Grid cur = p;
  std::vector<std::pair<int, int>> rev;
  std::vector<std::vector<bool>> removed(shape.size());
  for (size_t i = 0; i < shape.size(); ++i) removed[i].assign(shape[i], false);
  for (const auto& [label, box] : boxes) {
    // Translate the original box to current coordinates: rows above it that
    // have emptied out shift it upward.
    auto [oi, oj] = box;
    int ri = oi;
    for (int r = 1; r < oi; ++r) {
      bool gone = true;
      for (int c = 1; c <= shape[r - 1]; ++c)
        if (!removed[r - 1][c - 1]) gone = false;
      if (gone) --ri;
    }
    int rj = 0;
    for (int c = 1; c <= oj; ++c)
      if (!removed[oi - 1][c - 1]) ++rj;
    auto [next, letter] = schensted_uninsert(cur, ri, rj);
    cur = next;
    removed[oi - 1][oj - 1] = true;
    rev.push_back({label, letter});
  }
  if (!cur.rows.empty()) throw std::logic_error("rsk_inverse: tableau not exhausted");
  TwoLineArray a;
  a.cols.assign(rev.rbegin(), rev.rend());
  if (!is_valid_two_line(a)) throw std::logic_error("rsk_inverse: produced invalid array");
  return a;
}

InsertionResult rct_insert(const Grid& u, int b) {
  if (b < 1) throw std::invalid_argument("rct_insert: positive letter required");
  Grid g = u;
  Composition shape = g.shape();
  int k = static_cast<int>(shape.size());
  int m = 0;
  for (int p : shape) m = std::max(m, p);

  std::vector<std::pair<int, int>> path;
  int hand = b;
  std::pair<int, int> new_box{-1, -1};

  for (int j = m + 1; j >= 2 && new_box.first < 0; --j) {
    for (int i = 1; i <= k; ++i) {
      int len = static_cast<int>(g.rows[i - 1].size());
      if (len == j - 1) {
        // empty position at the end of a row of length j-1
        if (hand < g.rows[i - 1].back()) {
          g.rows[i - 1].push_back(hand);
          new_box = {i, j};
          path.push_back(new_box);
          break;
        }
      } else if (len >= j) {
        int& cell = g.rows[i - 1][j - 1];
        if (cell <= hand && hand < g.rows[i - 1][j - 2]) {
          std::swap(cell, hand);
          path.push_back({i, j});
        }
      }
    }
  }

  if (new_box.first < 0) {
    // the entry lands in the first column as a new row, after the lowest
    // first-column entry weakly less than it
    int pos = 0;
    for (int i = 1; i <= k; ++i)
      if (g.rows[i - 1][0] <= hand) pos = i;
    g.rows.insert(g.rows.begin() + pos, {hand});
    new_box = {pos + 1, 1};
    for (auto& [pi, pj] : path)
      if (pi > pos) ++pi;
    path.push_back(new_box);
  }

  std::sort(path.begin(), path.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first > b.first;
  });

  Violation v = validate(TabKind::RCT, g);
  if (!v.ok) throw std::logic_error("rct_insert: result fails validation: " + v.rule);
  // each row holds at most one path box
  std::vector<int> per_row(g.rows.size(), 0);
  for (const auto& [pi, pj] : path)
    if (++per_row[pi - 1] > 1) throw std::logic_error("rct_insert: two path boxes in one row");
  return {g, new_box, path};
}

Grid rct_insert_word(Grid u, const Word& w) {
  for (int b : w) u = rct_insert(u, b).tableau;
  return u;
}

std::pair<Grid, int> rct_uninsert(const Grid& u, int row) {
  Composition shape = u.shape();
  int k = static_cast<int>(shape.size());
  if (row < 1 || row > k) throw std::invalid_argument("rct_uninsert: row out of range");
  int len = shape[row - 1];
  for (int r = row + 1; r <= k; ++r)
    if (shape[r - 1] == len)
      throw std::invalid_argument("rct_uninsert: row is not the lowest of its length");

  Grid g = u;
  int hand = g.rows[row - 1].back();
  g.rows[row - 1].pop_back();
  int start_col = len;
  int start_row = row;
  if (g.rows[row - 1].empty()) {
    g.rows.erase(g.rows.begin() + (row - 1));
    // nothing above the removed box is scanned in its column: the reverse
    // scan resumes in column 2
    start_col = 1;
    start_row = 0;
  }
  int m = 0;
  for (const auto& r : g.rows) m = std::max(m, static_cast<int>(r.size()));

  for (int j = start_col; j <= m + 1; ++j) {
    int top = (j == start_col) ? start_row - 1 : static_cast<int>(g.rows.size());
    for (int i = top; i >= 1; --i) {
      if (j > static_cast<int>(g.rows[i - 1].size())) continue;
      int& cell = g.rows[i - 1][j - 1];
      int right = (j < static_cast<int>(g.rows[i - 1].size())) ? g.rows[i - 1][j] : 0;
      if (cell >= hand && hand > right) std::swap(cell, hand);
    }
  }

  Violation v = validate(TabKind::RCT, g);
  if (!v.ok) throw std::logic_error("rct_uninsert: result fails validation: " + v.rule);
  return {g, hand};
}

bool knuth_applicable(const Word& w, KnuthMove m, int p) {
  if (p < 1 || p + 2 > static_cast<int>(w.size())) return false;
  int x = w[p - 1], y = w[p], z = w[p + 1];
  switch (m) {
    case KnuthMove::K1:  // bca -> bac: a < b <= c
      return z < x && x <= y;
    case KnuthMove::K1Inv:  // bac -> bca: a < b <= c
      return y < x && x <= z;
    case KnuthMove::K2:  // acb -> cab: a <= b < c
      return x <= z && z < y;
    case KnuthMove::K2Inv:  // cab -> acb: a <= b < c
      return y <= z && z < x;
  }
  return false;
}

Word knuth_apply(const Word& w, KnuthMove m, int p) {
  if (!knuth_applicable(w, m, p)) throw std::invalid_argument("knuth_apply: move not applicable");
  Word r = w;
  switch (m) {
    case KnuthMove::K1:
    case KnuthMove::K1Inv:
      std::swap(r[p], r[p + 1]);
      break;
    case KnuthMove::K2:
    case KnuthMove::K2Inv:
      std::swap(r[p - 1], r[p]);
      break;
  }
  return r;
}

std::set<Word> knuth_class_bfs(const Word& w, bool k1_only, size_t cap) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  std::vector<KnuthMove> moves = k1_only
      ? std::vector<KnuthMove>{KnuthMove::K1, KnuthMove::K1Inv}
      : std::vector<KnuthMove>{KnuthMove::K1, KnuthMove::K1Inv, KnuthMove::K2, KnuthMove::K2Inv};
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    for (KnuthMove m : moves)
      for (int p = 1; p + 2 <= static_cast<int>(cur.size()); ++p) {
        if (!knuth_applicable(cur, m, p)) continue;
        Word next = knuth_apply(cur, m, p);
        if (seen.insert(next).second) {
          if (seen.size() > cap) throw std::runtime_error("knuth_class_bfs: class too large");
          queue.push_back(next);
        }
      }
  }
  return seen;
}

}  // namespace qschur
