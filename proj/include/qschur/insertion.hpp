#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qschur/tableaux.hpp"

// Schensted insertion and RSK on reverse row-strict tableaux; the row-strict
// composition tableau insertion with its inverse and insertion paths; the
// elementary Knuth transformations.

namespace qschur {

struct SchenstedResult {
  Grid tableau;
  std::pair<int, int> new_box;  // 1-based (row, col)
};

SchenstedResult schensted_insert(const Grid& t, int b);

// Two-line array: upper weakly decreasing; among equal upper entries the
// lower entries weakly increase.
struct TwoLineArray {
  std::vector<std::pair<int, int>> cols;  // (upper, lower)
};

bool is_valid_two_line(const TwoLineArray& a);
std::pair<Grid, Grid> rsk(const TwoLineArray& a);        // (P, Q)
TwoLineArray rsk_inverse(const Grid& p, const Grid& q);  // round-trips with rsk

struct InsertionResult {
  Grid tableau;
  std::pair<int, int> new_box;
  std::vector<std::pair<int, int>> path;  // insertion path, column reading order
};

InsertionResult rct_insert(const Grid& u, int b);
Grid rct_insert_word(Grid u, const Word& w);

// Un-insert the last entry of the given row, which must be the lowest row of
// its length. Returns the smaller tableau and the extracted letter.
std::pair<Grid, int> rct_uninsert(const Grid& u, int row);

// Elementary transformations on words at position p (1-based, window of 3):
//   K1: bca -> bac for a < b <= c       K2: acb -> cab for a <= b < c
enum class KnuthMove { K1, K1Inv, K2, K2Inv };
bool knuth_applicable(const Word& w, KnuthMove m, int p);
Word knuth_apply(const Word& w, KnuthMove m, int p);

// Closure of w under K1/K1Inv (k1_only) or all four moves; throws if the
// class exceeds the cap.
std::set<Word> knuth_class_bfs(const Word& w, bool k1_only, size_t cap = 2'000'000);

}  // namespace qschur
