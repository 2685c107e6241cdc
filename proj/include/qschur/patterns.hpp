#pragma once

#include <functional>
#include <vector>

#include "qschur/combinat.hpp"
#include "qschur/exact.hpp"
#include "qschur/tableaux.hpp"

// Gelfand-Tsetlin patterns, composition array patterns, and the bijections
// between them and the two tableau families.

namespace qschur {

// Triangular array with rows i = 1..n; row i holds n-i+1 entries.
struct TriArray {
  std::vector<std::vector<int>> rows;

  int n() const { return static_cast<int>(rows.size()); }
  // 1-based access with the virtual x_{i,0} = 0.
  int at(int i, int j) const { return j == 0 ? 0 : rows[i - 1][j - 1]; }
  bool operator==(const TriArray& o) const { return rows == o.rows; }
  bool operator<(const TriArray& o) const { return rows < o.rows; }
};

Violation validate_gt(const TriArray& g);
Violation validate_cap(const TriArray& x);

// psi: composition array pattern of shape gamma -> column-strict composition
// tableau of shape strip_zeros(gamma) with first column foundation(gamma).
Grid psi(const TriArray& x);
// Inverse; n is the length of gamma (at least the maximum entry of the CT).
TriArray psi_inverse(const Grid& ct, int n);

// theta: CT -> reverse column-strict Young tableau (columns sorted), and back.
Grid theta(const Grid& ct);
Grid theta_inverse(const Grid& ryt);

// The classical bijection between GT patterns and reverse column-strict
// Young tableaux.
Grid tableau_from_gt(const TriArray& g);
TriArray gt_from_tableau(const Grid& t, int n);

// Theta sorts each row into weakly decreasing order; Theta_tilde inverts it
// by the rightmost-feasible placement rule.
TriArray cap_to_gt(const TriArray& x);        // Theta
TriArray gt_to_cap(const TriArray& g);        // Theta~

// Weight of a composition array pattern: content_i = row_i sum - row_{i+1} sum.
Composition cap_content(const TriArray& x);
XPoly cap_weight(const TriArray& x);

void enumerate_caps(const Composition& gamma, const std::function<void(const TriArray&)>& visit);
void enumerate_gts(const Composition& lambda, const std::function<void(const TriArray&)>& visit);

std::string triarray_to_text(const TriArray& x);  // staggered triangular layout

}  // namespace qschur
