#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qschur/combinat.hpp"
#include "qschur/exact.hpp"

// Tableau data types, validity checking, exhaustive enumeration, and the
// generating functions s_lambda, RS_alpha, CS_alpha.

namespace qschur {

// Plain filling of composition or partition shape; rows[i] lists the entries
// of row i+1 left to right, all positive.
struct Grid {
  std::vector<std::vector<int>> rows;

  Composition shape() const;
  bool empty() const { return rows.empty(); }
  int at(int i, int j) const { return rows[i - 1][j - 1]; }  // 1-based
  bool operator==(const Grid& o) const { return rows == o.rows; }
  bool operator<(const Grid& o) const { return rows < o.rows; }
};

// Skew filling of shape outer/inner: row i carries inner[i] skewed boxes
// followed by the entries. A virtual 0th column of infinity cells is implied.
struct SkewGrid {
  Composition outer;                   // strong composition beta
  Composition inner;                   // weak composition gamma, same length
  std::vector<std::vector<int>> rows;  // rows[i].size() == outer[i]-inner[i]

  bool operator==(const SkewGrid& o) const {
    return outer == o.outer && inner == o.inner && rows == o.rows;
  }
  bool operator<(const SkewGrid& o) const {
    if (outer != o.outer) return outer < o.outer;
    if (inner != o.inner) return inner < o.inner;
    return rows < o.rows;
  }
};

enum class TabKind { RRST, RCT, CT };

struct Violation {
  bool ok = true;
  std::string rule;  // name of the first failing rule, empty when ok
  int i = 0, j = 0;  // offending cell (1-based; 0 when not applicable)
};

Violation validate(TabKind kind, const Grid& g);
Violation validate_lr_skew(const SkewGrid& s);

Word column_reading_word(const Grid& g);
Word column_reading_word(const SkewGrid& s);
Composition grid_content(const Grid& g);
Composition skew_content(const SkewGrid& s);
XPoly weight_monomial(const Grid& g, int n);

// T_lambda: the tableau of shape lambda whose i-th column is filled with
// (lambda_1 + 1 - i).
Grid t_tableau(const Composition& lambda);

// All valid fillings of the given shape with entries <= n, produced in the
// deterministic cell-by-cell column-reading-order / smallest-entry-first
// order.
void enumerate(TabKind kind, const Composition& shape, int n,
               const std::function<void(const Grid&)>& visit);
std::vector<Grid> enumerate_all(TabKind kind, const Composition& shape, int n);

XPoly gen_rs(const Composition& alpha, int n);      // row-strict quasisymmetric Schur
XPoly gen_cs(const Composition& alpha, int n);      // column-strict quasisymmetric Schur
XPoly gen_schur(const Composition& lambda, int n);  // Schur polynomial

std::string grid_to_latex(const Grid& g);
std::string skew_to_latex(const SkewGrid& s);

}  // namespace qschur
