#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qschur/exact.hpp"
#include "qschur/perm.hpp"

// Skyline fillings with permuted basements, the arm/leg/maj/inv/coinv/cotrip
// statistics, the combinatorial formula for E_{gamma,tau}, and the Hecke
// operator engine T_i, pi, Y_i, Y_i^tau with eigenfunction verification.

namespace qschur {

using Box = std::pair<int, int>;  // (column i, row j), Cartesian, row 0 = basement

struct BoxStats {
  std::vector<Box> leg, arm_left, arm_right;
  int l = 0, a = 0;
};

BoxStats box_stats(const Composition& gamma, const Box& u);

struct AugFilling {
  Composition gamma;                     // column heights, length n
  Perm basement;                         // row 0 in one-line notation
  std::vector<std::vector<int>> entries; // entries[i-1][j-1] = sigma(i,j)

  int n() const { return static_cast<int>(gamma.size()); }
  // sigma-hat on the augmented diagram (row 0 gives the basement).
  int value(int i, int j) const { return j == 0 ? basement(i) : entries[i - 1][j - 1]; }
};

bool is_non_attacking(const AugFilling& f);
void enumerate_fillings(const Composition& gamma, const Perm& basement,
                        const std::function<void(const AugFilling&)>& visit);

// Two readings of the inversion statistic's reading order: the literal
// row-by-row left-to-right order, and the variant that reads each row right
// to left (rows still top to bottom), which repairs the row-0 bookkeeping.
enum class InvReading { RowLeftToRight, RowRightToLeft };
// Two triple classifiers: the cyclic rotation rule (normative), and the
// chi-sum with reading-order-oriented pairs.
enum class TripleRule { Cyclic, FormalChi };

struct TripleInfo {
  Box u, v, w;
  bool type_one = false;
  bool coinversion = false;
};

struct MacdStats {
  std::vector<Box> descents;
  long maj = 0;
  long inv_pairs = 0;   // |Inv| under the selected reading
  long inv_stat = 0;    // inv = |Inv| - #{i<j: g_i <= g_j} - sum over descents of a(u)
  long coinv_stat = 0;  // sum of a(u) - inv
  std::vector<TripleInfo> triples;
  long invtrip = 0, cotrip = 0;
};

MacdStats statistics(const AugFilling& f, InvReading reading = InvReading::RowLeftToRight,
                     TripleRule rule = TripleRule::Cyclic);

// E_{gamma,tau}(x; q, t): sum over non-attacking fillings of
// x^sigma q^maj t^cotrip prod (1-t)/(1-q^(l+1) t^(a+1)).
XPoly macdonald_poly(const Composition& gamma, int n, const Perm& basement);
XPoly macdonald_poly(const Composition& gamma, int n);  // identity basement

// The variant that specializes to Demazure atoms at q = t = 0:
// E-hat_gamma(x_1..x_n; q, t) = E_{reverse(gamma)}(x_n..x_1; 1/q, 1/t).
XPoly macdonald_hat(const Composition& gamma, int n);

XPoly hecke_Ti(const XPoly& f, int i);
XPoly hecke_Ti_inverse(const XPoly& f, int i);
XPoly hecke_pi(const XPoly& f);
XPoly hecke_pi_inverse(const XPoly& f);
XPoly hecke_T_word(XPoly f, const std::vector<int>& word);          // rightmost first
XPoly hecke_T_word_inverse(XPoly f, const std::vector<int>& word);  // (T_w)^{-1}

XPoly Y_op(int i, const XPoly& f);
XPoly Y_tau_op(int i, const Perm& tau, const XPoly& f);

// Exponent of t in the Y_i eigenvalue on E_gamma.
int eigen_k(const Composition& gamma, int i);
QTRatio eigen_value(const Composition& gamma, int i);  // q^{-gamma_i} t^{k_i}

struct EigenReport {
  std::string id;
  bool pass = false;
  std::string detail;
};

// The checks (a)-(g): eigen-equations, the T_i action on permuted basements,
// T_tau transport, Y^tau eigenfunctions, the coinv/cotrip identity per
// reading, the symmetry criterion, and the q=t=0 atom specialization.
std::vector<EigenReport> verify_macdonald(int max_size, int n);

}  // namespace qschur
