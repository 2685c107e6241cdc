#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qschur/insertion.hpp"
#include "qschur/tableaux.hpp"

// The Littlewood-Richardson type rule for RS_alpha * s_lambda: coefficient
// counts, the insertion bijection rho, super fillings, and the coinvariant
// basis with its transition matrix.

namespace qschur {

// Visit every LR skew filling of shape beta/gamma whose content is the given
// composition (one count per letter value).
void enumerate_lr_fillings(const Composition& beta, const Composition& gamma,
                           const Composition& content,
                           const std::function<void(const SkewGrid&)>& visit);

// All weak gamma with strip_zeros(gamma) = alpha, gamma contained in beta,
// and the same length as beta.
std::vector<Composition> zero_placements(const Composition& alpha, const Composition& beta);

long lr_coefficient(const Composition& alpha, const Composition& lambda, const Composition& beta);

struct LRExpansion {
  Composition alpha, lambda;
  std::map<Composition, long> terms;  // beta -> coefficient, all positive
};

// Full expansion of RS_alpha * s_lambda, internally verified against the
// polynomial product in n variables (requires n >= |alpha|+|lambda|).
LRExpansion expand_product(const Composition& alpha, const Composition& lambda, int n);

struct RhoResult {
  Grid v;
  SkewGrid s;
};

RhoResult rho(const Grid& u, const Grid& t);
std::pair<Grid, Grid> rho_inverse(const Grid& v, const SkewGrid& s);  // (U, T)

SkewGrid super_filling(const Composition& lambda, const Composition& alpha);

struct CoinvariantBasis {
  std::vector<std::pair<Composition, Composition>> pairs;  // (lambda, alpha), row order
  std::vector<Composition> comps;                          // compositions of d, lexrev descending
  std::vector<std::vector<long>> matrix;                   // pairs x comps
  bool uni_upper = false;
};

CoinvariantBasis coinvariant_basis(int d, int n);

}  // namespace qschur
