#pragma once

#include <optional>
#include <vector>

#include "qschur/exact.hpp"
#include "qschur/perm.hpp"

// Lakshmibai-Seshadri paths in type A: chains of minimal coset representatives
// with rational cut points, the a-chain membership test, and the root
// operators e_i / f_i.

namespace qschur {

struct RationalPath {
  Composition lambda;       // partition, padded to length n
  std::vector<Perm> chain;  // tau_1 > ... > tau_r, minimal coset reps
  std::vector<QQ> cuts;     // 0 = a_0 < a_1 < ... < a_r = 1

  int n() const { return static_cast<int>(lambda.size()); }
  int segments() const { return static_cast<int>(chain.size()); }
  bool operator==(const RationalPath& o) const {
    return lambda == o.lambda && chain == o.chain && cuts == o.cuts;
  }
  bool operator<(const RationalPath& o) const;
};

RationalPath straight_path(const Composition& lambda, int n);

// Direction vector of segment k (1-based): tau_k(lambda).
std::vector<int> path_direction(const RationalPath& p, int k);
std::vector<QQ> path_weight(const RationalPath& p);
// For LS paths the weight is integral; throws otherwise.
Composition path_weight_integral(const RationalPath& p);

struct HProfile {
  std::vector<QQ> h;  // h_alpha at each cut a_0..a_r
  QQ Q, P;
  int p = 0, q = 0;   // max/min index attaining Q
  int x = -1, y = -1; // as in the root operator construction; -1 if undefined
};

HProfile h_profile(const RationalPath& p, int i);

// Structural validity plus an a_i-chain for every adjacent pair of the chain.
bool is_ls_path(const RationalPath& p);

std::optional<RationalPath> f_op(const RationalPath& p, int i);
std::optional<RationalPath> e_op(const RationalPath& p, int i);

// Closure of the straight path under all f_i, each member certified by
// is_ls_path.
std::vector<RationalPath> enumerate_paths(const Composition& lambda, int n);

XPoly atom_via_paths(const Composition& gamma, int n);
XPoly char_via_paths(const Perm& tau, const Composition& lambda, int n);

}  // namespace qschur
