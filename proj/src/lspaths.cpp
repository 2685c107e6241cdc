#include "qschur/lspaths.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace qschur {

bool RationalPath::operator<(const RationalPath& o) const {
  if (lambda != o.lambda) return lambda < o.lambda;
  if (chain != o.chain) return chain < o.chain;
  return std::lexicographical_compare(cuts.begin(), cuts.end(), o.cuts.begin(), o.cuts.end(),
                                      [](const QQ& a, const QQ& b) { return a < b; });
}

RationalPath straight_path(const Composition& lambda, int n) {
  Composition lam = lambda;
  lam.resize(n, 0);
  if (!is_partition(lam)) throw std::invalid_argument("straight_path: partition required");
  RationalPath p;
  p.lambda = lam;
  p.chain = {Perm::identity(n)};
  p.cuts = {QQ(0), QQ(1)};
  return p;
}

std::vector<int> path_direction(const RationalPath& p, int k) {
  return p.chain[k - 1].apply_to_vector(p.lambda);
}

std::vector<QQ> path_weight(const RationalPath& p) {
  std::vector<QQ> w(p.n(), QQ(0));
  for (int k = 1; k <= p.segments(); ++k) {
    std::vector<int> dir = path_direction(p, k);
    QQ len = p.cuts[k] - p.cuts[k - 1];
    for (int i = 0; i < p.n(); ++i) w[i] += len * QQ(dir[i]);
  }
  return w;
}

Composition path_weight_integral(const RationalPath& p) {
  std::vector<QQ> w = path_weight(p);
  Composition r(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].get_den() != 1) throw std::logic_error("path_weight_integral: non-integral weight");
    r[i] = static_cast<int>(w[i].get_num().get_si());
  }
  return r;
}

namespace {

int pairing(const std::vector<int>& v, int i) { return v[i - 1] - v[i]; }

Perm coset_min_of(const std::vector<int>& v) { return min_coset_rep(v).first; }

std::vector<int> swap_entries(std::vector<int> v, int i, int j) {
  std::swap(v[i - 1], v[j - 1]);
  return v;
}

}  // namespace

HProfile h_profile(const RationalPath& p, int i) {
  if (i < 1 || i >= p.n()) throw std::invalid_argument("h_profile: index out of range");
  int r = p.segments();
  HProfile hp;
  hp.h.assign(r + 1, QQ(0));
  for (int k = 1; k <= r; ++k) {
    std::vector<int> dir = path_direction(p, k);
    hp.h[k] = hp.h[k - 1] + (p.cuts[k] - p.cuts[k - 1]) * QQ(pairing(dir, i));
  }
  hp.Q = hp.h[0];
  for (const QQ& v : hp.h) hp.Q = std::min(hp.Q, v);
  hp.P = hp.h[r] - hp.Q;
  for (int k = 0; k <= r; ++k)
    if (hp.h[k] == hp.Q) hp.p = k;
  for (int k = r; k >= 0; --k)
    if (hp.h[k] == hp.Q) hp.q = k;
  QQ q1 = hp.Q + 1;
  // x: minimal index with h >= Q+1 on all later cuts
  hp.x = 0;
  for (int k = 0; k <= r; ++k)
    if (hp.h[k] < q1) hp.x = k + 1;
  if (hp.x > r) hp.x = -1;
  // y: maximal index with h >= Q+1 on all earlier cuts
  hp.y = r;
  for (int k = r; k >= 0; --k)
    if (hp.h[k] < q1) hp.y = k - 1;
  if (hp.y < 0) hp.y = -1;
  return hp;
}

bool is_ls_path(const RationalPath& p) {
  int n = p.n();
  if (!is_partition(p.lambda)) return false;
  int r = p.segments();
  if (r == 0 || static_cast<int>(p.cuts.size()) != r + 1) return false;
  if (p.cuts.front() != 0 || p.cuts.back() != 1) return false;
  for (int k = 1; k <= r; ++k)
    if (!(p.cuts[k - 1] < p.cuts[k])) return false;
  for (const Perm& tau : p.chain) {
    if (tau.degree() != n) return false;
    if (!(coset_min_of(tau.apply_to_vector(p.lambda)) == tau)) return false;  // min coset rep
  }
  for (int k = 1; k < r; ++k) {
    if (!(bruhat_leq(p.chain[k], p.chain[k - 1])) || p.chain[k] == p.chain[k - 1]) return false;
  }
  // a_i-chain existence for each adjacent pair
  for (int k = 1; k < r; ++k) {
    const Perm& top = p.chain[k - 1];
    const Perm& bot = p.chain[k];
    QQ a = p.cuts[k];
    std::set<std::vector<int>> visited;
    std::deque<Perm> stack{top};
    bool found = false;
    while (!stack.empty() && !found) {
      Perm cur = stack.back();
      stack.pop_back();
      if (cur == bot) {
        found = true;
        break;
      }
      int cl = cur.length();
      std::vector<int> v = cur.apply_to_vector(p.lambda);
      for (int i1 = 1; i1 <= n && !found; ++i1)
        for (int j1 = i1 + 1; j1 <= n; ++j1) {
          std::vector<int> w = swap_entries(v, i1, j1);
          if (w == v) continue;
          Perm next = coset_min_of(w);
          if (next.length() != cl - 1) continue;
          if (!bruhat_leq(bot, next)) continue;
          QQ val = a * QQ(w[i1 - 1] - w[j1 - 1]);
          if (val.get_den() != 1) continue;
          if (visited.insert(next.one_line()).second) stack.push_back(next);
        }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

std::optional<RationalPath> apply_root_op(const RationalPath& p, int i, bool lowering) {
  HProfile hp = h_profile(p, i);
  int r = p.segments();
  if (hp.Q.get_den() != 1)
    throw std::logic_error("root operator: minimum of h is not an integer");
  if (lowering) {
    if (hp.P == 0) return std::nullopt;
  } else {
    if (hp.Q == 0) return std::nullopt;
  }

  RationalPath out;
  out.lambda = p.lambda;
  auto reflected = [&](int k) {
    return coset_min_of(swap_entries(path_direction(p, k), i, i + 1));
  };

  if (lowering) {
    int pp = hp.p, x = hp.x;
    if (x < 0 || x <= pp) throw std::logic_error("f_op: no valid x index");
    bool flat = (hp.h[x] == hp.Q + 1);
    bool merge = (pp >= 1) && (reflected(pp + 1) == p.chain[pp - 1]);
    // chain
    for (int k = 1; k <= (merge ? pp - 1 : pp); ++k) out.chain.push_back(p.chain[k - 1]);
    for (int k = pp + 1; k <= x; ++k) out.chain.push_back(reflected(k));
    for (int k = (flat ? x + 1 : x); k <= r; ++k) out.chain.push_back(p.chain[k - 1]);
    // cuts
    if (flat) {
      for (int k = 0; k <= r; ++k) {
        if (merge && k == pp) continue;
        out.cuts.push_back(p.cuts[k]);
      }
    } else {
      std::vector<int> dir = path_direction(p, x);
      int slope = pairing(dir, i);
      if (slope <= 0) throw std::logic_error("f_op: nonpositive slope at crossing segment");
      QQ a = p.cuts[x - 1] + (hp.Q + 1 - hp.h[x - 1]) / QQ(slope);
      for (int k = 0; k <= x - 1; ++k) {
        if (merge && k == pp) continue;
        out.cuts.push_back(p.cuts[k]);
      }
      out.cuts.push_back(a);
      for (int k = x; k <= r; ++k) out.cuts.push_back(p.cuts[k]);
    }
  } else {
    int q = hp.q, y = hp.y;
    if (y < 0 || y >= q) throw std::logic_error("e_op: no valid y index");
    bool flat = (hp.h[y] == hp.Q + 1);
    bool merge = (q <= r - 1) && (reflected(q) == p.chain[q]);
    for (int k = 1; k <= (flat ? y : y + 1); ++k) out.chain.push_back(p.chain[k - 1]);
    for (int k = y + 1; k <= q; ++k) out.chain.push_back(reflected(k));
    for (int k = (merge ? q + 2 : q + 1); k <= r; ++k) out.chain.push_back(p.chain[k - 1]);
    // when segments q and q+1 merge, the cut between them is a_q
    if (flat) {
      for (int k = 0; k <= r; ++k) {
        if (merge && k == q) continue;
        out.cuts.push_back(p.cuts[k]);
      }
    } else {
      std::vector<int> dir = path_direction(p, y + 1);
      int slope = pairing(dir, i);
      if (slope >= 0) throw std::logic_error("e_op: nonnegative slope at crossing segment");
      QQ a = p.cuts[y] + (hp.Q + 1 - hp.h[y]) / QQ(slope);
      for (int k = 0; k <= y; ++k) out.cuts.push_back(p.cuts[k]);
      out.cuts.push_back(a);
      for (int k = y + 1; k <= r; ++k) {
        if (merge && k == q) continue;
        out.cuts.push_back(p.cuts[k]);
      }
    }
  }

  if (out.cuts.size() != out.chain.size() + 1)
    throw std::logic_error("root operator: chain/cut size mismatch");
  for (size_t k = 1; k < out.cuts.size(); ++k)
    if (!(out.cuts[k - 1] < out.cuts[k]))
      throw std::logic_error("root operator: cuts not strictly increasing");
  for (size_t k = 1; k < out.chain.size(); ++k)
    if (out.chain[k] == out.chain[k - 1] || !bruhat_leq(out.chain[k], out.chain[k - 1]))
      throw std::logic_error("root operator: chain not strictly decreasing");
  return out;
}

}  // namespace

std::optional<RationalPath> f_op(const RationalPath& p, int i) { return apply_root_op(p, i, true); }

std::optional<RationalPath> e_op(const RationalPath& p, int i) { return apply_root_op(p, i, false); }

std::vector<RationalPath> enumerate_paths(const Composition& lambda, int n) {
  RationalPath start = straight_path(lambda, n);
  std::set<RationalPath> seen{start};
  std::deque<RationalPath> queue{start};
  while (!queue.empty()) {
    RationalPath cur = queue.front();
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      std::optional<RationalPath> next = f_op(cur, i);
      if (!next) continue;
      if (!is_ls_path(*next))
        throw std::logic_error("enumerate_paths: f-closure produced a non-LS path");
      if (seen.insert(*next).second) queue.push_back(*next);
    }
  }
  return std::vector<RationalPath>(seen.begin(), seen.end());
}

XPoly atom_via_paths(const Composition& gamma, int n) {
  if (static_cast<int>(gamma.size()) != n)
    throw std::invalid_argument("atom_via_paths: gamma must have length n");
  auto [tau, lambda] = min_coset_rep(gamma);
  XPoly acc = XPoly::zero(n);
  for (const RationalPath& p : enumerate_paths(lambda, n))
    if (p.chain.front() == tau) acc = acc + XPoly::x_power(path_weight_integral(p), n);
  return acc;
}

XPoly char_via_paths(const Perm& tau, const Composition& lambda, int n) {
  Composition lam = lambda;
  lam.resize(n, 0);
  XPoly acc = XPoly::zero(n);
  for (const RationalPath& p : enumerate_paths(lam, n))
    if (bruhat_leq(p.chain.front(), tau)) acc = acc + XPoly::x_power(path_weight_integral(p), n);
  return acc;
}

}  // namespace qschur
