#include "qschur/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qschur {

bool is_strong(const Composition& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x > 0; });
}

bool is_weak(const Composition& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

bool is_partition(const Composition& a) {
  if (!is_weak(a)) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] > a[i - 1]) return false;
  return true;
}

int comp_size(const Composition& a) { return std::accumulate(a.begin(), a.end(), 0); }

Composition sort_to_partition(const Composition& a) {
  Composition r = a;
  std::sort(r.begin(), r.end(), std::greater<int>());
  return r;
}

Composition strip_zeros(const Composition& a) {
  Composition r;
  for (int x : a)
    if (x != 0) r.push_back(x);
  return r;
}

Composition reverse_comp(const Composition& a) { return Composition(a.rbegin(), a.rend()); }

Composition transpose(const Composition& lambda) {
  if (!is_partition(lambda)) throw std::invalid_argument("transpose: input is not a partition");
  Composition r;
  for (int j = 1; lambda.empty() ? false : j <= lambda[0]; ++j) {
    int count = 0;
    for (int part : lambda)
      if (part >= j) ++count;
    r.push_back(count);
  }
  return r;
}

std::vector<int> foundation(const Composition& gamma) {
  std::vector<int> f;
  for (size_t i = 0; i < gamma.size(); ++i)
    if (gamma[i] > 0) f.push_back(static_cast<int>(i) + 1);
  return f;
}

bool contained_in(const Composition& gamma, const Composition& beta) {
  if (gamma.size() != beta.size()) return false;
  for (size_t i = 0; i < gamma.size(); ++i)
    if (gamma[i] > beta[i]) return false;
  return true;
}

bool skew_contained_in(const Composition& alpha, const Composition& beta) {
  Composition ra = reverse_comp(alpha), rb = reverse_comp(beta);
  if (ra.size() > rb.size()) return false;
  // reverse(alpha) \subset reverse(beta) with left padding of the shorter
  size_t pad = rb.size() - ra.size();
  for (size_t i = 0; i < ra.size(); ++i)
    if (ra[i] > rb[i + pad]) return false;
  return true;
}

Composition word_content(const Word& w) {
  int m = 0;
  for (int x : w) {
    if (x < 1) throw std::invalid_argument("word_content: letters must be positive");
    m = std::max(m, x);
  }
  Composition c(m, 0);
  for (int x : w) ++c[x - 1];
  return c;
}

bool is_reverse_lattice(const Word& w) {
  int m = 0;
  for (int x : w) m = std::max(m, x);
  std::vector<int> count(m + 1, 0);
  for (int x : w) {
    ++count[x];
    for (int i = 2; i <= m; ++i)
      if (count[i] < count[i - 1]) return false;
  }
  return true;
}

bool is_regular_reverse_lattice(const Word& w) {
  if (!is_reverse_lattice(w)) return false;
  if (w.empty()) return false;
  return std::find(w.begin(), w.end(), 1) != w.end();
}

namespace {
int lex_compare(const Composition& a, const Composition& b) {
  size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i < m; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}
}  // namespace

int lexrev_compare(const Composition& a, const Composition& b) {
  if (comp_size(a) != comp_size(b))
    throw std::invalid_argument("lexrev_compare: compositions of unequal size");
  int c = lex_compare(sort_to_partition(strip_zeros(a)), sort_to_partition(strip_zeros(b)));
  if (c != 0) return c;
  return lex_compare(reverse_comp(a), reverse_comp(b));
}

bool is_inverting(const Composition& alpha) {
  if (!is_strong(alpha)) throw std::invalid_argument("is_inverting: strong composition required");
  int m = alpha.empty() ? 0 : *std::max_element(alpha.begin(), alpha.end());
  for (int i = 2; i <= m; ++i) {
    bool ok = false;
    for (size_t s = 0; s + 1 < alpha.size() && !ok; ++s) {
      if (alpha[s] != i) continue;
      for (size_t t = s + 1; t < alpha.size(); ++t)
        if (alpha[t] == i - 1) {
          ok = true;
          break;
        }
    }
    if (!ok) return false;
  }
  return true;
}

bool is_pure(const Composition& alpha) {
  if (!is_strong(alpha)) throw std::invalid_argument("is_pure: strong composition required");
  if (alpha.empty() || alpha.back() != 1) return true;  // k = 0
  // Factor alpha = (alpha', k^{i_k}, ..., 1^{i_1}) with every run present and
  // alpha' free of parts <= k; take the largest k admitting such a
  // factorization, and k = 0 when none does.
  int kmax = 0;
  {
    int pos = static_cast<int>(alpha.size()) - 1, expect = 1;
    while (pos >= 0 && alpha[pos] == expect) {
      while (pos >= 0 && alpha[pos] == expect) --pos;
      kmax = expect;
      ++expect;
    }
  }
  for (int k = kmax; k >= 1; --k) {
    int pos = static_cast<int>(alpha.size()) - 1;
    for (int e = 1; e <= k; ++e)
      while (pos >= 0 && alpha[pos] == e) --pos;
    bool clean = true;
    for (int i = 0; i <= pos; ++i)
      if (alpha[i] <= k) clean = false;
    if (clean) return k % 2 == 0;
  }
  return true;
}

Composition phi_pair(const Composition& lambda, const Composition& alpha) {
  if (!is_partition(strip_zeros(lambda)))
    throw std::invalid_argument("phi_pair: lambda must be a partition");
  if (!is_strong(alpha)) throw std::invalid_argument("phi_pair: alpha must be strong");
  Composition lt = transpose(strip_zeros(lambda));
  Composition beta = alpha;
  if (beta.size() < lt.size()) beta.resize(lt.size(), 0);
  // Rank rows: i-th largest part of alpha, later equal parts count as larger.
  std::vector<size_t> order(beta.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    if (beta[x] != beta[y]) return beta[x] > beta[y];
    return x > y;  // lower (later) row wins ties
  });
  for (size_t i = 0; i < lt.size(); ++i) beta[order[i]] += lt[i];
  return beta;
}

std::vector<Composition> strong_compositions_of(int d) {
  std::vector<Composition> out;
  if (d == 0) {
    out.push_back({});
    return out;
  }
  std::function<void(int, Composition&)> rec = [&](int rem, Composition& cur) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      rec(rem - p, cur);
      cur.pop_back();
    }
  };
  Composition cur;
  rec(d, cur);
  return out;
}

std::vector<Composition> weak_compositions_of(int d, int len) {
  std::vector<Composition> out;
  Composition cur(len, 0);
  std::function<void(int, int)> rec = [&](int idx, int rem) {
    if (idx == len) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (int p = 0; p <= rem; ++p) {
      cur[idx] = p;
      rec(idx + 1, rem - p);
    }
    cur[idx] = 0;
  };
  rec(0, d);
  return out;
}

std::vector<Composition> partitions_of(int d) {
  std::vector<Composition> out;
  Composition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

std::vector<Composition> partitions_upto(int d) {
  std::vector<Composition> out;
  for (int k = 0; k <= d; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::string comp_to_text(const Composition& a) {
  std::ostringstream os;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  return os.str();
}

Composition comp_from_text(const std::string& s) {
  Composition r;
  if (s.empty()) return r;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("comp_from_text: empty component");
    r.push_back(std::stoi(tok));
  }
  return r;
}

}  // namespace qschur
