#include "qschur/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qschur {

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 1 || x > static_cast<int>(img_.size()) || seen[x - 1])
      throw std::invalid_argument("Perm: not a permutation of 1..n");
    seen[x - 1] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::simple(int i, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("Perm::simple: index out of range");
  Perm p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Perm Perm::compose(const Perm& o) const {
  if (degree() != o.degree()) throw std::invalid_argument("Perm::compose: degree mismatch");
  std::vector<int> v(degree());
  for (int i = 1; i <= degree(); ++i) v[i - 1] = (*this)(o(i));
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> v(degree());
  for (int i = 1; i <= degree(); ++i) v[img_[i - 1] - 1] = i;
  return Perm(std::move(v));
}

int Perm::length() const {
  int l = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    for (size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++l;
  return l;
}

std::vector<std::pair<int, int>> Perm::inversion_set() const {
  std::vector<std::pair<int, int>> inv;
  for (size_t i = 0; i < img_.size(); ++i)
    for (size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) inv.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return inv;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<int> Perm::reduced_word(bool prefer_small_descent) const {
  // tau = tau' s_i with i a (right) descent: tau(i) > tau(i+1).
  std::vector<int> word;
  std::vector<int> v = img_;
  int n = degree();
  while (true) {
    int pick = -1;
    if (prefer_small_descent) {
      for (int i = 1; i < n; ++i)
        if (v[i - 1] > v[i]) {
          pick = i;
          break;
        }
    } else {
      for (int i = n - 1; i >= 1; --i)
        if (v[i - 1] > v[i]) {
          pick = i;
          break;
        }
    }
    if (pick < 0) break;
    std::swap(v[pick - 1], v[pick]);
    word.push_back(pick);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> Perm::apply_to_vector(const std::vector<int>& v) const {
  if (v.size() != img_.size())
    throw std::invalid_argument("Perm::apply_to_vector: length mismatch");
  std::vector<int> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[img_[i] - 1] = v[i];
  return r;
}

std::string Perm::to_text() const {
  std::ostringstream os;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (i) os << ",";
    os << img_[i];
  }
  return os.str();
}

Perm Perm::from_text(const std::string& s) { return Perm(comp_from_text(s)); }

bool bruhat_leq(const Perm& sigma, const Perm& tau) {
  if (sigma.degree() != tau.degree())
    throw std::invalid_argument("bruhat_leq: degree mismatch");
  Perm s = sigma, t = tau;
  int n = s.degree();
  // Lifting property: for a left descent i of tau,
  //   sigma <= tau  iff  min(sigma, s_i sigma) <= s_i tau.
  while (true) {
    if (s.length() > t.length()) return false;
    if (s == t) return true;
    if (t.is_identity()) return s.is_identity();
    int i = -1;
    Perm ti = t.inverse();
    for (int k = 1; k < n; ++k)
      if (ti(k) > ti(k + 1)) {
        i = k;
        break;
      }
    Perm si = Perm::simple(i, n);
    Perm ssig = si.compose(s);
    if (ssig.length() < s.length()) s = ssig;
    t = si.compose(t);
  }
}

std::pair<Perm, Composition> min_coset_rep(const Composition& gamma) {
  int n = static_cast<int>(gamma.size());
  Composition lambda = sort_to_partition(gamma);
  // Positions of each value, taken in increasing order for equal lambda parts.
  std::vector<bool> used(n, false);
  std::vector<int> img(n, 0);
  for (int i = 0; i < n; ++i) {
    int want = lambda[i];
    int pos = -1;
    for (int p = 0; p < n; ++p)
      if (!used[p] && gamma[p] == want) {
        pos = p;
        break;
      }
    if (pos < 0) throw std::logic_error("min_coset_rep: internal mismatch");
    used[pos] = true;
    img[i] = pos + 1;
  }
  return {Perm(std::move(img)), lambda};
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace qschur
