#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qschur/combinat.hpp"

// Symmetric-group utilities: one-line notation, length, reduced words,
// Bruhat order, and minimal coset representatives mod the stabilizer of a
// partition.

namespace qschur {

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> one_line);
  static Perm identity(int n);
  static Perm simple(int i, int n);  // s_i

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }  // 1-based image
  const std::vector<int>& one_line() const { return img_; }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  Perm compose(const Perm& o) const;  // (this*o)(i) = this(o(i))
  Perm inverse() const;

  int length() const;
  std::vector<std::pair<int, int>> inversion_set() const;  // pairs (i<j) with img i > img j
  bool is_identity() const;

  // Reduced word i_1..i_k with *this = s_{i_1}...s_{i_k}; the flag selects the
  // descent picked at each step, giving two generally different words.
  std::vector<int> reduced_word(bool prefer_small_descent = true) const;

  // Positions act: (tau . v)_{tau(i)} = v_i.
  std::vector<int> apply_to_vector(const std::vector<int>& v) const;

  std::string to_text() const;  // "3,1,4,2"
  static Perm from_text(const std::string& s);

 private:
  std::vector<int> img_;
};

bool bruhat_leq(const Perm& sigma, const Perm& tau);

// The minimal-length permutation taking sort(gamma) to gamma, together with
// the sorted partition. gamma must have length n.
std::pair<Perm, Composition> min_coset_rep(const Composition& gamma);

std::vector<Perm> all_perms(int n);

}  // namespace qschur
