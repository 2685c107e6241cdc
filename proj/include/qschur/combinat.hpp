#pragma once

#include <string>
#include <vector>

// Compositions, partitions, shape predicates and orders, reverse lattice
// words, and the pure/inverting machinery behind the coinvariant basis.

namespace qschur {

using Composition = std::vector<int>;  // weak: entries >= 0; strong: entries > 0
using Word = std::vector<int>;         // letters >= 1

bool is_strong(const Composition& a);
bool is_weak(const Composition& a);
bool is_partition(const Composition& a);

int comp_size(const Composition& a);  // |a|
Composition sort_to_partition(const Composition& a);
Composition strip_zeros(const Composition& a);
Composition reverse_comp(const Composition& a);
Composition transpose(const Composition& lambda);  // partition input required
std::vector<int> foundation(const Composition& gamma);  // { i : gamma_i > 0 }, 1-based

// gamma \subseteq beta: equal lengths and entrywise <=.
bool contained_in(const Composition& gamma, const Composition& beta);
// alpha \Subset beta: reverse(alpha) \subset reverse(beta) with the shorter
// reversal padded by leading zeros.
bool skew_contained_in(const Composition& alpha, const Composition& beta);

Composition word_content(const Word& w);
bool is_reverse_lattice(const Word& w);
bool is_regular_reverse_lattice(const Word& w);

// Total order on compositions of equal size: compare sorted partitions
// lexicographically, then reversals lexicographically. Returns -1/0/+1 for
// a < b / a == b / a > b; throws on unequal sizes.
int lexrev_compare(const Composition& a, const Composition& b);

bool is_inverting(const Composition& alpha);
bool is_pure(const Composition& alpha);

// Adds the i-th part of transpose(lambda) to the i-th largest part of alpha
// (later equal parts count as larger), padding alpha with zeros if needed.
Composition phi_pair(const Composition& lambda, const Composition& alpha);

std::vector<Composition> strong_compositions_of(int d);
std::vector<Composition> weak_compositions_of(int d, int len);
std::vector<Composition> partitions_of(int d);
std::vector<Composition> partitions_upto(int d);  // all partitions of size <= d, incl. empty

std::string comp_to_text(const Composition& a);   // "1,0,3,2"
Composition comp_from_text(const std::string& s);

}  // namespace qschur
