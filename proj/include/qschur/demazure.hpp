#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qschur/exact.hpp"
#include "qschur/perm.hpp"
#include "qschur/tableaux.hpp"

// Divided-difference operators, Demazure characters and atoms, keys and right
// keys, and the composition-tableau and key constructions of atoms.

namespace qschur {

XPoly partial_op(const XPoly& f, int i);  // (f - s_i f)/(x_i - x_{i+1})
XPoly pi_op(const XPoly& f, int i);       // partial_i (x_i f)
XPoly pibar_op(const XPoly& f, int i);    // pi_i - 1

XPoly pi_word(XPoly f, const std::vector<int>& word);     // rightmost letter first
XPoly pibar_word(XPoly f, const std::vector<int>& word);

// pi_tau(x^lambda); computed along two independently generated reduced words
// of tau, which must agree.
XPoly demazure_char(const Perm& tau, const Composition& lambda, int n);
// pibar_tau(x^lambda) for tau the minimal coset representative with
// tau(sort(gamma)) = gamma.
XPoly demazure_atom(const Composition& gamma, int n);

// Young tableaux in the increasing convention: rows weakly increase left to
// right, columns strictly increase top to bottom.
bool is_ssyt(const Grid& t);
bool is_key(const Grid& t);  // ssyt with nested column sets
void enumerate_ssyt(const Composition& lambda, int n,
                    const std::function<void(const Grid&)>& visit);

Grid key_of_composition(const Composition& gamma);
Grid key_from_perm(const Perm& sigma, const Composition& mu);

// Column word factorization into maximal strictly decreasing runs.
std::vector<Word> column_word_factorization(const Word& w);
Composition colform(const Word& w);
// The tableau whose column word is w, if w is a tableau word.
std::optional<Grid> tableau_of_column_word(const Word& w);

Grid right_key(const Grid& t);

XPoly atom_via_keys(const Composition& gamma, int n);
XPoly atom_via_ct(const Composition& gamma, int n);

}  // namespace qschur
