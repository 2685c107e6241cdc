#pragma once

#include <vector>

#include "qschur/macdonald.hpp"

// Verification suites shared by the CLI and the acceptance tests. Each
// function runs a family of identity checks at the given desk-scale bounds
// and reports one pass/fail line per check.

namespace qschur {

using Report = EigenReport;

std::vector<Report> verify_exact(int trials);
std::vector<Report> verify_combinat(int dmax);
std::vector<Report> verify_insertion(int max_size, int n);
std::vector<Report> verify_lrrule(int amax, int lmax);
std::vector<Report> verify_coinvariant(int dmax);
std::vector<Report> verify_atoms(int max_size, int n);
std::vector<Report> verify_patterns(int max_size, int n);
std::vector<Report> verify_lspaths(int dmax, int n);
std::vector<Report> verify_hecke_relations(int deg, int n);

}  // namespace qschur
