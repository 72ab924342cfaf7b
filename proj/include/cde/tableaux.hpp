#pragma once

#include <vector>

#include "cde/rational.hpp"
#include "cde/shapes.hpp"

namespace cde {

inline constexpr int kBarelyBudget = 9;
inline constexpr int kShiftedBarelyBudget = 6;

// (N)! det[1/(lambda_i - i - nu_j + j)!], 1/m! = 0 for m < 0.
Integer f_aitken(const SkewShape& s);
// Hook-length formula; lambda must be a partition.
Integer f_hook(const Partition& lambda);
std::vector<int> hook_lengths(const Partition& lambda);  // row-major
// Shifted hook-length formula; lambda must be strict.
Integer g_thrall(const Partition& lambda);
std::vector<int> shifted_hook_lengths(const Partition& lambda);  // row-major

// Entry encoding for the shifted alphabet: 2v for v, 2v+1 for v'.
inline int unprimed(int v) { return 2 * v; }
inline int primed(int v) { return 2 * v + 1; }

// One entry list per box (box order of the shape), each sorted.
using Filling = std::vector<std::vector<int>>;

bool is_barely_set_valued_tableau(const SkewShape& s, const Filling& T);
// diagonally_unprimed also rejects primes on [i,i].
bool is_shifted_barely_set_valued_tableau(const ShiftedShape& s, const Filling& T, bool diagonally_unprimed);

// Brute force; throw BudgetExceeded above the box budget.
Integer enumerate_barely(const SkewShape& s, int budget = kBarelyBudget);
Integer enumerate_shifted_barely(const ShiftedShape& s, bool diagonally_unprimed,
                                 int budget = kShiftedBarelyBudget);
// All fillings, for small golden tests.
std::vector<Filling> list_barely(const SkewShape& s, int budget = 5);
std::vector<Filling> list_shifted_barely(const ShiftedShape& s, bool diagonally_unprimed, int budget = 5);

// (N+1) f E(maxchain; ddeg) on [nu, lambda].
Integer count_barely_formula(const SkewShape& s);
// (|l|+1) 2^{|l|+1} g E(maxchain; ddeg), or with diagonally_unprimed
// (|l|+1) 2^{|l|-l(l)} g E(maxchain; 2 ddeg - sum T-_[i,i]).
Integer count_shifted_barely_formula(const ShiftedShape& s, bool diagonally_unprimed);

// E(maxchain; sum_i T-_[i,i]) on J(P^shift_lambda).
Rational diagonal_removal_expectation(const ShiftedShape& s);

// Product formulas for balanced / shifted-balanced shapes.
Integer balanced_barely_product(const SkewShape& s);            // ab/(a+b) (N+1) f
Integer shifted_barely_product(const Partition& lambda);        // (l1+1)(|l|+1) 2^{|l|-1} g
Integer shifted_diag_barely_product(const Partition& lambda);   // l1 (|l|+1) 2^{|l|-l(l)-1} g

}  // namespace cde
