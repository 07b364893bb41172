#pragma once

#include "taftyd/braiding.hpp"

namespace taftyd {

// Default cap on the number of tensor words dim^m one symmetrizer call may
// touch.  Exceeding a budget signals a resource error (std::length_error);
// truncated (approximate) braidings are refused outright.
inline constexpr long long kSymmetrizerBudget = 6561;

// Braided symmetrizer S_m on V^{(x) m}: the sum over all m! permutations of
// the lifted operators, where a reduced word s_{k_1}...s_{k_r} lifts to the
// product c_{k_1}...c_{k_r} of the adjacent braidings c_k on slots (k, k+1).
// The braid relation makes the lift word independent.  Words are enumerated
// by a breadth-first walk of the weak order; the permutation count times the
// word count is capped, so large m must go through the recursive route.
// Word indices are big-endian: slot 0 is the leftmost tensor factor.
CycMat symmetrizer_permsum(const BraidingOperator& b, int m,
                           long long budget = kSymmetrizerBudget);

// S_m applied to the single basis word e_col, by the same permutation walk.
std::vector<Cyclo> symmetrizer_column(const BraidingOperator& b, int m,
                                      long long col,
                                      long long budget = kSymmetrizerBudget);

// Product c_{word[0]} c_{word[1]} ... as a matrix on V^{(x) m}; exposed so
// two reduced words of one permutation can be compared.
CycMat lift_reduced_word(const BraidingOperator& b, int m,
                         const std::vector<int>& word);

// S_m by the coproduct recursion instead: S_1 = id and
//   S_m = (id (x) S_{m-1}) B_m,
// where B_m is the (1, m-1) component of the braided product expansion of
// Delta on each basis word,
//   B_m(v_{a_0} ... v_{a_{m-1}}) = sum_k (prefix_k)_{-1} . v_{a_k}
//                                  (x) (prefix_k)_0 v_{a_{k+1}} ...,
// assembled from iterated coaction products in H and the module action, not
// from the braiding matrix.  Agreement with symmetrizer_permsum is therefore
// a genuine cross-check of the whole chain.
CycMat symmetrizer_recursive(const YdModule& m_module, int m,
                             long long budget = kSymmetrizerBudget);

// dim B^m = rank S_m over Q(zeta_n); 1 at m = 0 and dim V at m = 1 by
// construction.  When every nonzero entry of S_m preserves the word index
// sum, the rank is taken stratum by stratum.
long long graded_nichols_dim(const YdModule& m_module, int m,
                             long long budget = kSymmetrizerBudget);

// True iff every output term of S_m has word index sum at most that of its
// input basis word.
bool index_sum_check(const YdModule& m_module, int m,
                     long long budget = kSymmetrizerBudget);

// The scalar a_m with p_i^{(x) m}(S_m(v_i^{(x) m})) = a_m v_i^{(x) m} for a
// module with lambda != 0, i the factored index reduced mod n; equals m!.
// lambda = 0 has no distinguished top line and throws std::domain_error.
Cyclo psi_coefficient(const YdModule& m_module, int m,
                      long long budget = kSymmetrizerBudget);

// Graded probe [(m, dim B^m)] for 0 <= m <= max_degree, stopping before any
// degree whose word count would exceed the budget.
std::vector<std::pair<int, long long>> nichols_probe(
    const YdModule& m_module, int max_degree,
    long long budget = kSymmetrizerBudget);

}  // namespace taftyd
