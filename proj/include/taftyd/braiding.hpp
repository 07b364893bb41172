#pragma once

#include "taftyd/modules.hpp"

#include <string>
#include <utility>
#include <vector>

namespace taftyd {

// Braiding c(v (x) u) = v_(-1) . u (x) v_(0) of a Yetter-Drinfeld module,
// stored as the dense dim^2 x dim^2 matrix on the basis {v_p (x) v_k} with
// pair index p*dim + k.  On a truncated module the assembly silently reads
// x . v_K = 0, so overflow terms are dropped; such an operator is flagged
// approximate and refused by the exact symmetrizer routines.
struct BraidingOperator {
  YdModule module;
  int dim = 0;
  CycMat matrix;
  bool approximate = false;
};

// Assembles the braiding from the coaction rows and the action matrices.
// On V(ti,j,0) this reproduces the closed coefficient form
//   c(v_p (x) v_k) = w^{(i-p)(j-k)} sum_{l<=p} lambda_j^{ti}(p,l)
//                    v_{p+k-l} (x) v_l
// with v_r = 0 for r past the top index.
BraidingOperator braiding_operator(const YdModule& m);

// (c (x) id)(id (x) c)(c (x) id) - (id (x) c)(c (x) id)(id (x) c) on the
// third tensor power; the zero matrix exactly when c satisfies the braid
// relation.  Columns are evaluated by sparse application, so the cost is
// proportional to the number of nonzero coefficients, not dim^9.
CycMat yang_baxter_residual(const BraidingOperator& b);

// True exactly when yang_baxter_residual(b) is zero, checked column by
// column on sparse vectors without allocating the dim^3 x dim^3 residual.
bool yang_baxter_check(const BraidingOperator& b);

// Right triangularity with respect to the basis order v_0 < ... < v_top:
// every c(v_p (x) v_k) must be beta v_k (x) v_p plus terms v_a (x) v_b
// whose second leg b is strictly smaller than p.
bool triangularity_check(const BraidingOperator& b);

// beta_{k-l,k}^{i,j} = binom(k,l)_w prod_{s=l}^{k-1} (w^{-i} - w^{j-s}) for
// l < k, and 1 at l = k: the coaction coefficients of the auxiliary braided
// vector space F(V_{i,j}) whose basis u_k carries
//   g . u_k = w^{k-j} u_k,   x . u_k = -w^{k-j} u_{k+1},
//   delta(u_k) = sum_{l<=k} beta_{k-l,k} x^{k-l} g^{-i+l} (x) u_l.
Cyclo f_beta(const TaftParams& p, int i, int j, int k, int l);

// Braiding of F(V_{i,j}), dimension phi(i+j+1), computed step by step from
// the data above (each x step contributes -w^{s-j} and a shift, u_r = 0 past
// the top index).  Independent of the comatrix machinery; the module field
// records the V(ti,j,0) it models.
BraidingOperator f_module_braiding(const TaftParams& p, int i, int j);

// Identifies v_k with u_k and compares the two braidings entrywise; true
// exactly when V(ti,j,0) and F(V_{i,j}) braid identically.
bool braided_iso_check(const TaftParams& p, int i, int j);

// The rank-2 diagonal braided vector space W_{-i,-j} = span{x, y} with
//   c(x(x)x) = q11 x(x)x, c(x(x)y) = q12 y(x)x,
//   c(y(x)x) = q21 x(x)y, c(y(x)y) = q22 y(x)y,
// which is Nichols-finite exactly when V(ti,j,0) is.
struct DiagonalBraidingData {
  int N = 0;
  Cyclo w;
  Cyclo q11;  // w
  Cyclo q12;  // w^{-j}
  Cyclo q21;  // w^{-i}
  Cyclo q22;  // w^{ij}
};

// Generalized Dynkin diagram of the diagonal braiding: vertex labels q11 and
// q22, edge label q12 q21 = w^{-i-j}, connected exactly when the edge label
// differs from 1.
struct DynkinDiagram2 {
  Cyclo vertex1;
  Cyclo vertex2;
  Cyclo edge;
  bool connected = false;
};

// Diagonal data and diagram of W_{-i,-j}.  Requires N >= 2; for t = 0 the
// reduction does not apply (the classifier settles that case directly) and
// std::domain_error is thrown.
std::pair<DiagonalBraidingData, DynkinDiagram2> reduce_to_diagonal(
    const TaftParams& p, int i, int j);

// One-line rendering, e.g. "(w) --[w^2]-- (w)"; the edge is omitted when the
// diagram is disconnected.  Labels are written as powers of w.
std::string dynkin_text(const DiagonalBraidingData& d, const DynkinDiagram2& g);

enum class NicholsReason {
  T_ZERO,           // t = 0: the braiding is the flip, never Nichols-finite
  LAMBDA_NONZERO,   // lambda != 0: the symmetrized diagonal never vanishes
  TABLE_ROW,        // a finite-type table row matches
  NO_TABLE_MATCH,   // no row of the matching dimension table applies
  IJ_ZERO,          // ij = 0 mod N: vertex label w^{ij} = 1 forces a fixed line
};

const char* reason_name(NicholsReason r);

struct NicholsVerdict {
  bool finite = false;
  NicholsReason reason = NicholsReason::NO_TABLE_MATCH;
  int dim_module = 0;
  std::vector<std::pair<int, int>> tags;        // Heckenberger indices (k,l)
  std::vector<std::string> table_conditions;    // matched row conditions
  std::vector<std::pair<int, long long>> probe; // optional (m, dim B^m)
};

// Decision procedure for dim B(V(t*i1, j, lambda)) < infinity:
//   t = 0            -> infinite, T_ZERO
//   lambda != 0      -> infinite, LAMBDA_NONZERO
//   i1 j = 0 mod N   -> infinite, IJ_ZERO
//   otherwise        -> match (N, i1 mod N) against the row conditions of
//                       the dimension-d table, d = N - phi(-i1-j, N) + 1;
//                       finite exactly when some row matches, with every
//                       matching row's tags collected.
// Dimensions 7 <= d <= N have no table and always yield NO_TABLE_MATCH.
NicholsVerdict classify_nichols(const TaftParams& p, int i1, int j,
                                const Cyclo& lambda);

}  // namespace taftyd
