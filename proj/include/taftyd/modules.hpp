#pragma once

#include "taftyd/coeffs.hpp"
#include "taftyd/matrix.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace taftyd {

// Finite simple module V(t*i1, j, lambda).  The factored index i1 is stored;
// the module charge appearing in coaction exponents is t*i1.
struct FiniteV {
  int i1 = 0;
  int j = 0;
  Cyclo lambda;
};

// V(i, j) for i outside the t-multiple set, materialized as the basis window
// v_0, ..., v_K with the x-action out of v_K left undefined.
struct InfiniteV {
  int i = 0;
  int j = 0;
  int K = 1;
};

struct ModuleSpecifier {
  TaftParams params;
  std::variant<FiniteV, InfiniteV> kind;

  bool is_finite() const { return std::holds_alternative<FiniteV>(kind); }
};

// A concrete Yetter-Drinfeld module over H(n, t) in a weight basis:
//
//   g . v_k = xi^{j-k} v_k            (g_weights[k] = j-k mod n)
//   x . v_k given by x_matrix          (shift, with corner lambda when finite)
//   delta(v_k) = sum_{l <= k} c_j^i(k, l) (x) v_l
//
// coaction_rows[k] stores the nonzero (coefficient, l) pairs of row k.
// A truncated module leaves x . v_K undefined; its x_matrix column K is kept
// zero and every identity involving that action is checked only for k < K.
struct YdModule {
  ModuleSpecifier spec;
  int dim = 0;
  std::vector<int> g_weights;
  CycMat x_matrix;
  std::vector<std::vector<std::pair<HopfElt, int>>> coaction_rows;
  bool truncated = false;
};

// True iff gcd(t, n) does not divide i, i.e. i is not congruent to any t*k
// mod n.  The set of such i is nonempty exactly when gcd(t, n) > 1.
bool in_standard_set(const TaftParams& p, int i);

// Builds V(t*i1, j, lambda).  dim = m + 1 with m = N - phi(-(i1+j), N) when
// lambda = 0 and m = n - 1 otherwise; lambda must be the zero of order n, a
// rational, or an order-n value.
YdModule build_finite_module(const TaftParams& p, int i1, int j,
                             const Cyclo& lambda);

// Builds the first K+1 basis lines of V(i, j).  Requires i in the standard
// index set and K >= 1; rows are exact and closed since delta(v_k) only
// involves l <= k.
YdModule build_infinite_truncation(const TaftParams& p, int i, int j, int K);

struct ModuleReport {
  bool ok = true;
  std::string failure;  // first violated identity with its witness indices
};

// Checks (a) the module axioms on the generators (g^n = 1 and xg = xi gx as
// action matrices), (b) the comodule axioms row by row via the comatrix laws
// on the coefficient matrix induced by coaction_rows, and (c) the
// Yetter-Drinfeld compatibility
//   delta(h . v) = h_(1) v_(-1) S(h_(3)) (x) h_(2) . v_(0)
// for h in {g, x} on every basis vector (x only for k < K when truncated).
ModuleReport verify_yd_module(const YdModule& m);

// Basis vector spanning a one-dimensional subcomodule: delta(v) = g^q (x) v.
// Its type is the pair (q, p) with q the coaction exponent and p the weight
// exponent, both mod n.
struct StandardElement {
  int index = 0;
  int coaction_exp = 0;
  int weight_exp = 0;

  bool operator==(const StandardElement&) const = default;
};

// All basis vectors whose coaction row is a single coefficient-1 g-power on
// the diagonal.  Equals the socle support: every g-eigenspace here is
// one-dimensional, so simple subcomodules are spanned by basis vectors.
std::vector<StandardElement> standard_elements(const YdModule& m);

// The socle decomposition: scans for rows with delta(v_k) in H (x) span{v_k}
// and certifies each coefficient group-like by the coproduct and counit laws
// before reporting it.  Must agree with standard_elements.
std::vector<StandardElement> socle(const YdModule& m);

// Verifies that v, x.v, x^2.v, ... (dim vectors) are linearly independent
// when started at a standard element.  start must index a standard element.
ModuleReport standard_basis_check(const YdModule& m, int start);

// Enumerates all 2^dim basis-subset spans and reports true iff no proper
// nonzero subset is closed under the x-action and the coaction.  Valid only
// because the g-weights are pairwise distinct (every submodule is spanned by
// basis vectors); refuses truncated modules, dim > 12, or repeated weights.
bool is_simple_bruteforce(const YdModule& m);

// Isomorphism test on specifiers over the same parameters:
//   finite, lambda = 0:        i1 = r1 mod N  and  j = s mod n
//   finite, lambda != 0 equal: lead types (i1, j) = (r1, s) mod N, or either
//                              shifted type (i1-p, j-p) matches the other
//                              lead, p = N - phi(-(i1+j), N) + 1 < N
//   finite vs different lambda: false
//   infinite:                  i = r mod n  and  j = s mod n
//   finite vs infinite:        false
bool iso_test(const ModuleSpecifier& a, const ModuleSpecifier& b);

}  // namespace taftyd
