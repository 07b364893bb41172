#pragma once

#include "taftyd/hopf.hpp"
#include "taftyd/matrix.hpp"

#include <optional>

namespace taftyd {

// Gaussian binomial at q via the recursion
//   binom(k+1,p)_q = binom(k,p)_q + q^{k+1-p} binom(k,p-1)_q
// with binom(k,0) = binom(k,k) = 1; zero outside 0 <= p <= k.  Convention:
// if BA = qAB then (A+B)^m = sum_p binom(m,p)_q A^{m-p} B^p.
Cyclo qbinom(int k, int p, const Cyclo& q);

// Unique representative of i mod N inside {1, ..., N}.
int phi(int i, int N);

enum class RVariant { general, t_multiple };

// Index pair (i, j) for one coefficient family.  i is the literal exponent
// appearing in the entries x^{k-l} g^{i-kt}; a context built from a factor
// i1 stores i = t*i1 and keeps i1 for the block and dimension formulas.
// i is reduced mod n and j mod N on construction, making contexts canonical:
// two families coincide exactly when those residues (and params) agree.
class CoeffContext {
 public:
  static CoeffContext general(TaftParams p, int i, int j);
  static CoeffContext t_multiple(TaftParams p, int i1, int j);

  const TaftParams& params() const { return p_; }
  int i() const { return i_; }
  int j() const { return j_; }
  bool has_factor() const { return i1_.has_value(); }
  int i1() const;

  bool operator==(const CoeffContext& o) const {
    return p_ == o.p_ && i_ == o.i_ && j_ == o.j_;
  }

 private:
  CoeffContext(TaftParams p, int i, int j, std::optional<int> i1);

  TaftParams p_;
  int i_;
  int j_;
  std::optional<int> i1_;  // reduced mod N when present
};

// R_j^i(k,l) = xi^{t(j-l)} - xi^{t(k-1)-i} for l < k, and 1 for l = k.
// The t-multiple variant evaluates w^{j-l} - w^{k-1-i1} instead; the two
// must agree whenever i = t*i1.  Indices outside 0 <= l <= k are an error.
Cyclo coeff_R(const CoeffContext& ctx, int k, int l,
              RVariant variant = RVariant::general);

// lambda_j^i(k,l) by the defining three-case recursion.
Cyclo lambda_rec(const CoeffContext& ctx, int k, int l);

// Closed form binom(k,p)_{xi^t} xi^{-t(k-p)p} prod_{l=p+1}^{k} R_j^i(l,0).
Cyclo lambda_closed(const CoeffContext& ctx, int k, int p);

// c_j^i(k,l) as a Hopf element.  Computed two ways: the defining recursion
// (antipode products) and the closed monomial lambda x^{k-l} g^{i-kt}; a
// disagreement aborts.  Results are memoized per context.
HopfElt c_coeff(const CoeffContext& ctx, int k, int l);

// Lower-triangular (p+1) x (p+1) matrix with entries c_j^i(k,l).
class Comatrix {
 public:
  Comatrix(CoeffContext ctx, int p);

  const CoeffContext& context() const { return ctx_; }
  int size() const { return size_; }
  const HopfElt& entry(int k, int l) const;

  // Copy with one entry replaced; exists for fault-injection tests.
  Comatrix with_entry(int k, int l, HopfElt e) const;

  std::string str() const;

 private:
  CoeffContext ctx_;
  int size_;
  std::vector<HopfElt> entries_;  // row-major square; upper part all zero
};

Comatrix build_comatrix(const CoeffContext& ctx, int p);

struct ComatrixReport {
  bool ok = true;
  std::string failure;  // first violated identity with its indices
};

// Checks the comatrix laws on the stored entries: eps(c(k,l)) = [k == l],
// Delta(c(k,l)) = sum_s c(k,s) (x) c(s,l), and the scalar product criterion
// lambda(k,s) lambda(s,l) = binom(k-l,s-l)_{xi^t} xi^{-t(k-s)(s-l)} lambda(k,l)
// with lambda read off the entries themselves.
ComatrixReport verify_comatrix(const Comatrix& m);

struct BlockDescriptor {
  int start = 0;  // first row/column inside the ambient matrix
  int size = 0;
  int i1 = 0;  // context residues (mod N) whose comatrix equals the block
  int j = 0;
};

struct BlockReport {
  int m = 0;
  std::vector<BlockDescriptor> blocks;  // decomposition of the size-pN matrix
  bool ok = true;
  std::string failure;
};

// For a t-multiple context: computes m = N - phi(-i1-j), then verifies that
// lambda(k,l) is nonzero throughout the leading triangle l <= k <= m and
// vanishes for l <= m < k, that the N x N matrix splits as the two diagonal
// bars of sizes m+1 and N-m-1, and that the size-pN matrix is p identical
// copies of the size-N one.
BlockReport block_decompose(const CoeffContext& ctx, int p);

}  // namespace taftyd
