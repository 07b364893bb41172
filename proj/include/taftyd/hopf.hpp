#pragma once

#include "taftyd/cyclotomic.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace taftyd {

// Parameters of the infinite-dimensional Taft algebra H(n, t):
//
//   g^n = 1,   x g = xi g x,   xi = zeta_n,
//   Delta(g) = g (x) g,   Delta(x) = x (x) g^t + 1 (x) x,
//   eps(g) = 1,  eps(x) = 0,   S(g) = g^{-1},  S(x) = -x g^{-t}.
//
// No power of x vanishes; a linear basis is { g^a x^b : 0 <= a < n, b >= 0 }.
struct TaftParams {
  int n = 0;
  int t = 0;

  TaftParams() = default;
  TaftParams(int n_, int t_);

  Cyclo xi(long long e = 1) const { return Cyclo::root_power(n, e); }
  // w = xi^t, the deformation parameter of all coefficient formulas.
  Cyclo w(long long e = 1) const {
    return Cyclo::root_power(n, static_cast<long long>(t) * e);
  }
  // Multiplicative order of xi^t; equals n / gcd(t, n), and 1 when t = 0.
  int N() const;

  bool operator==(const TaftParams& o) const = default;
};

// Basis monomial g^a x^b; a is kept reduced into {0, ..., n-1}.
struct GX {
  int a = 0;
  int b = 0;
  auto operator<=>(const GX&) const = default;
};

// Finitely supported element of H(n, t).  Zero coefficients are never stored.
class HopfElt {
 public:
  HopfElt() = default;  // unusable sentinel until given params
  explicit HopfElt(TaftParams p) : p_(p) {}

  static HopfElt zero(TaftParams p) { return HopfElt(p); }
  static HopfElt unit(TaftParams p);
  static HopfElt monomial(TaftParams p, int a, int b);
  static HopfElt gen_g(TaftParams p) { return monomial(p, 1, 0); }
  static HopfElt gen_x(TaftParams p) { return monomial(p, 0, 1); }

  const TaftParams& params() const { return p_; }
  const std::map<GX, Cyclo>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // += c * g^a x^b with a reduced mod n; drops the key if it cancels.
  void add_term(int a, int b, const Cyclo& c);

  HopfElt operator+(const HopfElt& o) const;
  HopfElt operator-(const HopfElt& o) const;
  HopfElt operator-() const;
  HopfElt operator*(const HopfElt& o) const;  // h_mul
  HopfElt scaled(const Cyclo& s) const;

  bool operator==(const HopfElt& o) const;
  bool operator!=(const HopfElt& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check_compatible(const HopfElt& o) const;

  TaftParams p_;
  std::map<GX, Cyclo> terms_;
};

// Element of H^{(x) legs}.  Keys are monomial sequences, one GX per leg.
class TensorElt {
 public:
  TensorElt() = default;
  TensorElt(TaftParams p, int legs);

  // a_1 (x) a_2 (x) ... (x) a_k as a single term-expanded tensor.
  static TensorElt outer(const std::vector<HopfElt>& factors);

  const TaftParams& params() const { return p_; }
  int legs() const { return legs_; }
  const std::map<std::vector<GX>, Cyclo>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<GX>& key, const Cyclo& c);

  TensorElt operator+(const TensorElt& o) const;
  TensorElt operator-(const TensorElt& o) const;
  TensorElt operator*(const TensorElt& o) const;  // leg-wise algebra product
  TensorElt scaled(const Cyclo& s) const;

  bool operator==(const TensorElt& o) const;
  bool operator!=(const TensorElt& o) const { return !(*this == o); }

  // Structural maps.  Legs are 0-indexed.
  TensorElt coproduct_leg(int leg) const;  // legs -> legs + 1
  TensorElt antipode_leg(int leg,
                         const std::function<HopfElt(const HopfElt&)>& s = {}) const;
  TensorElt counit_leg(int leg) const;     // legs -> legs - 1, needs legs >= 2
  TensorElt merge_legs(int leg) const;     // multiply legs (leg, leg+1)

  HopfElt to_elt() const;  // requires legs == 1

  std::string str() const;

 private:
  void check_compatible(const TensorElt& o) const;

  TaftParams p_;
  int legs_ = 0;
  std::map<std::vector<GX>, Cyclo> terms_;
};

HopfElt h_mul(const HopfElt& a, const HopfElt& b);

// Delta extended as an algebra map: Delta(g^a x^b) expands
// (g (x) g)^a (x (x) g^t + 1 (x) x)^b by tensor multiplication.
TensorElt h_coproduct(const HopfElt& a);

// eps(g^a x^b) = [b == 0], extended linearly.
Cyclo h_counit(const HopfElt& a);

// Anti-algebra map S computed by reversed products S(x)^b S(g)^a.
HopfElt h_antipode(const HopfElt& a);

// Closed form S(g^a x^b) = (-1)^b xi^{-t b(b+1)/2 - ab} g^{-bt-a} x^b,
// kept as an independent cross-check of h_antipode.
HopfElt h_antipode_closed(const HopfElt& a);

struct AxiomReport {
  bool ok = true;
  std::string failure;  // names the first violated law and monomial
};

// Checks, on every basis monomial g^a x^b with b <= degree_bound:
// coassociativity, both counit laws, the antipode convolution law, and that
// Delta and eps respect products of generators.  An alternative antipode can
// be injected to exercise the failure path.
AxiomReport verify_hopf_axioms(
    const TaftParams& p, int degree_bound,
    const std::function<HopfElt(const HopfElt&)>& antipode = {});

}  // namespace taftyd
