#pragma once

#include "taftyd/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace taftyd {

// Exact arithmetic in the cyclotomic field Q(zeta_n).  Elements are stored
// fully reduced modulo the n-th cyclotomic polynomial Phi_n, so equality is
// coefficient equality and zero-test is "all coefficients zero".

// Monic polynomial Phi_n as coefficient vector c[0] + c[1] x + ... + x^deg.
std::vector<Rat> cyclotomic_polynomial(int n);

int euler_phi(int n);

// Shared per-order data: Phi_n and the reduction table for powers of zeta.
// One immutable instance per n, created on first use and cached for the
// process lifetime.
class CycField {
 public:
  static const CycField& get(int n);

  int order() const { return n_; }
  int degree() const { return deg_; }
  const std::vector<Rat>& modulus() const { return phi_; }

  // zeta^k reduced mod Phi_n, for any k (reduced mod n first).
  const std::vector<Rat>& zeta_power(long long k) const;

 private:
  explicit CycField(int n);

  int n_;
  int deg_;
  std::vector<Rat> phi_;
  // x^k mod Phi_n for 0 <= k < n; powers above deg-1 are genuinely reduced.
  std::vector<std::vector<Rat>> pow_table_;
};

class Cyclo {
 public:
  Cyclo() : field_(nullptr) {}  // default: unusable sentinel, order() == 0

  static Cyclo zero(int n);
  static Cyclo one(int n);
  static Cyclo from_rat(int n, const Rat& r);
  static Cyclo from_int(int n, long long v);
  // zeta_n^e in canonical reduced form, any integer e.
  static Cyclo root_power(int n, long long e);
  static Cyclo from_coeffs(int n, std::vector<Rat> coeffs);

  int order() const { return field_ ? field_->order() : 0; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;  // all coefficients beyond the constant vanish

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo scaled(const Rat& r) const;

  // Exact inverse; throws std::domain_error on zero.
  Cyclo inverse() const;
  Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  // Multiplicative order if this is a root of unity, else 0.  Checked by
  // repeated multiplication; never exceeds order() for elements of Q(zeta_n)
  // times {+-1}, so the search is capped at 2n.
  int root_of_unity_order() const;

  // Renders as a polynomial in z, e.g. "1 - 2*z^2" or "1/3*z".
  std::string str() const;

 private:
  Cyclo(const CycField* f, std::vector<Rat> c) : field_(f), c_(std::move(c)) {}
  void check_same_field(const Cyclo& o) const;

  const CycField* field_;
  std::vector<Rat> c_;  // length degree(), index k = coefficient of zeta^k
};

}  // namespace taftyd
