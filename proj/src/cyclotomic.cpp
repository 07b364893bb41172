#include "taftyd/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace taftyd {

namespace {

// Quotient of polynomial division a / b for monic b; requires exact division
// (zero remainder), which holds in every use here.
std::vector<Rat> poly_div_exact(std::vector<Rat> a, const std::vector<Rat>& b) {
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  if (da < db) throw std::logic_error("poly_div_exact: degree underflow");
  std::vector<Rat> q(da - db + 1, Rat(0));
  for (int d = da - db; d >= 0; --d) {
    Rat f = a[d + db];  // b is monic
    q[d] = f;
    if (f != 0) {
      for (int k = 0; k <= db; ++k) a[d + k] -= f * b[k];
    }
  }
  for (const Rat& r : a)
    if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

void poly_trim(std::vector<Rat>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

}  // namespace

int euler_phi(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Rat> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  std::vector<Rat> num(static_cast<size_t>(n) + 1, Rat(0));
  num[0] = Rat(-1);
  num[n] = Rat(1);
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  poly_trim(num);
  return num;
}

CycField::CycField(int n) : n_(n), deg_(euler_phi(n)), phi_(cyclotomic_polynomial(n)) {
  // pow_table_[k] = x^k mod Phi_n, built by repeated shift-and-reduce.
  pow_table_.assign(n_, std::vector<Rat>(deg_, Rat(0)));
  std::vector<Rat> cur(deg_, Rat(0));
  cur[0] = Rat(1);
  pow_table_[0] = cur;
  for (int k = 1; k < n_; ++k) {
    Rat top = cur[deg_ - 1];
    for (int d = deg_ - 1; d > 0; --d) cur[d] = cur[d - 1];
    cur[0] = Rat(0);
    if (top != 0) {
      for (int d = 0; d < deg_; ++d) cur[d] -= top * phi_[d];
    }
    pow_table_[k] = cur;
  }
}

const CycField& CycField::get(int n) {
  if (n < 1) throw std::invalid_argument("CycField: order must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(n);
  if (it == registry.end()) {
    it = registry.emplace(n, std::unique_ptr<CycField>(new CycField(n))).first;
  }
  return *it->second;
}

const std::vector<Rat>& CycField::zeta_power(long long k) const {
  long long r = k % n_;
  if (r < 0) r += n_;
  return pow_table_[static_cast<size_t>(r)];
}

Cyclo Cyclo::zero(int n) {
  const CycField& f = CycField::get(n);
  return Cyclo(&f, std::vector<Rat>(f.degree(), Rat(0)));
}

Cyclo Cyclo::one(int n) { return from_rat(n, Rat(1)); }

Cyclo Cyclo::from_rat(int n, const Rat& r) {
  const CycField& f = CycField::get(n);
  std::vector<Rat> c(f.degree(), Rat(0));
  c[0] = r;
  return Cyclo(&f, std::move(c));
}

Cyclo Cyclo::from_int(int n, long long v) { return from_rat(n, Rat(v)); }

Cyclo Cyclo::root_power(int n, long long e) {
  const CycField& f = CycField::get(n);
  return Cyclo(&f, f.zeta_power(e));
}

Cyclo Cyclo::from_coeffs(int n, std::vector<Rat> coeffs) {
  const CycField& f = CycField::get(n);
  if (static_cast<int>(coeffs.size()) != f.degree())
    throw std::invalid_argument("Cyclo::from_coeffs: expected phi(n) coefficients");
  return Cyclo(&f, std::move(coeffs));
}

void Cyclo::check_same_field(const Cyclo& o) const {
  if (!field_ || !o.field_ || field_ != o.field_)
    throw std::domain_error("Cyclo: mixed or missing cyclotomic orders");
}

bool Cyclo::is_zero() const {
  for (const Rat& r : c_)
    if (r != 0) return false;
  return true;
}

bool Cyclo::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return !c_.empty();
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  Cyclo r(*this);
  r += o;
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  Cyclo r(*this);
  r -= o;
  return r;
}

Cyclo Cyclo::operator-() const {
  Cyclo r(*this);
  for (Rat& x : r.c_) x = -x;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  check_same_field(o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  check_same_field(o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  check_same_field(o);
  int deg = field_->degree();
  if (is_zero() || o.is_zero()) return Cyclo(field_, std::vector<Rat>(deg, Rat(0)));
  // Schoolbook product, then reduce the overflow powers via the table.
  std::vector<Rat> prod(static_cast<size_t>(2 * deg - 1), Rat(0));
  for (int a = 0; a < deg; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; b < deg; ++b) {
      if (o.c_[b] == 0) continue;
      prod[a + b] += c_[a] * o.c_[b];
    }
  }
  std::vector<Rat> out(prod.begin(), prod.begin() + deg);
  for (int k = deg; k < 2 * deg - 1; ++k) {
    if (prod[k] == 0) continue;
    const std::vector<Rat>& red = field_->zeta_power(k);
    for (int d = 0; d < deg; ++d) out[d] += prod[k] * red[d];
  }
  return Cyclo(field_, std::move(out));
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  *this = *this * o;
  return *this;
}

Cyclo Cyclo::scaled(const Rat& r) const {
  Cyclo out(*this);
  for (Rat& x : out.c_) x *= r;
  return out;
}

Cyclo Cyclo::inverse() const {
  if (!field_) throw std::domain_error("Cyclo: inverse of uninitialized value");
  if (is_zero()) throw std::domain_error("Cyclo: division by zero");
  // Extended Euclid in Q[x] against Phi_n: find u with u*this = 1 (mod Phi_n).
  std::vector<Rat> r0 = field_->modulus();
  std::vector<Rat> r1 = c_;
  poly_trim(r1);
  std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of this
  while (!(r1.size() == 1 && r1[0] == 0)) {
    // Divide r0 by r1.
    std::vector<Rat> q(std::max<size_t>(1, r0.size() - r1.size() + 1), Rat(0));
    std::vector<Rat> rem = r0;
    int d1 = static_cast<int>(r1.size()) - 1;
    Rat lead = r1[d1];
    for (int d = static_cast<int>(rem.size()) - 1 - d1; d >= 0; --d) {
      Rat f = rem[d + d1] / lead;
      q[d] = f;
      if (f != 0) {
        for (int k = 0; k <= d1; ++k) rem[d + k] -= f * r1[k];
      }
    }
    poly_trim(rem);
    // s_{k+1} = s_{k-1} - q * s_k
    std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
    for (size_t k = 0; k < s0.size(); ++k) s2[k] = s0[k];
    for (size_t a = 0; a < q.size(); ++a) {
      if (q[a] == 0) continue;
      for (size_t b = 0; b < s1.size(); ++b) s2[a + b] -= q[a] * s1[b];
    }
    poly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is now the gcd, a nonzero constant since Phi_n is irreducible.
  if (r0.size() != 1 || r0[0] == 0) throw std::logic_error("Cyclo: inverse gcd not constant");
  Rat scale = Rat(1) / r0[0];
  std::vector<Rat> u(field_->degree(), Rat(0));
  for (size_t k = 0; k < s0.size() && k < u.size(); ++k) u[k] = s0[k] * scale;
  Cyclo inv(field_, std::move(u));
  return inv;
}

bool Cyclo::operator==(const Cyclo& o) const {
  check_same_field(o);
  return c_ == o.c_;
}

int Cyclo::root_of_unity_order() const {
  if (!field_ || is_zero()) return 0;
  Cyclo acc = *this;
  Cyclo unit = one(field_->order());
  int cap = 2 * field_->order();
  for (int k = 1; k <= cap; ++k) {
    if (acc == unit) return k;
    acc *= *this;
  }
  return 0;
}

std::string Cyclo::str() const {
  if (!field_) return "<unset>";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rat v = c_[k];
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    bool unit_coeff = (v == 1) && k > 0;
    if (!unit_coeff) os << rat_to_string(v);
    if (k > 0) {
      if (!unit_coeff) os << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace taftyd
