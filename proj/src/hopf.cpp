#include "taftyd/hopf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace taftyd {

TaftParams::TaftParams(int n_, int t_) : n(n_), t(t_) {
  if (n < 2) throw std::invalid_argument("TaftParams: n must be >= 2");
  if (t < 0 || t >= n) throw std::invalid_argument("TaftParams: t must lie in [0, n)");
}

int TaftParams::N() const { return n / std::gcd(t, n); }

namespace {

int reduce_mod(long long a, int n) {
  long long r = a % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

}  // namespace

HopfElt HopfElt::unit(TaftParams p) { return monomial(p, 0, 0); }

HopfElt HopfElt::monomial(TaftParams p, int a, int b) {
  if (b < 0) throw std::invalid_argument("HopfElt: negative x-degree");
  HopfElt h(p);
  h.add_term(a, b, Cyclo::one(p.n));
  return h;
}

void HopfElt::add_term(int a, int b, const Cyclo& c) {
  if (b < 0) throw std::invalid_argument("HopfElt: negative x-degree");
  if (c.is_zero()) return;
  GX key{reduce_mod(a, p_.n), b};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HopfElt::check_compatible(const HopfElt& o) const {
  if (!(p_ == o.p_)) throw std::domain_error("HopfElt: parameter mismatch");
}

HopfElt HopfElt::operator+(const HopfElt& o) const {
  check_compatible(o);
  HopfElt r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.a, k.b, c);
  return r;
}

HopfElt HopfElt::operator-(const HopfElt& o) const {
  check_compatible(o);
  HopfElt r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.a, k.b, -c);
  return r;
}

HopfElt HopfElt::operator-() const {
  HopfElt r(p_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

HopfElt HopfElt::operator*(const HopfElt& o) const {
  check_compatible(o);
  // (g^i x^j)(g^k x^l) = xi^{jk} g^{i+k} x^{j+l}
  HopfElt r(p_);
  for (const auto& [u, cu] : terms_) {
    for (const auto& [v, cv] : o.terms_) {
      Cyclo c = cu * cv * p_.xi(static_cast<long long>(u.b) * v.a);
      r.add_term(u.a + v.a, u.b + v.b, c);
    }
  }
  return r;
}

HopfElt HopfElt::scaled(const Cyclo& s) const {
  HopfElt r(p_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : terms_) {
    Cyclo v = c * s;
    if (!v.is_zero()) r.terms_.emplace(k, v);
  }
  return r;
}

bool HopfElt::operator==(const HopfElt& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

std::string HopfElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    bool wrap = cs.find(' ') != std::string::npos;
    bool unit_mono = (k.a == 0 && k.b == 0);
    if (unit_mono) {
      os << (wrap ? "(" + cs + ")" : cs);
      continue;
    }
    if (!c.is_one()) os << (wrap ? "(" + cs + ")" : cs) << "*";
    if (k.a != 0) {
      os << "g";
      if (k.a != 1) os << "^" << k.a;
      if (k.b != 0) os << "*";
    }
    if (k.b != 0) {
      os << "x";
      if (k.b != 1) os << "^" << k.b;
    }
  }
  return os.str();
}

TensorElt::TensorElt(TaftParams p, int legs) : p_(p), legs_(legs) {
  if (legs < 1) throw std::invalid_argument("TensorElt: need at least one leg");
}

TensorElt TensorElt::outer(const std::vector<HopfElt>& factors) {
  if (factors.empty()) throw std::invalid_argument("TensorElt: empty outer product");
  TensorElt r(factors[0].params(), static_cast<int>(factors.size()));
  std::vector<GX> key(factors.size());
  Cyclo coeff = Cyclo::one(r.p_.n);
  std::function<void(size_t, const Cyclo&)> rec = [&](size_t leg, const Cyclo& acc) {
    if (leg == factors.size()) {
      r.add_term(key, acc);
      return;
    }
    if (!(factors[leg].params() == r.p_))
      throw std::domain_error("TensorElt: parameter mismatch in outer product");
    for (const auto& [k, c] : factors[leg].terms()) {
      key[leg] = k;
      rec(leg + 1, acc * c);
    }
  };
  rec(0, coeff);
  return r;
}

void TensorElt::add_term(const std::vector<GX>& key, const Cyclo& c) {
  if (static_cast<int>(key.size()) != legs_)
    throw std::invalid_argument("TensorElt: key length != legs");
  if (c.is_zero()) return;
  std::vector<GX> k = key;
  for (GX& m : k) {
    m.a = reduce_mod(m.a, p_.n);
    if (m.b < 0) throw std::invalid_argument("TensorElt: negative x-degree");
  }
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElt::check_compatible(const TensorElt& o) const {
  if (!(p_ == o.p_) || legs_ != o.legs_)
    throw std::domain_error("TensorElt: parameter or arity mismatch");
}

TensorElt TensorElt::operator+(const TensorElt& o) const {
  check_compatible(o);
  TensorElt r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

TensorElt TensorElt::operator-(const TensorElt& o) const {
  check_compatible(o);
  TensorElt r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

TensorElt TensorElt::operator*(const TensorElt& o) const {
  check_compatible(o);
  TensorElt r(p_, legs_);
  std::vector<GX> key(legs_);
  for (const auto& [u, cu] : terms_) {
    for (const auto& [v, cv] : o.terms_) {
      Cyclo c = cu * cv;
      for (int leg = 0; leg < legs_; ++leg) {
        c *= p_.xi(static_cast<long long>(u[leg].b) * v[leg].a);
        key[leg] = GX{reduce_mod(u[leg].a + v[leg].a, p_.n), u[leg].b + v[leg].b};
      }
      r.add_term(key, c);
    }
  }
  return r;
}

TensorElt TensorElt::scaled(const Cyclo& s) const {
  TensorElt r(p_, legs_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : terms_) {
    Cyclo v = c * s;
    if (!v.is_zero()) r.terms_.emplace(k, v);
  }
  return r;
}

bool TensorElt::operator==(const TensorElt& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

TensorElt TensorElt::coproduct_leg(int leg) const {
  if (leg < 0 || leg >= legs_) throw std::invalid_argument("TensorElt: leg out of range");
  TensorElt r(p_, legs_ + 1);
  for (const auto& [k, c] : terms_) {
    TensorElt d = h_coproduct(HopfElt::monomial(p_, k[leg].a, k[leg].b));
    for (const auto& [dk, dc] : d.terms()) {
      std::vector<GX> key;
      key.reserve(legs_ + 1);
      key.insert(key.end(), k.begin(), k.begin() + leg);
      key.push_back(dk[0]);
      key.push_back(dk[1]);
      key.insert(key.end(), k.begin() + leg + 1, k.end());
      r.add_term(key, c * dc);
    }
  }
  return r;
}

TensorElt TensorElt::antipode_leg(
    int leg, const std::function<HopfElt(const HopfElt&)>& s) const {
  if (leg < 0 || leg >= legs_) throw std::invalid_argument("TensorElt: leg out of range");
  TensorElt r(p_, legs_);
  for (const auto& [k, c] : terms_) {
    HopfElt img = s ? s(HopfElt::monomial(p_, k[leg].a, k[leg].b))
                    : h_antipode(HopfElt::monomial(p_, k[leg].a, k[leg].b));
    for (const auto& [ik, ic] : img.terms()) {
      std::vector<GX> key = k;
      key[leg] = ik;
      r.add_term(key, c * ic);
    }
  }
  return r;
}

TensorElt TensorElt::counit_leg(int leg) const {
  if (leg < 0 || leg >= legs_) throw std::invalid_argument("TensorElt: leg out of range");
  if (legs_ < 2) throw std::invalid_argument("TensorElt: cannot drop the only leg");
  TensorElt r(p_, legs_ - 1);
  for (const auto& [k, c] : terms_) {
    if (k[leg].b != 0) continue;  // eps kills positive x-degree
    std::vector<GX> key;
    key.reserve(legs_ - 1);
    for (int i = 0; i < legs_; ++i)
      if (i != leg) key.push_back(k[i]);
    r.add_term(key, c);
  }
  return r;
}

TensorElt TensorElt::merge_legs(int leg) const {
  if (leg < 0 || leg + 1 >= legs_) throw std::invalid_argument("TensorElt: leg out of range");
  TensorElt r(p_, legs_ - 1);
  for (const auto& [k, c] : terms_) {
    const GX& u = k[leg];
    const GX& v = k[leg + 1];
    Cyclo coeff = c * p_.xi(static_cast<long long>(u.b) * v.a);
    std::vector<GX> key;
    key.reserve(legs_ - 1);
    key.insert(key.end(), k.begin(), k.begin() + leg);
    key.push_back(GX{reduce_mod(u.a + v.a, p_.n), u.b + v.b});
    key.insert(key.end(), k.begin() + leg + 2, k.end());
    r.add_term(key, coeff);
  }
  return r;
}

HopfElt TensorElt::to_elt() const {
  if (legs_ != 1) throw std::invalid_argument("TensorElt: to_elt needs exactly one leg");
  HopfElt r(p_);
  for (const auto& [k, c] : terms_) r.add_term(k[0].a, k[0].b, c);
  return r;
}

std::string TensorElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*[";
    for (int leg = 0; leg < legs_; ++leg) {
      if (leg) os << " (x) ";
      os << "g^" << k[leg].a << "*x^" << k[leg].b;
    }
    os << "]";
  }
  return os.str();
}

HopfElt h_mul(const HopfElt& a, const HopfElt& b) { return a * b; }

namespace {

// Delta(g^a x^b) by repeated multiplication of Delta(g) and Delta(x), cached
// per monomial shape; the expansion is the algebra-map definition, so the
// q-binomial identities stay independently checkable against it.
class CoproductCache {
 public:
  static const TensorElt& get(const TaftParams& p, int a, int b) {
    static CoproductCache cache;
    std::lock_guard<std::mutex> lock(cache.mu_);
    auto [it, fresh] = cache.map_.try_emplace(Key{p.n, p.t, a, b}, nullptr);
    if (fresh) {
      TensorElt dg(p, 2);
      dg.add_term({GX{1, 0}, GX{1, 0}}, Cyclo::one(p.n));
      TensorElt dx(p, 2);
      dx.add_term({GX{0, 1}, GX{p.t, 0}}, Cyclo::one(p.n));
      dx.add_term({GX{0, 0}, GX{0, 1}}, Cyclo::one(p.n));
      TensorElt acc(p, 2);
      acc.add_term({GX{0, 0}, GX{0, 0}}, Cyclo::one(p.n));
      for (int i = 0; i < a; ++i) acc = acc * dg;
      for (int i = 0; i < b; ++i) acc = acc * dx;
      it->second = std::make_unique<TensorElt>(std::move(acc));
    }
    return *it->second;
  }

 private:
  using Key = std::tuple<int, int, int, int>;

  std::mutex mu_;
  std::map<Key, std::unique_ptr<TensorElt>> map_;
};

}  // namespace

TensorElt h_coproduct(const HopfElt& a) {
  const TaftParams& p = a.params();
  TensorElt result(p, 2);
  for (const auto& [k, c] : a.terms()) {
    const TensorElt& dm = CoproductCache::get(p, k.a, k.b);
    for (const auto& [key, dc] : dm.terms()) result.add_term(key, dc * c);
  }
  return result;
}

Cyclo h_counit(const HopfElt& a) {
  Cyclo r = Cyclo::zero(a.params().n);
  for (const auto& [k, c] : a.terms())
    if (k.b == 0) r += c;
  return r;
}

HopfElt h_antipode(const HopfElt& a) {
  const TaftParams& p = a.params();
  // S(x) = -x g^{-t}, S(g) = g^{-1}; the monomial image is the reversed
  // product S(x)^b S(g)^a.
  HopfElt sx = -(HopfElt::gen_x(p) * HopfElt::monomial(p, -p.t, 0));
  HopfElt sg = HopfElt::monomial(p, p.n - 1, 0);
  HopfElt result(p);
  for (const auto& [k, c] : a.terms()) {
    HopfElt acc = HopfElt::unit(p);
    for (int i = 0; i < k.b; ++i) acc = acc * sx;
    for (int i = 0; i < k.a; ++i) acc = acc * sg;
    result = result + acc.scaled(c);
  }
  return result;
}

HopfElt h_antipode_closed(const HopfElt& a) {
  const TaftParams& p = a.params();
  HopfElt result(p);
  for (const auto& [k, c] : a.terms()) {
    long long b = k.b;
    long long e = -p.t * b * (b + 1) / 2 - static_cast<long long>(k.a) * b;
    Cyclo coeff = p.xi(e);
    if (b % 2) coeff = -coeff;
    result.add_term(reduce_mod(-b * p.t - k.a, p.n), k.b, c * coeff);
  }
  return result;
}

AxiomReport verify_hopf_axioms(const TaftParams& p, int degree_bound,
                               const std::function<HopfElt(const HopfElt&)>& antipode) {
  if (degree_bound < 1)
    throw std::invalid_argument("verify_hopf_axioms: degree bound must be >= 1");
  auto fail = [](std::string what) { return AxiomReport{false, std::move(what)}; };
  auto mono_name = [](int a, int b) {
    std::ostringstream os;
    os << "g^" << a << " x^" << b;
    return os.str();
  };
  const HopfElt one = HopfElt::unit(p);
  for (int a = 0; a < p.n; ++a) {
    for (int b = 0; b <= degree_bound; ++b) {
      HopfElt h = HopfElt::monomial(p, a, b);
      TensorElt d = h_coproduct(h);
      if (d.coproduct_leg(0) != d.coproduct_leg(1))
        return fail("coassociativity fails at " + mono_name(a, b));
      TensorElt wrapped = TensorElt::outer({h});
      if (d.counit_leg(0) != wrapped || d.counit_leg(1) != wrapped)
        return fail("counit law fails at " + mono_name(a, b));
      HopfElt target = one.scaled(h_counit(h));
      if (d.antipode_leg(0, antipode).merge_legs(0).to_elt() != target)
        return fail("left antipode law fails at " + mono_name(a, b));
      if (d.antipode_leg(1, antipode).merge_legs(0).to_elt() != target)
        return fail("right antipode law fails at " + mono_name(a, b));
    }
  }
  // Delta and eps are algebra maps on products of the generators.
  std::vector<HopfElt> gens = {HopfElt::gen_g(p), HopfElt::gen_x(p)};
  for (const HopfElt& u : gens) {
    for (const HopfElt& v : gens) {
      if (h_coproduct(u * v) != h_coproduct(u) * h_coproduct(v))
        return fail("coproduct is not an algebra map on generators");
      if (h_counit(u * v) != h_counit(u) * h_counit(v))
        return fail("counit is not an algebra map on generators");
    }
  }
  return AxiomReport{};
}

}  // namespace taftyd
