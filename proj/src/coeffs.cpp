#include "taftyd/coeffs.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace taftyd {

namespace {

// Pascal tables per (order, q), grown on demand; the recurrence is
// binom(kk,pp) = binom(kk-1,pp) + q^{kk-pp} binom(kk-1,pp-1) and needs no
// division, so the memo is exact.
class QbinomCache {
 public:
  static Cyclo get(int k, int p, const Cyclo& q) {
    static QbinomCache cache;
    std::lock_guard<std::mutex> lock(cache.mu_);
    Table& t = cache.map_[Key{q.order(), q.coeffs()}];
    int n = q.order();
    if (t.qp.empty()) {
      t.qp.push_back(Cyclo::one(n));
      t.rows.push_back({Cyclo::one(n)});
    }
    while (static_cast<int>(t.rows.size()) <= k) {
      int kk = static_cast<int>(t.rows.size());
      t.qp.push_back(t.qp.back() * q);
      const std::vector<Cyclo>& prev = t.rows.back();
      std::vector<Cyclo> row(kk + 1, Cyclo::zero(n));
      row[0] = Cyclo::one(n);
      for (int pp = 1; pp < kk; ++pp)
        row[pp] = prev[pp] + t.qp[kk - pp] * prev[pp - 1];
      row[kk] = Cyclo::one(n);
      t.rows.push_back(std::move(row));
    }
    return t.rows[k][p];
  }

 private:
  using Key = std::pair<int, std::vector<Rat>>;
  struct Table {
    std::vector<Cyclo> qp;                // q^0 .. q^{kmax}
    std::vector<std::vector<Cyclo>> rows;
  };

  std::mutex mu_;
  std::map<Key, Table> map_;
};

}  // namespace

Cyclo qbinom(int k, int p, const Cyclo& q) {
  if (k < 0) throw std::invalid_argument("qbinom: k must be >= 0");
  int n = q.order();
  if (n == 0) throw std::invalid_argument("qbinom: q carries no cyclotomic order");
  if (p < 0 || p > k) return Cyclo::zero(n);
  return QbinomCache::get(k, p, q);
}

int phi(int i, int N) {
  if (N < 1) throw std::invalid_argument("phi: N must be >= 1");
  int r = ((i % N) + N) % N;
  return r == 0 ? N : r;
}

CoeffContext::CoeffContext(TaftParams p, int i, int j, std::optional<int> i1)
    : p_(p), i_(((i % p.n) + p.n) % p.n), j_(((j % p.N()) + p.N()) % p.N()), i1_(i1) {}

CoeffContext CoeffContext::general(TaftParams p, int i, int j) {
  return CoeffContext(p, i, j, std::nullopt);
}

CoeffContext CoeffContext::t_multiple(TaftParams p, int i1, int j) {
  int N = p.N();
  int i1r = ((i1 % N) + N) % N;
  return CoeffContext(p, p.t * i1r, j, i1r);
}

int CoeffContext::i1() const {
  if (!i1_) throw std::logic_error("CoeffContext: no factor stored (general context)");
  return *i1_;
}

Cyclo coeff_R(const CoeffContext& ctx, int k, int l, RVariant variant) {
  if (l < 0 || l > k) throw std::out_of_range("coeff_R: need 0 <= l <= k");
  const TaftParams& p = ctx.params();
  if (l == k) return Cyclo::one(p.n);
  if (variant == RVariant::t_multiple) {
    return ctx.params().w(ctx.j() - l) - ctx.params().w(k - 1 - ctx.i1());
  }
  return p.xi(static_cast<long long>(p.t) * (ctx.j() - l)) -
         p.xi(static_cast<long long>(p.t) * (k - 1) - ctx.i());
}

namespace {

// Per-context triangles of the defining recursion, grown row by row and
// shared across calls; the values are exactly the ones a fresh row fill
// would produce.
class LambdaCache {
 public:
  static const Cyclo& get(const CoeffContext& ctx, int k, int l) {
    static LambdaCache cache;
    std::lock_guard<std::mutex> lock(cache.mu_);
    auto& rows =
        cache.map_[Key{ctx.params().n, ctx.params().t, ctx.i(), ctx.j()}];
    int n = ctx.params().n;
    if (rows.empty()) rows.push_back({Cyclo::one(n)});  // lambda(0,0) = 1
    while (static_cast<int>(rows.size()) <= k) {
      int kk = static_cast<int>(rows.size());
      const std::vector<Cyclo>& prev = rows.back();
      std::vector<Cyclo> next(kk + 1, Cyclo::zero(n));
      next[0] = coeff_R(ctx, kk, 0) * prev[0];
      for (int ll = 1; ll < kk; ++ll)
        next[ll] = coeff_R(ctx, kk, ll) * prev[ll] + prev[ll - 1];
      next[kk] = Cyclo::one(n);
      rows.push_back(std::move(next));
    }
    return rows[k][l];
  }

 private:
  using Key = std::tuple<int, int, int, int>;

  std::mutex mu_;
  std::map<Key, std::vector<std::vector<Cyclo>>> map_;
};

}  // namespace

Cyclo lambda_rec(const CoeffContext& ctx, int k, int l) {
  if (l < 0 || l > k) throw std::out_of_range("lambda_rec: need 0 <= l <= k");
  return LambdaCache::get(ctx, k, l);
}

Cyclo lambda_closed(const CoeffContext& ctx, int k, int p) {
  if (p < 0 || p > k) throw std::out_of_range("lambda_closed: need 0 <= p <= k");
  const TaftParams& tp = ctx.params();
  Cyclo val = qbinom(k, p, tp.w()) *
              tp.xi(-static_cast<long long>(tp.t) * (k - p) * p);
  for (int l = p + 1; l <= k; ++l) val *= coeff_R(ctx, l, 0);
  return val;
}

namespace {

HopfElt c_monomial(const CoeffContext& ctx, int k, int l, const Cyclo& lam) {
  // lambda x^{k-l} g^{i-kt}, normalized into the g-left basis via
  // x^b g^c = xi^{bc} g^c x^b.
  const TaftParams& p = ctx.params();
  long long c = static_cast<long long>(ctx.i()) - static_cast<long long>(k) * p.t;
  HopfElt h(p);
  h.add_term(ctx.i() - k * p.t, k - l, lam * p.xi(static_cast<long long>(k - l) * c));
  return h;
}

// Verified triangle of c_j^i(k,l) per context, grown row by row.  Each new
// row is produced by the defining antipode recursion and compared against
// the closed monomial form before it is published.
class CTriangleCache {
 public:
  static const HopfElt& get(const CoeffContext& ctx, int k, int l) {
    static CTriangleCache cache;
    std::lock_guard<std::mutex> lock(cache.mu_);
    auto& rows = cache.map_[Key{ctx.params().n, ctx.params().t, ctx.i(), ctx.j()}];
    cache.extend(ctx, rows, k);
    return rows[k][l];
  }

 private:
  using Key = std::tuple<int, int, int, int>;

  void extend(const CoeffContext& ctx, std::vector<std::vector<HopfElt>>& rows, int k) {
    const TaftParams& p = ctx.params();
    if (rows.empty()) rows.push_back({HopfElt::monomial(p, ctx.i(), 0)});
    HopfElt sx = h_antipode(HopfElt::gen_x(p));
    HopfElt sgt = h_antipode(HopfElt::monomial(p, p.t, 0));
    HopfElt x = HopfElt::gen_x(p);
    while (static_cast<int>(rows.size()) <= k) {
      int kk = static_cast<int>(rows.size()) - 1;  // new row index kk+1
      const auto& prev = rows[kk];
      std::vector<HopfElt> next(kk + 2, HopfElt::zero(p));
      next[0] = prev[0] * sx +
                (x * prev[0] * sgt).scaled(p.xi(static_cast<long long>(p.t) * ctx.j()));
      for (int l = 1; l < kk + 1; ++l) {
        next[l] = prev[l] * sx +
                  (x * prev[l] * sgt)
                      .scaled(p.xi(static_cast<long long>(p.t) * (ctx.j() - l))) +
                  prev[l - 1] * sgt;
      }
      next[kk + 1] = prev[kk] * sgt;
      for (int l = 0; l <= kk + 1; ++l) {
        HopfElt closed = c_monomial(ctx, kk + 1, l, lambda_rec(ctx, kk + 1, l));
        if (next[l] != closed) {
          std::ostringstream os;
          os << "coefficient cross-check failed at (k=" << kk + 1 << ", l=" << l
             << "), context i=" << ctx.i() << " j=" << ctx.j() << " over n="
             << p.n << " t=" << p.t << ": recursion gives " << next[l].str()
             << " but closed form gives " << closed.str();
          throw std::logic_error(os.str());
        }
      }
      rows.push_back(std::move(next));
    }
  }

  std::mutex mu_;
  std::map<Key, std::vector<std::vector<HopfElt>>> map_;
};

}  // namespace

HopfElt c_coeff(const CoeffContext& ctx, int k, int l) {
  if (l < 0 || l > k) throw std::out_of_range("c_coeff: need 0 <= l <= k");
  return CTriangleCache::get(ctx, k, l);
}

Comatrix::Comatrix(CoeffContext ctx, int p) : ctx_(std::move(ctx)), size_(p + 1) {
  if (p < 0) throw std::invalid_argument("Comatrix: need p >= 0");
  entries_.assign(static_cast<size_t>(size_) * size_, HopfElt::zero(ctx_.params()));
  for (int k = 0; k < size_; ++k)
    for (int l = 0; l <= k; ++l)
      entries_[static_cast<size_t>(k) * size_ + l] = c_coeff(ctx_, k, l);
}

const HopfElt& Comatrix::entry(int k, int l) const {
  if (k < 0 || k >= size_ || l < 0 || l >= size_)
    throw std::out_of_range("Comatrix: entry index out of range");
  return entries_[static_cast<size_t>(k) * size_ + l];
}

Comatrix Comatrix::with_entry(int k, int l, HopfElt e) const {
  Comatrix copy = *this;
  if (k < 0 || k >= size_ || l < 0 || l >= size_)
    throw std::out_of_range("Comatrix: entry index out of range");
  copy.entries_[static_cast<size_t>(k) * size_ + l] = std::move(e);
  return copy;
}

std::string Comatrix::str() const {
  std::vector<std::string> cells(static_cast<size_t>(size_) * size_);
  std::vector<size_t> width(size_, 0);
  for (int k = 0; k < size_; ++k)
    for (int l = 0; l < size_; ++l) {
      std::string s = entry(k, l).str();
      width[l] = std::max(width[l], s.size());
      cells[static_cast<size_t>(k) * size_ + l] = std::move(s);
    }
  std::ostringstream os;
  for (int k = 0; k < size_; ++k) {
    os << "[ ";
    for (int l = 0; l < size_; ++l) {
      const std::string& s = cells[static_cast<size_t>(k) * size_ + l];
      os << s << std::string(width[l] - s.size() + (l + 1 < size_ ? 2 : 0), ' ');
    }
    os << "]\n";
  }
  return os.str();
}

Comatrix build_comatrix(const CoeffContext& ctx, int p) { return Comatrix(ctx, p); }

ComatrixReport verify_comatrix(const Comatrix& m) {
  const CoeffContext& ctx = m.context();
  const TaftParams& p = ctx.params();
  auto fail = [](std::string s) { return ComatrixReport{false, std::move(s)}; };
  int sz = m.size();
  // Counit law.
  for (int k = 0; k < sz; ++k)
    for (int l = 0; l < sz; ++l) {
      Cyclo want = k == l ? Cyclo::one(p.n) : Cyclo::zero(p.n);
      if (h_counit(m.entry(k, l)) != want) {
        std::ostringstream os;
        os << "counit law fails at (" << k << ", " << l << ")";
        return fail(os.str());
      }
    }
  // Coproduct law.
  for (int k = 0; k < sz; ++k)
    for (int l = 0; l < sz; ++l) {
      TensorElt lhs = h_coproduct(m.entry(k, l));
      TensorElt rhs(p, 2);
      for (int s = 0; s < sz; ++s) {
        TensorElt prod = TensorElt::outer({m.entry(k, s), m.entry(s, l)});
        for (const auto& [key, c] : prod.terms()) rhs.add_term(key, c);
      }
      if (lhs != rhs) {
        std::ostringstream os;
        os << "coproduct law fails at (" << k << ", " << l << ")";
        return fail(os.str());
      }
    }
  // Scalar criterion on the coefficients read off the entries.
  std::vector<Cyclo> lam(static_cast<size_t>(sz) * sz, Cyclo::zero(p.n));
  for (int k = 0; k < sz; ++k)
    for (int l = 0; l <= k; ++l) {
      const HopfElt& e = m.entry(k, l);
      if (e.is_zero()) continue;
      GX want{((ctx.i() - k * p.t) % p.n + p.n) % p.n, k - l};
      if (e.terms().size() != 1 || e.terms().begin()->first != want) {
        std::ostringstream os;
        os << "entry (" << k << ", " << l << ") is not a multiple of x^" << k - l
           << " g^" << want.a;
        return fail(os.str());
      }
      // Stored coefficient carries the basis twist xi^{(k-l)(i-kt)}; peel it
      // off to recover lambda itself.
      long long c = static_cast<long long>(ctx.i()) - static_cast<long long>(k) * p.t;
      lam[static_cast<size_t>(k) * sz + l] =
          e.terms().begin()->second * p.xi(-static_cast<long long>(k - l) * c);
    }
  for (int k = 0; k < sz; ++k)
    for (int l = 0; l <= k; ++l)
      for (int s = l; s <= k; ++s) {
        Cyclo lhs = lam[static_cast<size_t>(k) * sz + s] * lam[static_cast<size_t>(s) * sz + l];
        Cyclo rhs = qbinom(k - l, s - l, p.w()) *
                    p.xi(-static_cast<long long>(p.t) * (k - s) * (s - l)) *
                    lam[static_cast<size_t>(k) * sz + l];
        if (lhs != rhs) {
          std::ostringstream os;
          os << "scalar criterion fails at (k=" << k << ", l=" << l << ", s=" << s << ")";
          return fail(os.str());
        }
      }
  return ComatrixReport{};
}

BlockReport block_decompose(const CoeffContext& ctx, int p) {
  if (!ctx.has_factor())
    throw std::invalid_argument("block_decompose: context must be a t-multiple");
  if (p < 1) throw std::invalid_argument("block_decompose: need p >= 1");
  const TaftParams& tp = ctx.params();
  int N = tp.N();
  BlockReport rep;
  rep.m = N - phi(-(ctx.i1() + ctx.j()), N);
  int m = rep.m;
  auto fail = [&rep](std::string s) {
    rep.ok = false;
    rep.failure = std::move(s);
    return rep;
  };
  // Nonvanishing on the leading triangle, vanishing below it.
  for (int k = 0; k <= p * N - 1; ++k)
    for (int l = 0; l <= std::min(k, m); ++l) {
      bool zero = lambda_rec(ctx, k, l).is_zero();
      if (k <= m && zero) {
        std::ostringstream os;
        os << "lambda(" << k << ", " << l << ") vanishes inside the leading block";
        return fail(os.str());
      }
      if (k > m && !zero) {
        std::ostringstream os;
        os << "lambda(" << k << ", " << l << ") nonzero below the leading block";
        return fail(os.str());
      }
    }
  // Two diagonal bars of sizes m+1 and N-m-1.  Off-bar entries vanish by the
  // lambda scan above and the leading corner trivially equals itself, so the
  // Hopf-level comparison that remains is the tail block against its own
  // comatrix.  References returned by c_coeff stay valid across later calls:
  // the cache only ever appends rows.
  CoeffContext tail_ctx =
      CoeffContext::t_multiple(tp, ctx.i1() - (m + 1), ctx.j() - (m + 1));
  for (int k = m + 1; k < N; ++k)
    for (int l = m + 1; l <= k; ++l) {
      if (c_coeff(ctx, k, l) != c_coeff(tail_ctx, k - (m + 1), l - (m + 1))) {
        std::ostringstream os;
        os << "size-" << N << " matrix does not split at (" << k << ", " << l << ")";
        return fail(os.str());
      }
    }
  // p identical copies along the diagonal.  Entry (k, l) is
  // lambda(k, l) x^{k-l} g^{i-kt}; in-block pairs share the x-exponent
  // (k - l is unchanged by shifting both indices N) and the g-exponent
  // (n divides N t), so copy equality is exactly lambda-level equality,
  // checked here on the scalar triangle the scan above already extended.
  if (N * tp.t % tp.n != 0)
    throw std::logic_error("block_decompose: N t should vanish mod n");
  for (int k = N; k < p * N; ++k)
    for (int l = 0; l <= k; ++l) {
      bool match = k / N == l / N
                       ? lambda_rec(ctx, k, l) == lambda_rec(ctx, k % N, l % N)
                       : lambda_rec(ctx, k, l).is_zero();
      if (!match) {
        std::ostringstream os;
        os << "size-" << p * N << " matrix is not " << p << " copies at (" << k
           << ", " << l << ")";
        return fail(os.str());
      }
    }
  for (int c = 0; c < p; ++c) {
    rep.blocks.push_back(BlockDescriptor{c * N, m + 1, ctx.i1(), ctx.j()});
    if (m + 1 < N)
      rep.blocks.push_back(BlockDescriptor{c * N + m + 1, N - m - 1,
                                           tail_ctx.i1(), tail_ctx.j()});
  }
  return rep;
}

}  // namespace taftyd
