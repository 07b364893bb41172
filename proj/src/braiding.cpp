#include "taftyd/braiding.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace taftyd {

namespace {

int imod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

// Action of h on the module: column k is h . v_k.  A monomial g^a x^b shifts
// through the x-matrix first and then scales row r by xi^{a w_r}.
CycMat action_matrix(const YdModule& mod, const HopfElt& h) {
  const TaftParams& p = mod.spec.params;
  int d = mod.dim;
  CycMat out(d, d, p.n);
  int maxb = 0;
  for (const auto& [gx, coef] : h.terms()) maxb = std::max(maxb, gx.b);
  std::vector<CycMat> xpow;
  xpow.push_back(CycMat::identity(d, p.n));
  for (int b = 1; b <= maxb; ++b) xpow.push_back(xpow.back() * mod.x_matrix);
  for (const auto& [gx, coef] : h.terms()) {
    const CycMat& xb = xpow[static_cast<size_t>(gx.b)];
    for (int c = 0; c < d; ++c) {
      for (int r = 0; r < d; ++r) {
        const Cyclo& v = xb.at(r, c);
        if (v.is_zero()) continue;
        Cyclo scale =
            p.xi(static_cast<long long>(gx.a) * mod.g_weights[r]);
        out.at(r, c) = out.at(r, c) + coef * scale * v;
      }
    }
  }
  return out;
}

// Nonzero entries of each column, as (row, value) lists.
std::vector<std::vector<std::pair<int, Cyclo>>> sparse_cols(const CycMat& m) {
  std::vector<std::vector<std::pair<int, Cyclo>>> cols(m.cols());
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r)
      if (!m.at(r, c).is_zero()) cols[c].emplace_back(r, m.at(r, c));
  return cols;
}

}  // namespace

BraidingOperator braiding_operator(const YdModule& m) {
  const TaftParams& p = m.spec.params;
  int d = m.dim;
  CycMat c(d * d, d * d, p.n);
  for (int pp = 0; pp < d; ++pp) {
    for (const auto& [h, l] : m.coaction_rows[pp]) {
      CycMat a = action_matrix(m, h);
      for (int k = 0; k < d; ++k) {
        for (int r = 0; r < d; ++r) {
          const Cyclo& v = a.at(r, k);
          if (v.is_zero()) continue;
          Cyclo& slot = c.at(r * d + l, pp * d + k);
          slot = slot + v;
        }
      }
    }
  }
  return BraidingOperator{m, d, c, m.truncated};
}

CycMat yang_baxter_residual(const BraidingOperator& b) {
  int d = b.dim;
  int dd = d * d * d;
  auto cols = sparse_cols(b.matrix);
  // Applies c to slots (s, s+1) of a word vector, s in {0, 1}.
  auto apply = [&](const std::vector<Cyclo>& v, int s) {
    std::vector<Cyclo> out(static_cast<size_t>(dd), Cyclo::zero(b.matrix.order()));
    for (int idx = 0; idx < dd; ++idx) {
      if (v[idx].is_zero()) continue;
      int a0 = idx / (d * d), a1 = (idx / d) % d, a2 = idx % d;
      int pair = (s == 0) ? a0 * d + a1 : a1 * d + a2;
      for (const auto& [row, coef] : cols[pair]) {
        int r = row / d, l = row % d;
        int oidx = (s == 0) ? (r * d + l) * d + a2 : a0 * d * d + r * d + l;
        out[oidx] = out[oidx] + coef * v[idx];
      }
    }
    return out;
  };
  CycMat res(dd, dd, b.matrix.order());
  for (int col = 0; col < dd; ++col) {
    std::vector<Cyclo> e(static_cast<size_t>(dd), Cyclo::zero(b.matrix.order()));
    e[col] = Cyclo::one(b.matrix.order());
    std::vector<Cyclo> lhs = apply(apply(apply(e, 0), 1), 0);
    std::vector<Cyclo> rhs = apply(apply(apply(e, 1), 0), 1);
    for (int r = 0; r < dd; ++r) res.at(r, col) = lhs[r] - rhs[r];
  }
  return res;
}

bool yang_baxter_check(const BraidingOperator& b) {
  int d = b.dim;
  int dd = d * d * d;
  int n = b.matrix.order();
  auto cols = sparse_cols(b.matrix);
  // Sparse word vectors indexed by the dim^3 basis.
  using Sparse = std::map<int, Cyclo>;
  auto apply = [&](const Sparse& v, int s) {
    Sparse out;
    for (const auto& [idx, val] : v) {
      int a0 = idx / (d * d), a1 = (idx / d) % d, a2 = idx % d;
      int pair = (s == 0) ? a0 * d + a1 : a1 * d + a2;
      for (const auto& [row, coef] : cols[pair]) {
        int r = row / d, l = row % d;
        int oidx = (s == 0) ? (r * d + l) * d + a2 : a0 * d * d + r * d + l;
        auto [it, fresh] = out.try_emplace(oidx, Cyclo::zero(n));
        it->second += coef * val;
      }
    }
    return out;
  };
  for (int col = 0; col < dd; ++col) {
    Sparse e{{col, Cyclo::one(n)}};
    Sparse lhs = apply(apply(apply(e, 0), 1), 0);
    for (const auto& [idx, val] : apply(apply(apply(e, 1), 0), 1)) {
      auto [it, fresh] = lhs.try_emplace(idx, Cyclo::zero(n));
      it->second -= val;
    }
    for (const auto& [idx, val] : lhs) {
      if (!val.is_zero()) return false;
    }
  }
  return true;
}

bool triangularity_check(const BraidingOperator& b) {
  int d = b.dim;
  for (int pp = 0; pp < d; ++pp) {
    for (int k = 0; k < d; ++k) {
      for (int row = 0; row < d * d; ++row) {
        if (b.matrix.at(row, pp * d + k).is_zero()) continue;
        int a = row / d, l = row % d;
        if (a == k && l == pp) continue;  // flip term
        if (l >= pp) return false;
      }
    }
  }
  return true;
}

Cyclo f_beta(const TaftParams& p, int i, int j, int k, int l) {
  if (l < 0 || l > k) throw std::invalid_argument("f_beta needs 0 <= l <= k");
  if (l == k) return Cyclo::one(p.n);
  Cyclo b = qbinom(k, l, p.w());
  for (int s = l; s < k; ++s)
    b = b * (p.w(-static_cast<long long>(i)) - p.w(j - static_cast<long long>(s)));
  return b;
}

BraidingOperator f_module_braiding(const TaftParams& p, int i, int j) {
  int N = p.N();
  int r = phi(imod(static_cast<long long>(i) + j + 1, N), N) - 1;
  int d = r + 1;
  YdModule model =
      build_finite_module(p, imod(i, p.n), imod(j, p.n), Cyclo::zero(p.n));
  if (model.dim != d)
    throw std::logic_error("dim F(V_{i,j}) disagrees with dim V(ti,j,0)");
  CycMat c(d * d, d * d, p.n);
  for (int pp = 0; pp < d; ++pp) {
    for (int l = 0; l <= pp; ++l) {
      Cyclo beta = f_beta(p, i, j, pp, l);
      if (beta.is_zero()) continue;
      int a = pp - l;  // x power of the coaction monomial x^a g^{-i+l}
      for (int k = 0; k + a <= r; ++k) {
        Cyclo coef =
            beta * p.w(static_cast<long long>(l - i) * (k - j));
        for (int s = k; s < k + a; ++s) coef = coef * (-p.w(s - static_cast<long long>(j)));
        Cyclo& slot = c.at((k + a) * d + l, pp * d + k);
        slot = slot + coef;
      }
    }
  }
  return BraidingOperator{model, d, c, false};
}

bool braided_iso_check(const TaftParams& p, int i, int j) {
  YdModule v = build_finite_module(p, imod(i, p.n), imod(j, p.n), Cyclo::zero(p.n));
  BraidingOperator c1 = braiding_operator(v);
  BraidingOperator c2 = f_module_braiding(p, i, j);
  return c1.dim == c2.dim && c1.matrix == c2.matrix;
}

std::pair<DiagonalBraidingData, DynkinDiagram2> reduce_to_diagonal(
    const TaftParams& p, int i, int j) {
  int N = p.N();
  if (N < 2)
    throw std::domain_error(
        "reduce_to_diagonal needs N >= 2; the t = 0 braiding is settled by "
        "the classifier");
  DiagonalBraidingData d;
  d.N = N;
  d.w = p.w();
  d.q11 = p.w();
  d.q12 = p.w(-static_cast<long long>(j));
  d.q21 = p.w(-static_cast<long long>(i));
  d.q22 = p.w(static_cast<long long>(imod(i, N)) * imod(j, N));
  DynkinDiagram2 g;
  g.vertex1 = d.q11;
  g.vertex2 = d.q22;
  g.edge = d.q12 * d.q21;
  g.connected = !g.edge.is_one();
  return {d, g};
}

namespace {

std::string w_power_label(const DiagonalBraidingData& d, const Cyclo& v) {
  Cyclo acc = Cyclo::one(d.w.order());
  for (int e = 0; e < d.N; ++e) {
    if (acc == v) {
      if (e == 0) return "1";
      if (e == 1) return "w";
      return "w^" + std::to_string(e);
    }
    acc = acc * d.w;
  }
  throw std::logic_error("diagram label is not a power of w");
}

}  // namespace

std::string dynkin_text(const DiagonalBraidingData& d, const DynkinDiagram2& g) {
  std::string v1 = "(" + w_power_label(d, g.vertex1) + ")";
  std::string v2 = "(" + w_power_label(d, g.vertex2) + ")";
  if (!g.connected) return v1 + " " + v2;
  return v1 + " --[" + w_power_label(d, g.edge) + "]-- " + v2;
}

const char* reason_name(NicholsReason r) {
  switch (r) {
    case NicholsReason::T_ZERO: return "T_ZERO";
    case NicholsReason::LAMBDA_NONZERO: return "LAMBDA_NONZERO";
    case NicholsReason::TABLE_ROW: return "TABLE_ROW";
    case NicholsReason::NO_TABLE_MATCH: return "NO_TABLE_MATCH";
    case NicholsReason::IJ_ZERO: return "IJ_ZERO";
  }
  return "?";
}

namespace {

int mm(long long v, int N) { return imod(v, N); }

struct TableRow {
  int dim;
  bool (*match)(int N, int i);
  const char* condition;
  std::vector<std::pair<int, int>> tags;
};

// Row conditions of the six finite-type tables; i is already reduced into
// {0, ..., N-1} and d = dim V(ti,j,0) selects the table.
const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {1, [](int N, int i) { return N >= 2 && mm(1LL * i * i, N) != 0; },
       "i^2 != 0 (mod N)", {{1, 1}}},

      {2, [](int N, int i) { return mm(1LL * i * (1 - i), N) == mm(1, N); },
       "i(1-i) = 1 (mod N)", {{2, 1}}},
      {2, [](int N, int i) {
         return N % 2 == 0 && N / 2 >= 2 && mm(1LL * i * (1 - i), N) == N / 2;
       },
       "N = 2k, k >= 2, i(1-i) = k (mod N)", {{3, 1}}},
      {2, [](int N, int i) {
         return N % 2 == 1 && N >= 3 &&
                mm(1LL * i * (1 - i), N) == (N - 1) / 2 + 1;
       },
       "N = 2k+1, k >= 1, i(1-i) = k+1 (mod N)", {{4, 1}}},
      {2, [](int N, int i) {
         return N % 3 == 0 && N / 3 >= 2 &&
                (mm(1LL * i * (1 - i), N) == N / 3 ||
                 mm(1LL * i * (1 - i), N) == 2 * (N / 3));
       },
       "N = 3k, k >= 2, i(1-i) = k or 2k (mod N)", {{6, 1}, {6, 2}}},
      {2, [](int N, int i) {
         return N % 3 == 1 && N >= 4 &&
                mm(1LL * i * (1 - i), N) == 2 * ((N - 1) / 3) + 1;
       },
       "N = 3k+1, k >= 1, i(1-i) = 2k+1 (mod N)", {{11, 1}}},
      {2, [](int N, int i) {
         return N % 3 == 2 && N >= 5 &&
                mm(1LL * i * (1 - i), N) == (N - 2) / 3 + 1;
       },
       "N = 3k+2, k >= 1, i(1-i) = k+1 (mod N)", {{11, 1}}},
      {2, [](int N, int i) { return N == 8 && (i == 2 || i == 7); },
       "N = 8, i = 2 or 7 (mod 8)", {{12, 1}}},
      {2, [](int N, int i) {
         return N == 24 && (i == 3 || i == 6 || i == 19 || i == 22);
       },
       "N = 24, i = 3, 6, 19 or 22 (mod 24)", {{13, 2}}},
      {2, [](int N, int i) {
         return N == 30 && (i == 4 || i == 7 || i == 9 || i == 12 || i == 19 ||
                            i == 22 || i == 24 || i == 27);
       },
       "N = 30, i = 4, 7, 9, 12, 19, 22, 24 or 27 (mod 30)", {{16, 2}}},

      {3, [](int N, int i) { return N >= 3 && mm(1LL * i * (2 - i), N) == mm(2, N); },
       "N >= 3, i(2-i) = 2 (mod N)", {{4, 1}}},
      {3, [](int N, int i) {
         return N % 2 == 0 && N / 2 >= 3 && mm(1LL * i * (2 - i), N) == N / 2;
       },
       "N = 2k, k >= 3, i(2-i) = k (mod N)", {{5, 1}, {5, 2}}},
      {3, [](int N, int i) { return N == 18 && (i == 6 || i == 14); },
       "N = 18, i = 6 or 14 (mod 18)", {{10, 1}}},

      {4, [](int N, int i) { return N == 12 && (i == 6 || i == 9); },
       "N = 12, i = 6 or 9 (mod 12)", {{9, 3}}},
      {4, [](int N, int i) { return N >= 4 && mm(1LL * i * (3 - i), N) == mm(3, N); },
       "N >= 4, i(3-i) = 3 (mod N)", {{11, 1}}},
      {4, [](int N, int i) { return N == 8 && (i == 4 || i == 7); },
       "N = 8, i = 4 or 7 (mod 8)", {{12, 3}}},
      {4, [](int N, int i) {
         return N == 20 && (i == 5 || i == 10 || i == 13 || i == 18);
       },
       "N = 20, i = 5, 10, 13 or 18 (mod 20)", {{15, 1}, {15, 2}}},
      {4, [](int N, int i) {
         return N == 30 && (i == 5 || i == 8 || i == 10 || i == 13 || i == 20 ||
                            i == 23 || i == 25 || i == 28);
       },
       "N = 30, i = 5, 8, 10, 13, 20, 23, 25 or 28 (mod 30)", {{16, 1}}},

      {5, [](int N, int i) { return N == 18 && (i == 9 || i == 13); },
       "N = 18, i = 9 or 13 (mod 18)", {{10, 3}}},
      {5, [](int N, int i) { return N == 10 && (i == 5 || i == 9); },
       "N = 10, i = 5 or 9 (mod 10)", {{14, 2}}},

      {6, [](int N, int i) {
         return N == 24 && (i == 9 || i == 12 || i == 17 || i == 20);
       },
       "N = 24, i = 9, 12, 17 or 20 (mod 24)", {{13, 4}}},
  };
  return rows;
}

}  // namespace

NicholsVerdict classify_nichols(const TaftParams& p, int i1, int j,
                                const Cyclo& lambda) {
  NicholsVerdict v;
  if (p.t == 0) {
    v.finite = false;
    v.reason = NicholsReason::T_ZERO;
    v.dim_module = lambda.is_zero() ? 1 : p.n;
    return v;
  }
  if (!lambda.is_zero()) {
    v.finite = false;
    v.reason = NicholsReason::LAMBDA_NONZERO;
    v.dim_module = p.n;
    return v;
  }
  int N = p.N();
  int iN = imod(i1, N);
  int jN = imod(j, N);
  v.dim_module = N - phi(-(iN + jN), N) + 1;
  if (mm(1LL * iN * jN, N) == 0) {
    v.finite = false;
    v.reason = NicholsReason::IJ_ZERO;
    return v;
  }
  for (const TableRow& row : table_rows()) {
    if (row.dim != v.dim_module || !row.match(N, iN)) continue;
    v.table_conditions.push_back(row.condition);
    for (const auto& tag : row.tags) v.tags.push_back(tag);
  }
  if (v.tags.empty()) {
    v.finite = false;
    v.reason = NicholsReason::NO_TABLE_MATCH;
  } else {
    v.finite = true;
    v.reason = NicholsReason::TABLE_ROW;
  }
  return v;
}

}  // namespace taftyd
