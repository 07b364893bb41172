#include "taftyd/nichols.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace taftyd {

namespace {

// Hard cap on permutation-walk work (nodes * vector length * fanout); the
// recursive route has no comparable blowup and should be used beyond it.
constexpr long long kPermWorkCap = 200'000'000;

long long checked_pow(long long base, int exp, long long cap) {
  long long v = 1;
  for (int s = 0; s < exp; ++s) {
    if (v > cap / base) return -1;
    v *= base;
    if (v > cap) return -1;
  }
  return v;
}

long long factorial_capped(int m, long long cap) {
  long long f = 1;
  for (int k = 2; k <= m; ++k) {
    if (f > cap / k) return -1;
    f *= k;
  }
  return f;
}

void check_operator(const BraidingOperator& b, int m) {
  if (m < 1) {
    throw std::invalid_argument("symmetrizer degree must be at least 1");
  }
  if (b.approximate) {
    throw std::invalid_argument(
        "symmetrizer refused on a truncated (approximate) braiding");
  }
  if (b.dim < 1) {
    throw std::invalid_argument("braiding operator has empty module");
  }
}

long long tensor_dim_or_throw(int dim, int m, long long budget) {
  long long D = checked_pow(dim, m, budget);
  if (D < 0) {
    throw std::length_error("tensor word count dim^m exceeds the budget");
  }
  return D;
}

std::vector<std::vector<std::pair<int, Cyclo>>> sparse_cols(const CycMat& m) {
  std::vector<std::vector<std::pair<int, Cyclo>>> cols(m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    for (int r = 0; r < m.rows(); ++r) {
      if (!m.at(r, c).is_zero()) {
        cols[c].emplace_back(r, m.at(r, c));
      }
    }
  }
  return cols;
}

// Weak left order on S_m as a forest: level r holds the permutations of
// length r, each recorded as (parent index in level r-1, generator k) with
// sigma = s_k . parent.  Lifting along tree edges applies each braiding
// exactly once per permutation.
struct PermTree {
  std::vector<std::vector<std::pair<int, int>>> levels;
};

PermTree build_perm_tree(int m) {
  PermTree tree;
  tree.levels.push_back({{-1, -1}});
  std::vector<std::vector<int>> cur;
  std::vector<int> ident(m);
  std::iota(ident.begin(), ident.end(), 0);
  cur.push_back(ident);
  while (true) {
    std::vector<std::vector<int>> next;
    std::vector<std::pair<int, int>> level;
    std::map<std::vector<int>, int> seen;
    for (int pi = 0; pi < static_cast<int>(cur.size()); ++pi) {
      const std::vector<int>& sigma = cur[pi];
      for (int k = 0; k + 1 < m; ++k) {
        // Left multiplication by s_k swaps the values k, k+1; the length
        // grows exactly when k currently sits left of k+1.
        int pos_k = -1;
        int pos_k1 = -1;
        for (int pos = 0; pos < m; ++pos) {
          if (sigma[pos] == k) pos_k = pos;
          if (sigma[pos] == k + 1) pos_k1 = pos;
        }
        if (pos_k > pos_k1) continue;
        std::vector<int> moved = sigma;
        std::swap(moved[pos_k], moved[pos_k1]);
        if (seen.count(moved)) continue;
        seen.emplace(moved, static_cast<int>(level.size()));
        level.emplace_back(pi, k);
        next.push_back(std::move(moved));
      }
    }
    if (level.empty()) break;
    tree.levels.push_back(std::move(level));
    cur = std::move(next);
  }
  return tree;
}

// out += c_slot . v on the m-fold tensor power, with cols the sparse columns
// of the two-slot braiding matrix (column a*d + b, row r*d + l).
void apply_braiding_slot(
    const std::vector<std::vector<std::pair<int, Cyclo>>>& cols,
    const std::vector<Cyclo>& v, std::vector<Cyclo>& out, int d, int m,
    int slot) {
  long long stride = 1;
  for (int s = m - 2 - slot; s > 0; --s) stride *= d;
  const long long pair_stride = stride * d;
  for (long long idx = 0; idx < static_cast<long long>(v.size()); ++idx) {
    if (v[idx].is_zero()) continue;
    const int a = static_cast<int>((idx / pair_stride) % d);
    const int b = static_cast<int>((idx / stride) % d);
    const long long base = idx - a * pair_stride - b * stride;
    for (const auto& [row, coef] : cols[a * d + b]) {
      const int r = row / d;
      const int l = row % d;
      out[base + r * pair_stride + l * stride] += coef * v[idx];
    }
  }
}

// S_m . e_col accumulated into out (length dim^m), walking the weak order
// once and lifting along tree edges.
void permsum_column(const std::vector<std::vector<std::pair<int, Cyclo>>>& cols,
                    const PermTree& tree, int d, int m, long long D,
                    long long col, int order, std::vector<Cyclo>& out) {
  std::vector<std::vector<Cyclo>> prev;
  {
    std::vector<Cyclo> e(D, Cyclo::zero(order));
    e[col] = Cyclo::one(order);
    prev.push_back(std::move(e));
  }
  for (long long r = 0; r < D; ++r) out[r] += prev[0][r];
  for (size_t lvl = 1; lvl < tree.levels.size(); ++lvl) {
    std::vector<std::vector<Cyclo>> cur;
    cur.reserve(tree.levels[lvl].size());
    for (const auto& [parent, k] : tree.levels[lvl]) {
      std::vector<Cyclo> w(D, Cyclo::zero(order));
      apply_braiding_slot(cols, prev[parent], w, d, m, k);
      for (long long r = 0; r < D; ++r) out[r] += w[r];
      cur.push_back(std::move(w));
    }
    prev = std::move(cur);
  }
}

void check_perm_work(int m, long long D, int dim, long long columns) {
  long long fact = factorial_capped(m, kPermWorkCap);
  if (fact < 0) {
    throw std::length_error(
        "permutation count overflows the work cap; use the recursive route");
  }
  // Each tree node touches a length-D vector with fanout ~ dim per entry.
  long long per_col = fact;
  for (long long f : {D, static_cast<long long>(dim), columns}) {
    if (per_col > kPermWorkCap / std::max<long long>(f, 1)) {
      throw std::length_error(
          "permutation-sum work exceeds the cap; use the recursive route");
    }
    per_col *= f;
  }
}

struct SparseMat {
  long long rows = 0;
  long long cols = 0;
  std::vector<std::vector<std::pair<long long, Cyclo>>> col_entries;
};

// Module action of a single Hopf monomial coeff * g^a x^b on v_k, using
// x^n = lambda . id to reduce high x powers; the x power matrices have at
// most one nonzero per column, so each call yields at most one term.
struct ActionCache {
  const YdModule* mod = nullptr;
  std::vector<CycMat> xpow;
  Cyclo xn_scalar;

  explicit ActionCache(const YdModule& m)
      : mod(&m), xn_scalar(Cyclo::zero(m.spec.params.n)) {
    const int n = m.spec.params.n;
    xpow.reserve(n);
    xpow.push_back(CycMat::identity(m.dim, n));
    for (int b = 1; b < n; ++b) xpow.push_back(xpow.back() * m.x_matrix);
    if (const auto* f = std::get_if<FiniteV>(&m.spec.kind)) {
      xn_scalar = f->lambda;
    }
  }

  void act(const Cyclo& coeff, int a, long long b, int k,
           std::vector<std::pair<int, Cyclo>>& out) const {
    const TaftParams& p = mod->spec.params;
    const long long q = b / p.n;
    const int r = static_cast<int>(b % p.n);
    Cyclo scal = coeff;
    for (long long s = 0; s < q; ++s) {
      if (xn_scalar.is_zero()) return;
      scal = scal * xn_scalar;
    }
    for (int row = 0; row < mod->dim; ++row) {
      const Cyclo& v = xpow[r].at(row, k);
      if (v.is_zero()) continue;
      out.emplace_back(row, scal * v * p.xi(static_cast<long long>(a) *
                                            mod->g_weights[row]));
    }
  }
};

// The (1, m-1) component B_m of the iterated coproduct on basis words:
//   B_m(v_{a_0} ... v_{a_{m-1}})
//     = sum_k (h_{a_0 l_0} ... h_{a_{k-1} l_{k-1}}) . v_{a_k}
//       (x) v_{l_0} ... v_{l_{k-1}} v_{a_{k+1}} ... v_{a_{m-1}},
// summed over coaction rows delta(v_{a_s}) = sum_l h_{a_s l} (x) v_l.  Every
// h factor is a single monomial, so each product term stays one monomial.
SparseMat delta_component(const YdModule& mod, int m) {
  const TaftParams& p = mod.spec.params;
  const int d = mod.dim;
  long long D = 1;
  for (int s = 0; s < m; ++s) D *= d;
  SparseMat B;
  B.rows = D;
  B.cols = D;
  B.col_entries.resize(D);
  ActionCache action(mod);

  struct Prefix {
    HopfElt h;
    std::vector<int> lword;
  };

  std::vector<int> word(m);
  for (long long col = 0; col < D; ++col) {
    long long rest = col;
    for (int s = m - 1; s >= 0; --s) {
      word[s] = static_cast<int>(rest % d);
      rest /= d;
    }
    std::vector<Prefix> prefixes;
    prefixes.push_back({HopfElt::unit(p), {}});
    std::map<long long, Cyclo> acc;
    for (int k = 0; k < m; ++k) {
      // Contribute: the prefix coacts, v_{word[k]} absorbs the Hopf leg, and
      // the output word is (acted index, l-word, untouched suffix).
      long long suffix = 0;
      for (int s = k + 1; s < m; ++s) suffix = suffix * d + word[s];
      long long suffix_span = 1;
      for (int s = k + 1; s < m; ++s) suffix_span *= d;
      for (const Prefix& pre : prefixes) {
        std::vector<std::pair<int, Cyclo>> acted;
        for (const auto& [gx, coef] : pre.h.terms()) {
          action.act(coef, gx.a, gx.b, word[k], acted);
        }
        if (acted.empty()) continue;
        long long mid = 0;
        for (int l : pre.lword) mid = mid * d + l;
        long long mid_span = 1;
        for (size_t s = 0; s < pre.lword.size(); ++s) mid_span *= d;
        for (const auto& [row0, val] : acted) {
          const long long row =
              (row0 * mid_span + mid) * suffix_span + suffix;
          auto it = acc.find(row);
          if (it == acc.end()) {
            acc.emplace(row, val);
          } else {
            it->second += val;
          }
        }
      }
      // Extend: absorb v_{word[k]} into the prefix via its coaction rows.
      if (k + 1 < m) {
        std::vector<Prefix> grown;
        for (const Prefix& pre : prefixes) {
          for (const auto& [h, l] : mod.coaction_rows[word[k]]) {
            Prefix ext;
            ext.h = pre.h * h;
            ext.lword = pre.lword;
            ext.lword.push_back(l);
            grown.push_back(std::move(ext));
          }
        }
        prefixes = std::move(grown);
      }
    }
    for (auto& [row, val] : acc) {
      if (!val.is_zero()) {
        B.col_entries[col].emplace_back(row, std::move(val));
      }
    }
  }
  return B;
}

void check_module(const YdModule& mod, int m) {
  if (m < 0) {
    throw std::invalid_argument("symmetrizer degree must be nonnegative");
  }
  if (mod.truncated) {
    throw std::invalid_argument(
        "symmetrizer refused on a truncated module window");
  }
}

std::vector<int> word_sums(int d, int m, long long D) {
  std::vector<int> sums(D, 0);
  for (long long idx = 0; idx < D; ++idx) {
    long long rest = idx;
    int s = 0;
    while (rest > 0) {
      s += static_cast<int>(rest % d);
      rest /= d;
    }
    sums[idx] = s;
  }
  return sums;
}

}  // namespace

CycMat symmetrizer_permsum(const BraidingOperator& b, int m,
                           long long budget) {
  check_operator(b, m);
  const long long D = tensor_dim_or_throw(b.dim, m, budget);
  check_perm_work(m, D, b.dim, D);
  const int order = b.module.spec.params.n;
  auto cols = sparse_cols(b.matrix);
  PermTree tree = build_perm_tree(m);
  CycMat S(static_cast<int>(D), static_cast<int>(D), order);
  std::vector<Cyclo> out(D, Cyclo::zero(order));
  for (long long col = 0; col < D; ++col) {
    std::fill(out.begin(), out.end(), Cyclo::zero(order));
    permsum_column(cols, tree, b.dim, m, D, col, order, out);
    for (long long r = 0; r < D; ++r) {
      if (!out[r].is_zero()) {
        S.at(static_cast<int>(r), static_cast<int>(col)) = out[r];
      }
    }
  }
  return S;
}

std::vector<Cyclo> symmetrizer_column(const BraidingOperator& b, int m,
                                      long long col, long long budget) {
  check_operator(b, m);
  const long long D = tensor_dim_or_throw(b.dim, m, budget);
  if (col < 0 || col >= D) {
    throw std::invalid_argument("column index outside the tensor power");
  }
  check_perm_work(m, D, b.dim, 1);
  const int order = b.module.spec.params.n;
  auto cols = sparse_cols(b.matrix);
  PermTree tree = build_perm_tree(m);
  std::vector<Cyclo> out(D, Cyclo::zero(order));
  permsum_column(cols, tree, b.dim, m, D, col, order, out);
  return out;
}

CycMat lift_reduced_word(const BraidingOperator& b, int m,
                         const std::vector<int>& word) {
  check_operator(b, m);
  const long long D = tensor_dim_or_throw(b.dim, m, kSymmetrizerBudget);
  for (int k : word) {
    if (k < 0 || k + 1 >= m) {
      throw std::invalid_argument("braiding slot outside 0..m-2");
    }
  }
  const int order = b.module.spec.params.n;
  auto cols = sparse_cols(b.matrix);
  CycMat out = CycMat::identity(static_cast<int>(D), order);
  // Rightmost generator acts first: apply word back to front to columns.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    CycMat next(static_cast<int>(D), static_cast<int>(D), order);
    std::vector<Cyclo> v(D, Cyclo::zero(order));
    std::vector<Cyclo> w(D, Cyclo::zero(order));
    for (long long c = 0; c < D; ++c) {
      for (long long r = 0; r < D; ++r) {
        v[r] = out.at(static_cast<int>(r), static_cast<int>(c));
      }
      std::fill(w.begin(), w.end(), Cyclo::zero(order));
      apply_braiding_slot(cols, v, w, b.dim, m, *it);
      for (long long r = 0; r < D; ++r) {
        if (!w[r].is_zero()) {
          next.at(static_cast<int>(r), static_cast<int>(c)) = w[r];
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

CycMat symmetrizer_recursive(const YdModule& m_module, int m,
                             long long budget) {
  check_module(m_module, m);
  if (m < 1) {
    throw std::invalid_argument("symmetrizer degree must be at least 1");
  }
  tensor_dim_or_throw(m_module.dim, m, budget);
  const int n = m_module.spec.params.n;
  const int d = m_module.dim;
  CycMat S = CycMat::identity(d, n);
  long long Dprev = d;
  for (int deg = 2; deg <= m; ++deg) {
    SparseMat B = delta_component(m_module, deg);
    const long long D = Dprev * d;
    CycMat next(static_cast<int>(D), static_cast<int>(D), n);
    for (long long col = 0; col < D; ++col) {
      for (const auto& [row, val] : B.col_entries[col]) {
        const long long block = row / Dprev;
        const long long rest = row % Dprev;
        for (long long rr = 0; rr < Dprev; ++rr) {
          const Cyclo& sv = S.at(static_cast<int>(rr),
                                 static_cast<int>(rest));
          if (sv.is_zero()) continue;
          next.at(static_cast<int>(block * Dprev + rr),
                  static_cast<int>(col)) += val * sv;
        }
      }
    }
    S = std::move(next);
    Dprev = D;
  }
  return S;
}

long long graded_nichols_dim(const YdModule& m_module, int m,
                             long long budget) {
  check_module(m_module, m);
  if (m == 0) return 1;
  CycMat S = symmetrizer_recursive(m_module, m, budget);
  const long long D = S.rows();
  const std::vector<int> sums = word_sums(m_module.dim, m, D);
  bool preserves = true;
  for (long long c = 0; c < D && preserves; ++c) {
    for (long long r = 0; r < D; ++r) {
      if (!S.at(static_cast<int>(r), static_cast<int>(c)).is_zero() &&
          sums[r] != sums[c]) {
        preserves = false;
        break;
      }
    }
  }
  if (!preserves) return mat_rank(S);
  std::map<int, std::vector<int>> strata;
  for (long long idx = 0; idx < D; ++idx) {
    strata[sums[idx]].push_back(static_cast<int>(idx));
  }
  long long rank = 0;
  const int n = m_module.spec.params.n;
  for (const auto& [sum, idxs] : strata) {
    CycMat sub(static_cast<int>(idxs.size()), static_cast<int>(idxs.size()),
               n);
    for (size_t r = 0; r < idxs.size(); ++r) {
      for (size_t c = 0; c < idxs.size(); ++c) {
        sub.at(static_cast<int>(r), static_cast<int>(c)) =
            S.at(idxs[r], idxs[c]);
      }
    }
    rank += mat_rank(sub);
  }
  return rank;
}

bool index_sum_check(const YdModule& m_module, int m, long long budget) {
  check_module(m_module, m);
  if (m == 0) return true;
  CycMat S = symmetrizer_recursive(m_module, m, budget);
  const long long D = S.rows();
  const std::vector<int> sums = word_sums(m_module.dim, m, D);
  for (long long c = 0; c < D; ++c) {
    for (long long r = 0; r < D; ++r) {
      if (!S.at(static_cast<int>(r), static_cast<int>(c)).is_zero() &&
          sums[r] > sums[c]) {
        return false;
      }
    }
  }
  return true;
}

Cyclo psi_coefficient(const YdModule& m_module, int m, long long budget) {
  check_module(m_module, m);
  if (m < 1) {
    throw std::invalid_argument("psi coefficient needs degree at least 1");
  }
  const auto* f = std::get_if<FiniteV>(&m_module.spec.kind);
  if (f == nullptr || f->lambda.is_zero()) {
    throw std::domain_error(
        "psi coefficient is defined only for lambda != 0 modules");
  }
  const TaftParams& p = m_module.spec.params;
  const int i = ((f->i1 % p.n) + p.n) % p.n;
  BraidingOperator b = braiding_operator(m_module);
  const long long D = tensor_dim_or_throw(b.dim, m, budget);
  long long col = 0;
  for (int s = 0; s < m; ++s) col = col * b.dim + i;
  if (col >= D) {
    throw std::logic_error("top line index escaped the tensor power");
  }
  std::vector<Cyclo> out = symmetrizer_column(b, m, col, budget);
  return out[col];
}

std::vector<std::pair<int, long long>> nichols_probe(const YdModule& m_module,
                                                     int max_degree,
                                                     long long budget) {
  check_module(m_module, 0);
  if (max_degree < 0) {
    throw std::invalid_argument("max_degree must be nonnegative");
  }
  std::vector<std::pair<int, long long>> out;
  for (int deg = 0; deg <= max_degree; ++deg) {
    if (deg > 0 && checked_pow(m_module.dim, deg, budget) < 0) break;
    out.emplace_back(deg, graded_nichols_dim(m_module, deg, budget));
  }
  return out;
}

}  // namespace taftyd
