// taftyd: construct, verify, classify, and probe the simple Yetter-Drinfeld
// modules over the infinite dimensional Taft algebras H(n, t, xi).
//
// Subcommands: classify, module, sweep, verify, nichols.  Exit codes for
// classify follow the scripting contract: 0 finite, 1 infinite, 2 usage
// error.  All other commands use 0 success, 1 check failure, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "taftyd/json_io.hpp"
#include "taftyd/nichols.hpp"

namespace {

using namespace taftyd;

struct SessionConfig {
  int probe_bound = 8;
  long long symmetrizer_budget = kSymmetrizerBudget;
  int truncation_K = 12;
  std::string output = "text";
  long long seed = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_params(int n, int t) {
  if (n < 2) throw UsageError("n must be at least 2");
  if (t < 0 || t >= n) throw UsageError("t must satisfy 0 <= t <= n-1");
}

void check_config(const SessionConfig& cfg) {
  if (cfg.probe_bound < 0) throw UsageError("probe bound must be nonnegative");
  if (cfg.symmetrizer_budget < 1) throw UsageError("budget must be positive");
  if (cfg.truncation_K < 1) {
    throw UsageError("truncation bound must be positive");
  }
}

// lambda-spec grammar: "0" | "1" | "zeta^e" with e an integer mod n.
Cyclo parse_lambda(const std::string& s, int n) {
  if (s == "0") return Cyclo::zero(n);
  if (s == "1") return Cyclo::one(n);
  const std::string prefix = "zeta^";
  if (s.rfind(prefix, 0) == 0) {
    try {
      size_t used = 0;
      long long e = std::stoll(s.substr(prefix.size()), &used);
      if (used == s.size() - prefix.size()) return Cyclo::root_power(n, e);
    } catch (const std::exception&) {
    }
  }
  throw UsageError("lambda must be 0, 1, or zeta^e (got \"" + s + "\")");
}

// Canonical label of a lambda-spec: "0", "1", or "zeta^e" with 1 <= e < n.
std::string lambda_label(const std::string& s, int n) {
  if (s == "0") return "0";
  if (s == "1") return "1";
  long long e = std::stoll(s.substr(5));
  e = ((e % n) + n) % n;
  return e == 0 ? "1" : "zeta^" + std::to_string(e);
}

int label_rank(const std::string& label) {
  if (label == "0") return 0;
  if (label == "1") return 1;
  return 2 + std::stoi(label.substr(5));
}

std::string lambda_text(const Cyclo& lam) { return lam.str(); }

std::string module_headline(const YdModule& m) {
  std::ostringstream os;
  const TaftParams& p = m.spec.params;
  if (const auto* f = std::get_if<FiniteV>(&m.spec.kind)) {
    os << "V(t*" << f->i1 << ", " << f->j << "; lambda = "
       << lambda_text(f->lambda) << ") over H(" << p.n << ", " << p.t
       << "): dim " << m.dim;
  } else {
    const auto& inf = std::get<InfiniteV>(m.spec.kind);
    os << "V(" << inf.i << ", " << inf.j << ") over H(" << p.n << ", " << p.t
       << "): window of " << m.dim << " rows (K = " << inf.K << ")";
  }
  return os.str();
}

std::string tags_text(const std::vector<std::pair<int, int>>& tags) {
  if (tags.empty()) return "none";
  std::ostringstream os;
  for (size_t s = 0; s < tags.size(); ++s) {
    if (s) os << ", ";
    os << "(" << tags[s].first << "," << tags[s].second << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const SessionConfig& cfg, int n, int t, int i, int j,
                 const std::string& lambda_spec) {
  check_params(n, t);
  TaftParams p(n, t);
  Cyclo lam = parse_lambda(lambda_spec, n);
  NicholsVerdict verdict = classify_nichols(p, i, j, lam);
  YdModule mod = build_finite_module(p, i, j, lam);
  // The attached probe stays cheap: deep probes go through `nichols`.
  const long long probe_cap = std::min<long long>(cfg.symmetrizer_budget, 1024);
  verdict.probe = nichols_probe(mod, cfg.probe_bound, probe_cap);
  std::string diagram;
  if (t != 0) {
    auto [data, graph] = reduce_to_diagonal(p, i, j);
    diagram = dynkin_text(data, graph);
  }
  if (cfg.output == "json") {
    Json out = Json::object();
    out["params"] = {{"n", n}, {"t", t}};
    out["i1"] = i;
    out["j"] = j;
    out["lambda"] = cyclo_to_json(lam);
    out["verdict"] = verdict_to_json(verdict);
    if (diagram.empty()) {
      out["diagram"] = nullptr;
    } else {
      out["diagram"] = diagram;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << module_headline(mod) << "\n";
    std::cout << "finite: " << (verdict.finite ? "yes" : "no") << "\n";
    std::cout << "reason: " << reason_name(verdict.reason) << "\n";
    std::cout << "tags: " << tags_text(verdict.tags) << "\n";
    for (const std::string& c : verdict.table_conditions) {
      std::cout << "condition: " << c << "\n";
    }
    if (!diagram.empty()) std::cout << "diagram: " << diagram << "\n";
    std::cout << "probe:";
    for (const auto& [deg, dim] : verdict.probe) {
      std::cout << " " << dim;
      (void)deg;
    }
    std::cout << "\n";
  }
  return verdict.finite ? 0 : 1;
}

// ---------------------------------------------------------------------------
// module

int cmd_module(const SessionConfig& cfg, int n, int t,
               const std::string& kind, int i, int j,
               const std::string& lambda_spec, int K) {
  check_params(n, t);
  TaftParams p(n, t);
  YdModule mod = kind == "infinite"
                     ? build_infinite_truncation(p, i, j, K)
                     : build_finite_module(p, i, j, parse_lambda(lambda_spec, n));
  ModuleReport report = verify_yd_module(mod);
  std::vector<StandardElement> soc = socle(mod);
  bool socle_agrees = soc == standard_elements(mod);
  bool basis_ok = true;
  std::string basis_failure;
  for (const StandardElement& e : soc) {
    ModuleReport b = standard_basis_check(mod, e.index);
    if (!b.ok && basis_ok) {
      basis_ok = false;
      basis_failure = b.failure;
    }
  }
  const bool ok = report.ok && socle_agrees && basis_ok;
  if (cfg.output == "json") {
    Json out = Json::object();
    out["module"] = module_to_json(mod);
    out["verified"] = report.ok;
    if (!report.ok) out["failure"] = report.failure;
    Json socj = Json::array();
    for (const StandardElement& e : soc) {
      socj.push_back(Json::array({e.index, e.coaction_exp, e.weight_exp}));
    }
    out["socle"] = std::move(socj);
    out["socle_matches_standard_elements"] = socle_agrees;
    out["standard_basis_ok"] = basis_ok;
    if (!basis_ok) out["standard_basis_failure"] = basis_failure;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << module_headline(mod) << "\n";
    std::cout << "g weights:";
    for (int w : mod.g_weights) std::cout << " " << w;
    std::cout << "\n";
    if (mod.dim <= 12) {
      std::cout << "x matrix:\n";
      for (int r = 0; r < mod.dim; ++r) {
        std::cout << "  [";
        for (int c = 0; c < mod.dim; ++c) {
          std::cout << (c ? " " : "") << mod.x_matrix.at(r, c).str();
        }
        std::cout << "]\n";
      }
      std::cout << "coaction:\n";
      for (int k = 0; k < mod.dim; ++k) {
        std::cout << "  delta(v_" << k << ") =";
        bool first = true;
        for (const auto& [h, l] : mod.coaction_rows[k]) {
          std::cout << (first ? " " : " + ") << "(" << h.str() << ") (x) v_"
                    << l;
          first = false;
        }
        std::cout << "\n";
      }
    }
    std::cout << "socle types:";
    for (const StandardElement& e : soc) {
      std::cout << " (" << e.coaction_exp << "," << e.weight_exp << ")@v_"
                << e.index;
    }
    std::cout << "\n";
    std::cout << "verification: " << (report.ok ? "ok" : report.failure)
              << "\n";
    std::cout << "socle matches standard elements: "
              << (socle_agrees ? "yes" : "no") << "\n";
    std::cout << "standard basis: " << (basis_ok ? "ok" : basis_failure)
              << "\n";
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(const SessionConfig& cfg, int n, int t,
              std::vector<std::string> lambda_specs, const std::string& out_path) {
  check_params(n, t);
  TaftParams p(n, t);
  const int N = p.N();
  // Canonical stratum order: 0, then 1, then zeta^e ascending; duplicates
  // (e.g. zeta^0 and 1) collapse.
  std::vector<std::string> labels;
  for (const std::string& s : lambda_specs) {
    parse_lambda(s, n);  // validates the grammar
    std::string label = lambda_label(s, n);
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
      labels.push_back(label);
    }
  }
  std::sort(labels.begin(), labels.end(), [](const auto& a, const auto& b) {
    return label_rank(a) < label_rank(b);
  });

  Json entries = Json::array();
  Json iso_classes = Json::array();
  long long class_count = 0;
  for (const std::string& label : labels) {
    Cyclo lam = parse_lambda(label, n);
    std::vector<ModuleSpecifier> reps;
    for (int i1 = 0; i1 < N; ++i1) {
      for (int j = 0; j < n; ++j) {
        YdModule mod = build_finite_module(p, i1, j, lam);
        NicholsVerdict verdict = classify_nichols(p, i1, j, lam);
        bool canonical = true;
        for (const ModuleSpecifier& r : reps) {
          if (iso_test(r, mod.spec)) {
            canonical = false;
            break;
          }
        }
        if (canonical) {
          reps.push_back(mod.spec);
          iso_classes.push_back(
              Json{{"i1", i1}, {"j", j}, {"lambda", label}});
          ++class_count;
        }
        Json soc = Json::array();
        for (const StandardElement& e : socle(mod)) {
          soc.push_back(Json::array({e.coaction_exp, e.weight_exp}));
        }
        entries.push_back(Json{{"i1", i1},
                               {"j", j},
                               {"lambda", label},
                               {"dim", mod.dim},
                               {"socle", std::move(soc)},
                               {"canonical", canonical},
                               {"verdict", verdict_to_json(verdict)}});
      }
    }
  }
  Json report = Json::object();
  report["params"] = {{"n", n}, {"t", t}, {"N", N}};
  report["lambda_set"] = labels;
  report["entries"] = std::move(entries);
  report["iso_classes"] = std::move(iso_classes);
  report["iso_class_count"] = class_count;
  // The sweep file schema stores every integer as a decimal string.
  std::string payload = stringify_integers(report).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return 1;
    }
    f << payload;
    if (!f.good()) {
      std::cerr << "write to " << out_path << " failed\n";
      return 1;
    }
    std::cout << "wrote " << report["entries"].size() << " entries, "
              << class_count << " iso classes to " << out_path << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteResult {
  std::string name;
  bool ok = true;
  std::string witness;
};

SuiteResult suite_hopf(const SessionConfig& cfg, const TaftParams& p,
                       bool fault) {
  SuiteResult res{"hopf"};
  const int bound = std::min(cfg.probe_bound, 6);
  AxiomReport rep =
      fault ? verify_hopf_axioms(p, bound, [](const HopfElt& h) { return h; })
            : verify_hopf_axioms(p, bound);
  res.ok = rep.ok;
  res.witness = rep.failure;
  return res;
}

SuiteResult suite_coeffs(const SessionConfig& cfg, const TaftParams& p,
                         bool fault, std::mt19937_64& rng) {
  SuiteResult res{"coeffs"};
  const int N = p.N();
  for (int i1 = 0; i1 < N && res.ok; ++i1) {
    for (int j = 0; j < p.n && res.ok; ++j) {
      CoeffContext ctx = CoeffContext::t_multiple(p, i1, j);
      Comatrix m = build_comatrix(ctx, 2 * N);
      if (fault) m = m.with_entry(1, 0, m.entry(0, 0));
      ComatrixReport rep = verify_comatrix(m);
      if (!rep.ok) {
        res.ok = false;
        res.witness = "t-multiple context (" + std::to_string(i1) + ", " +
                      std::to_string(j) + "): " + rep.failure;
        break;
      }
      BlockReport blocks = block_decompose(ctx, 2);
      if (!blocks.ok) {
        res.ok = false;
        res.witness = "block decomposition (" + std::to_string(i1) + ", " +
                      std::to_string(j) + "): " + blocks.failure;
      }
      if (fault) return res;  // the injected fault must have tripped above
    }
  }
  for (int i = 0; i < p.n && res.ok; ++i) {
    if (!in_standard_set(p, i)) continue;
    for (int j = 0; j < p.n && res.ok; ++j) {
      CoeffContext ctx = CoeffContext::general(p, i, j);
      ComatrixReport rep =
          verify_comatrix(build_comatrix(ctx, std::max(2, cfg.probe_bound)));
      if (!rep.ok) {
        res.ok = false;
        res.witness = "general context (" + std::to_string(i) + ", " +
                      std::to_string(j) + "): " + rep.failure;
      }
    }
  }
  if (res.ok) {
    // Seeded spot-check at one larger size.
    int i1 = static_cast<int>(rng() % N);
    int j = static_cast<int>(rng() % p.n);
    CoeffContext ctx = CoeffContext::t_multiple(p, i1, j);
    ComatrixReport rep = verify_comatrix(build_comatrix(ctx, 2 * N + 1));
    if (!rep.ok) {
      res.ok = false;
      res.witness = "seeded context (" + std::to_string(i1) + ", " +
                    std::to_string(j) + "): " + rep.failure;
    }
  }
  return res;
}

SuiteResult suite_modules(const SessionConfig& cfg, const TaftParams& p,
                          bool fault) {
  SuiteResult res{"modules"};
  const int N = p.N();
  auto check_module = [&](const YdModule& mod, const std::string& tag) {
    ModuleReport rep = verify_yd_module(mod);
    if (!rep.ok) {
      res.ok = false;
      res.witness = tag + ": " + rep.failure;
      return;
    }
    if (socle(mod) != standard_elements(mod)) {
      res.ok = false;
      res.witness = tag + ": socle disagrees with standard elements";
      return;
    }
    for (const StandardElement& e : socle(mod)) {
      ModuleReport b = standard_basis_check(mod, e.index);
      if (!b.ok) {
        res.ok = false;
        res.witness = tag + ": " + b.failure;
        return;
      }
    }
    if (!mod.truncated && mod.dim <= 10 && !is_simple_bruteforce(mod)) {
      res.ok = false;
      res.witness = tag + ": module is not simple";
    }
  };
  if (fault) {
    // Corrupt one x-action entry; the relation xg = xi gx must now fail.
    YdModule mod = build_finite_module(p, 1 % N, (N - 1) % p.n, Cyclo::zero(p.n));
    mod.x_matrix.at(0, 0) += Cyclo::one(p.n);
    ModuleReport rep = verify_yd_module(mod);
    res.ok = false;
    res.witness = rep.ok ? "injected fault went undetected" : rep.failure;
    return res;
  }
  for (int lam = 0; lam <= 1 && res.ok; ++lam) {
    Cyclo l = lam ? Cyclo::one(p.n) : Cyclo::zero(p.n);
    for (int i1 = 0; i1 < N && res.ok; ++i1) {
      for (int j = 0; j < p.n && res.ok; ++j) {
        YdModule mod = build_finite_module(p, i1, j, l);
        check_module(mod, "V(t*" + std::to_string(i1) + ", " +
                              std::to_string(j) + "; " + std::to_string(lam) +
                              ")");
      }
    }
  }
  for (int i = 0; i < p.n && res.ok; ++i) {
    if (!in_standard_set(p, i)) continue;
    for (int j = 0; j < p.n && res.ok; ++j) {
      YdModule mod = build_infinite_truncation(p, i, j, cfg.truncation_K);
      check_module(mod, "V(" + std::to_string(i) + ", " + std::to_string(j) +
                            ") window");
    }
  }
  return res;
}

SuiteResult suite_braiding(const SessionConfig& cfg, const TaftParams& p,
                           bool fault) {
  SuiteResult res{"braiding"};
  (void)cfg;
  if (fault) {
    // A spurious braiding entry above the triangle must be flagged.
    YdModule mod = build_finite_module(p, 1 % p.N(), (p.N() - 1) % p.n,
                                       Cyclo::one(p.n));
    BraidingOperator b = braiding_operator(mod);
    const int d = b.dim;
    b.matrix.at((d - 1) * d + (d - 1), 0) += Cyclo::one(p.n);
    res.ok = false;
    res.witness = triangularity_check(b)
                      ? "injected fault went undetected"
                      : "triangularity violated at injected entry";
    return res;
  }
  for (int lam = 0; lam <= 1 && res.ok; ++lam) {
    Cyclo l = lam ? Cyclo::one(p.n) : Cyclo::zero(p.n);
    for (int i1 = 0; i1 < p.N() && res.ok; ++i1) {
      for (int j = 0; j < p.n && res.ok; ++j) {
        YdModule mod = build_finite_module(p, i1, j, l);
        BraidingOperator b = braiding_operator(mod);
        if (!yang_baxter_residual(b).is_zero()) {
          res.ok = false;
          res.witness = "Yang-Baxter residual nonzero at (" +
                        std::to_string(i1) + ", " + std::to_string(j) + "; " +
                        std::to_string(lam) + ")";
          break;
        }
        if (!triangularity_check(b)) {
          res.ok = false;
          res.witness = "triangularity fails at (" + std::to_string(i1) +
                        ", " + std::to_string(j) + "; " + std::to_string(lam) +
                        ")";
        }
      }
    }
  }
  for (int i = 0; i < p.n && res.ok; ++i) {
    for (int j = 0; j < p.n && res.ok; ++j) {
      if (!braided_iso_check(p, i, j)) {
        res.ok = false;
        res.witness = "column module braiding differs at (" +
                      std::to_string(i) + ", " + std::to_string(j) + ")";
      }
    }
  }
  return res;
}

SuiteResult suite_nichols(const SessionConfig& cfg, const TaftParams& p,
                          bool fault, std::mt19937_64& rng) {
  SuiteResult res{"nichols"};
  if (fault) {
    YdModule mod = build_finite_module(p, 1 % p.N(), (p.N() - 1) % p.n,
                                       Cyclo::zero(p.n));
    BraidingOperator b = braiding_operator(mod);
    b.matrix.at(0, 0) += Cyclo::one(p.n);
    CycMat lhs = symmetrizer_permsum(b, 2, cfg.symmetrizer_budget);
    CycMat rhs = symmetrizer_recursive(mod, 2, cfg.symmetrizer_budget);
    res.ok = false;
    res.witness = lhs == rhs ? "injected fault went undetected"
                             : "permutation sum departs from the recursion "
                               "under the injected entry";
    return res;
  }
  for (int lam = 0; lam <= 1 && res.ok; ++lam) {
    Cyclo l = lam ? Cyclo::one(p.n) : Cyclo::zero(p.n);
    for (int i1 = 0; i1 < p.N() && res.ok; ++i1) {
      for (int j = 0; j < p.n && res.ok; ++j) {
        YdModule mod = build_finite_module(p, i1, j, l);
        if (mod.dim > 3) continue;
        BraidingOperator b = braiding_operator(mod);
        for (int m = 1; m <= 3 && res.ok; ++m) {
          if (!(symmetrizer_permsum(b, m, cfg.symmetrizer_budget) ==
                symmetrizer_recursive(mod, m, cfg.symmetrizer_budget))) {
            res.ok = false;
            res.witness = "permutation sum and recursion differ at (" +
                          std::to_string(i1) + ", " + std::to_string(j) +
                          "; " + std::to_string(lam) + "), degree " +
                          std::to_string(m);
          }
        }
      }
    }
  }
  if (res.ok && p.t != 0) {
    // Seeded spot: one module up to the budget at degree 2.
    int i1 = static_cast<int>(rng() % p.N());
    int j = static_cast<int>(rng() % p.n);
    YdModule mod = build_finite_module(p, i1, j, Cyclo::one(p.n));
    if (static_cast<long long>(mod.dim) * mod.dim <= cfg.symmetrizer_budget) {
      BraidingOperator b = braiding_operator(mod);
      if (!(symmetrizer_permsum(b, 2, cfg.symmetrizer_budget) ==
            symmetrizer_recursive(mod, 2, cfg.symmetrizer_budget))) {
        res.ok = false;
        res.witness = "seeded degree-2 comparison differs at (" +
                      std::to_string(i1) + ", " + std::to_string(j) + ")";
      }
    }
  }
  return res;
}

int cmd_verify(const SessionConfig& cfg, int n, int t,
               const std::string& suite, bool fault) {
  check_params(n, t);
  TaftParams p(n, t);
  std::mt19937_64 rng(static_cast<unsigned long long>(cfg.seed));
  std::vector<SuiteResult> results;
  auto want = [&](const char* name) {
    return suite == name || suite == "all";
  };
  if (want("hopf")) results.push_back(suite_hopf(cfg, p, fault));
  if (want("coeffs")) results.push_back(suite_coeffs(cfg, p, fault, rng));
  if (want("modules")) results.push_back(suite_modules(cfg, p, fault));
  if (want("braiding")) results.push_back(suite_braiding(cfg, p, fault));
  if (want("nichols")) results.push_back(suite_nichols(cfg, p, fault, rng));
  bool all_ok = true;
  for (const SuiteResult& r : results) all_ok = all_ok && r.ok;
  if (cfg.output == "json") {
    Json out = Json::object();
    Json suites = Json::array();
    for (const SuiteResult& r : results) {
      Json s = Json::object();
      s["name"] = r.name;
      s["ok"] = r.ok;
      if (!r.witness.empty()) s["witness"] = r.witness;
      suites.push_back(std::move(s));
    }
    out["suites"] = std::move(suites);
    out["ok"] = all_ok;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const SuiteResult& r : results) {
      std::cout << "suite " << r.name << ": " << (r.ok ? "pass" : "FAIL");
      if (!r.witness.empty()) std::cout << " (" << r.witness << ")";
      std::cout << "\n";
    }
    std::cout << (all_ok ? "all checks passed" : "checks FAILED") << "\n";
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// nichols

int cmd_nichols(const SessionConfig& cfg, int n, int t, int i, int j,
                const std::string& lambda_spec, int max_degree) {
  check_params(n, t);
  if (max_degree < 0) throw UsageError("max-degree must be nonnegative");
  TaftParams p(n, t);
  Cyclo lam = parse_lambda(lambda_spec, n);
  YdModule mod = build_finite_module(p, i, j, lam);
  std::vector<std::pair<int, long long>> probe =
      nichols_probe(mod, max_degree, cfg.symmetrizer_budget);
  if (cfg.output == "json") {
    Json out = Json::object();
    out["params"] = {{"n", n}, {"t", t}};
    out["i1"] = i;
    out["j"] = j;
    out["lambda"] = cyclo_to_json(lam);
    out["dim"] = mod.dim;
    Json pj = Json::array();
    for (const auto& [deg, dim] : probe) pj.push_back(Json::array({deg, dim}));
    out["probe"] = std::move(pj);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << module_headline(mod) << "\n";
    for (const auto& [deg, dim] : probe) {
      std::cout << "degree " << deg << ": " << dim << "\n";
    }
    if (!probe.empty() && probe.back().first < max_degree) {
      std::cout << "(stopped before degree " << probe.back().first + 1
                << ": word count exceeds the budget)\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Yetter-Drinfeld modules over infinite dimensional Taft "
      "algebras: construction, verification, classification, and Nichols "
      "algebra probes"};
  app.require_subcommand(1);
  app.fallthrough();

  SessionConfig cfg;
  app.add_option("--output", cfg.output, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized spot-checks")
      ->capture_default_str();
  app.add_option("--budget", cfg.symmetrizer_budget,
                 "Cap on tensor words per symmetrizer call")
      ->capture_default_str();
  app.add_option("--probe-bound", cfg.probe_bound,
                 "Top degree for graded probes")
      ->capture_default_str();
  app.add_option("--truncation-K", cfg.truncation_K,
                 "Window size for infinite modules")
      ->capture_default_str();

  int n = 0, t = 0, i = 0, j = 0, K = -1, max_degree = -1;
  std::string lambda_spec = "0";
  std::string kind = "finite";
  std::string suite = "all";
  std::string out_path;
  std::vector<std::string> lambda_set;
  bool inject_fault = false;

  CLI::App* classify = app.add_subcommand(
      "classify", "Decide Nichols algebra finite-dimensionality");
  classify->add_option("--n", n)->required();
  classify->add_option("--t", t)->required();
  classify->add_option("--i", i, "Factored index i1 of V(t*i1, j)")
      ->required();
  classify->add_option("--j", j)->required();
  classify->add_option("--lambda", lambda_spec, "0 | 1 | zeta^e");

  CLI::App* module_cmd = app.add_subcommand(
      "module", "Build one module, verify it, and dump it");
  module_cmd->add_option("--n", n)->required();
  module_cmd->add_option("--t", t)->required();
  module_cmd->add_option("--kind", kind)
      ->check(CLI::IsMember({"finite", "infinite"}));
  module_cmd->add_option("--i", i,
                         "Factored index (finite) or literal index (infinite)")
      ->required();
  module_cmd->add_option("--j", j)->required();
  module_cmd->add_option("--lambda", lambda_spec, "0 | 1 | zeta^e");
  module_cmd->add_option("--K", K, "Window size for kind=infinite");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Enumerate and classify a full fundamental domain");
  sweep->add_option("--n", n)->required();
  sweep->add_option("--t", t)->required();
  sweep->add_option("--lambda", lambda_set,
                    "Lambda strata (repeatable; default 0)");
  sweep->add_option("--out", out_path, "Write the JSON report here");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run a named property suite at the configured bounds");
  verify->add_option("--n", n)->required();
  verify->add_option("--t", t)->required();
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember(
          {"hopf", "coeffs", "modules", "braiding", "nichols", "all"}));
  verify->add_flag("--inject-fault", inject_fault)->group("");

  CLI::App* nichols = app.add_subcommand(
      "nichols", "Graded dimension probe of the Nichols algebra");
  nichols->add_option("--n", n)->required();
  nichols->add_option("--t", t)->required();
  nichols->add_option("--i", i, "Factored index i1 of V(t*i1, j)")
      ->required();
  nichols->add_option("--j", j)->required();
  nichols->add_option("--lambda", lambda_spec, "0 | 1 | zeta^e");
  nichols->add_option("--max-degree", max_degree, "Top probe degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
  }

  try {
    check_config(cfg);
    if (classify->parsed()) {
      return cmd_classify(cfg, n, t, i, j, lambda_spec);
    }
    if (module_cmd->parsed()) {
      return cmd_module(cfg, n, t, kind, i, j, lambda_spec,
                        K > 0 ? K : cfg.truncation_K);
    }
    if (sweep->parsed()) {
      if (lambda_set.empty()) lambda_set.push_back("0");
      return cmd_sweep(cfg, n, t, lambda_set, out_path);
    }
    if (verify->parsed()) {
      return cmd_verify(cfg, n, t, suite, inject_fault);
    }
    if (nichols->parsed()) {
      return cmd_nichols(cfg, n, t, i, j, lambda_spec,
                         max_degree >= 0 ? max_degree : cfg.probe_bound);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
