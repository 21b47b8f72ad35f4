#pragma once

// Verification sweep: closed forms against brute-force oracles for every
// requested chain, plus the spectral identities per chain length. Output is a
// pure function of the options (worker count included), so two runs with the
// same flags are byte-identical.

#include <chrono>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kchain/chain_graphs.hpp"
#include "kchain/closed_forms.hpp"
#include "kchain/harness/serialize.hpp"
#include "kchain/harness/table.hpp"
#include "kchain/harness/worker_pool.hpp"
#include "kchain/invariant_oracles.hpp"
#include "kchain/spectral.hpp"

namespace kchain::harness {

enum class SweepMode { Exhaustive, Sample };

inline constexpr int kExhaustiveMaxN = 8;

inline SweepMode parse_mode(const std::string& s) {
  if (s == "exhaustive") return SweepMode::Exhaustive;
  if (s == "sample") return SweepMode::Sample;
  throw InvalidArgument("unknown mode '" + s + "' (expected exhaustive or sample)");
}

struct VerifyOptions {
  int max_n = 6;
  SweepMode mode = SweepMode::Exhaustive;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  int sample_size = 64;
  OutputFormat format = OutputFormat::Text;
};

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass;
};

template <typename A, typename B>
Check make_check(std::string name, const A& expected, const B& actual) {
  return {std::move(name), to_string(expected), to_string(actual), expected == actual};
}

struct VerificationVerdict {
  ChainSpec spec;
  int d;
  InvariantReport oracle;
  std::vector<Check> checks;
  std::chrono::nanoseconds elapsed{0};

  [[nodiscard]] bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  [[nodiscard]] const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Every closed form that applies to the spec against its oracle, plus the
/// per-spec spectral bookkeeping (L_S spectrum, zeta sums, Phi factorisation).
inline VerificationVerdict verify_spec(const ChainSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const int n = spec.n();
  const int r = spec.r();
  const int d = end_degree_sum(spec).value;
  VerificationVerdict v{spec, d, full_report(spec), {}, {}};
  auto& checks = v.checks;
  try {
    const Graph g = build_subchain(spec);
    checks.push_back(make_check("vertices", BigInt(2 * n + 2), BigInt(g.num_vertices())));
    checks.push_back(make_check("edges", BigInt(5 * n + 1 - r), BigInt(g.num_edges())));
    checks.push_back({"connected", "true", g.is_connected() ? "true" : "false", g.is_connected()});

    checks.push_back(make_check("kf", kf_grn(n, r, d), v.oracle.kirchhoff));
    checks.push_back(make_check("tau", tau_grn(n, r, d), v.oracle.spanning_trees));
    checks.push_back(make_check("wiener", wiener_grn(n, r), v.oracle.wiener));
    if (spec.is_base_chain()) {
      checks.push_back(make_check("kf_base", kf_gn(n), v.oracle.kirchhoff));
      checks.push_back(make_check("tau_base", tau_gn(n), v.oracle.spanning_trees));
      checks.push_back(make_check("kfstar", kfstar_gn(n), v.oracle.mult_deg_kirchhoff));
      checks.push_back(make_check("gutman", gutman_gn(n), v.oracle.gutman));
    }

    const BlockPair blocks = block_pair(spec);
    const LsSpectrum ls = ls_spectrum(spec);
    const bool ls_ok = blocks.ls.is_diagonal() && diagonal_multiset(blocks.ls) == ls.multiplicity;
    checks.push_back({"ls_spectrum", "diag(L_S)", ls_ok ? "diag(L_S)" : "mismatch", ls_ok});
    checks.push_back(make_check("la_deletion_independent", BigInt(1), BigInt(block_pair(ChainSpec(n)).la == blocks.la ? 1 : 0)));
    checks.push_back(make_check("zeta_recip_sum", zeta_recip_sum(spec), recip_sum(ls.multiplicity)));
    checks.push_back(make_check("zeta_product", Rational(zeta_product(spec)), product(ls.multiplicity)));
    checks.push_back(make_check("kf_spectral", kf_from_spectrum(spec), v.oracle.kirchhoff));

    const ProductIdentity id = laplacian_product_identity(spec);
    checks.push_back({"charpoly_product", id.full.to_string(), (id.la * id.ls).to_string(), id.holds()});
  } catch (const std::exception& e) {
    checks.push_back({"exception", "none", e.what(), false});
  }
  v.elapsed = std::chrono::steady_clock::now() - start;
  return v;
}

struct SpectralVerdict {
  int n;
  std::vector<Check> checks;
  [[nodiscard]] bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Identities that depend only on n: eigenvalue sums and products of L_A,
/// the last two coefficients of the normalized block, minors, and the per-vertex
/// distance row sums.
inline SpectralVerdict verify_spectral(int n) {
  SpectralVerdict v{n, {}};
  auto& checks = v.checks;
  try {
    checks.push_back(make_check("alpha_recip_sum", alpha_recip_sum(n), alpha_recip_sum_from_charpoly(n)));
    checks.push_back(make_check("alpha_product", alpha_product(n), alpha_product_from_charpoly(n)));
    const bool roots = alpha_roots_match(n);
    checks.push_back({"alpha_roots_1e-9", "true", roots ? "true" : "false", roots});

    const NormalizedCoeffs c = normalized_coeffs(n);
    checks.push_back(make_check("normalized_an", an_signed_closed(n), c.an_signed));
    checks.push_back(make_check("normalized_an1", an1_signed_closed(n), c.an1_signed));
    for (int i = 1; i <= n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      checks.push_back(make_check("minor_c" + std::to_string(i), minor_closed(i), c.minors[idx]));
      checks.push_back(make_check("minor_rec_c" + std::to_string(i), minor_by_recurrence(i), c.minors[idx]));
    }
    checks.push_back(make_check("gamma_recip_sum", gamma_recip_sum_closed(n), c.an1_signed / c.an_signed));
    checks.push_back(make_check("tridiag_M_det", tridiag_M_det_closed(n), tridiag_M_det(n)));
    checks.push_back(make_check("eta_recip_sum", eta_recip_sum_closed(n), recip_sum(eta_spectrum(n))));
    checks.push_back(make_check("kfstar_from_spectrum", kfstar_gn(n), kfstar_from_spectrum(n)));
    const ProductIdentity nid = normalized_product_identity(ChainSpec(n));
    checks.push_back({"normalized_charpoly_product", nid.full.to_string(), (nid.la * nid.ls).to_string(),
                      nid.holds()});

    const Graph g = build_chain(n);
    const auto dist = distance_matrix(g);
    const auto deg = g.degrees();
    const auto row_sum = [&](int v) {
      BigInt s = 0;
      for (int d : dist[static_cast<std::size_t>(v)]) s += d;
      return s;
    };
    const auto weighted_row_sum = [&](int v) {
      BigInt s = 0;
      for (std::size_t u = 0; u < dist.size(); ++u) s += deg[u] * dist[static_cast<std::size_t>(v)][u];
      return BigInt(deg[static_cast<std::size_t>(v)]) * s;
    };
    checks.push_back(make_check("f1", corner_distance_sum(n), row_sum(top_vertex(n, 1))));
    checks.push_back(make_check("g1", corner_gutman_sum(n), weighted_row_sum(top_vertex(n, 1))));
    for (int i = 2; i <= n; ++i) {
      checks.push_back(make_check("f2_i" + std::to_string(i), internal_distance_sum(n, i), row_sum(top_vertex(n, i))));
      checks.push_back(
          make_check("g2_i" + std::to_string(i), internal_gutman_sum(n, i), weighted_row_sum(top_vertex(n, i))));
    }
  } catch (const std::exception& e) {
    checks.push_back({"exception", "none", e.what(), false});
  }
  return v;
}

/// A printed formula that must disagree with the oracle. `demonstrated` is
/// true when it does.
struct ErratumDemo {
  std::string name;
  std::string printed;
  std::string oracle;
  bool demonstrated;
};

inline std::vector<ErratumDemo> errata_demonstrations() {
  std::vector<ErratumDemo> out;
  const auto add = [&out](std::string name, const auto& printed, const auto& oracle) {
    out.push_back({std::move(name), to_string(printed), to_string(oracle), printed != oracle});
  };
  const Graph g2 = build_chain(2);
  add("wiener_gn_as_printed(n=2)", wiener_gn(2, FormulaVariant::AsPrinted), Rational(wiener(g2)));
  {
    const auto dist = distance_matrix(g2);
    BigInt row = 0;
    for (int d : dist[static_cast<std::size_t>(top_vertex(2, 2))]) row += d;
    add("f2_as_printed(i=2,n=2)", internal_distance_sum(2, 2, FormulaVariant::AsPrinted), row);
  }
  {
    const ChainSpec g1(1);
    add("zeta_recip_sum_as_printed(n=1,r=0)", zeta_recip_sum(g1, FormulaVariant::AsPrinted),
        recip_sum(diagonal_multiset(block_pair(g1).ls)));
  }
  // Printed table cells against the resistance oracle on the full chain.
  const auto add_cell = [&out](std::string name, const std::optional<std::string>& printed, const Rational& oracle) {
    const std::string shown = display2(oracle);
    out.push_back({std::move(name), printed.value_or(""), shown, printed.has_value() && *printed != shown});
  };
  add_cell("kf_table(G_48)", printed_kf_erratum(48), full_report(ChainSpec(48)).kirchhoff);
  add_cell("kfstar_table(G_40)", printed_kfstar_erratum(40), full_report(ChainSpec(40)).mult_deg_kirchhoff);
  return out;
}

/// Uniform integer in [0, bound) by rejection on raw 64-bit draws, so the
/// stream is identical on every standard library.
inline std::uint64_t bounded_draw(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = engine();
  while (x >= limit) x = engine();
  return x % bound;
}

/// `count` draws: r uniform over [0, n+1], then a uniform r-subset of the
/// rungs. Duplicates collapse; the result is sorted.
inline std::vector<ChainSpec> sample_subchains(int n, int count, std::mt19937_64& engine) {
  std::set<ChainSpec> picked;
  for (int k = 0; k < count; ++k) {
    const auto r = static_cast<int>(bounded_draw(engine, static_cast<std::uint64_t>(n + 2)));
    std::vector<int> pool;
    for (int i = 1; i <= n + 1; ++i) pool.push_back(i);
    for (int j = 0; j < r; ++j) {
      const auto remaining = static_cast<std::uint64_t>(pool.size() - static_cast<std::size_t>(j));
      const auto pick = static_cast<std::size_t>(j) + static_cast<std::size_t>(bounded_draw(engine, remaining));
      std::swap(pool[static_cast<std::size_t>(j)], pool[pick]);
    }
    pool.resize(static_cast<std::size_t>(r));
    picked.emplace(n, pool);
  }
  return {picked.begin(), picked.end()};
}

/// Exhaustive mode enumerates every deletion set for n <= 8 and samples
/// above that; sample mode samples every n.
inline std::vector<ChainSpec> sweep_specs(const VerifyOptions& opt) {
  std::mt19937_64 engine(opt.seed);
  std::vector<ChainSpec> specs;
  for (int n = 1; n <= opt.max_n; ++n) {
    std::vector<ChainSpec> part;
    if (opt.mode == SweepMode::Exhaustive && n <= kExhaustiveMaxN) {
      part = enumerate_all_subchains(n);
    } else {
      part = sample_subchains(n, opt.sample_size, engine);
      const ChainSpec base(n);
      if (std::find(part.begin(), part.end(), base) == part.end()) part.insert(part.begin(), base);
      std::sort(part.begin(), part.end());
    }
    specs.insert(specs.end(), part.begin(), part.end());
  }
  return specs;
}

struct SweepResult {
  std::vector<VerificationVerdict> specs;
  std::vector<SpectralVerdict> spectral;
  std::vector<ErratumDemo> errata;

  [[nodiscard]] std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& v : specs)
      for (const auto& c : v.checks) f += c.pass ? 0 : 1;
    for (const auto& v : spectral)
      for (const auto& c : v.checks) f += c.pass ? 0 : 1;
    return f;
  }
  [[nodiscard]] std::size_t checks() const {
    std::size_t k = 0;
    for (const auto& v : specs) k += v.checks.size();
    for (const auto& v : spectral) k += v.checks.size();
    return k;
  }
  [[nodiscard]] bool errata_all_demonstrated() const {
    for (const auto& e : errata)
      if (!e.demonstrated) return false;
    return true;
  }
  [[nodiscard]] bool passed() const { return failures() == 0 && errata_all_demonstrated(); }
};

inline SweepResult run_sweep(const VerifyOptions& opt) {
  if (opt.max_n < 1) throw InvalidArgument("max-n must be >= 1");
  if (opt.sample_size < 1) throw InvalidArgument("sample-size must be >= 1");
  SweepResult result;
  result.specs = parallel_map(sweep_specs(opt), opt.jobs, verify_spec);
  std::vector<int> lengths;
  for (int n = 1; n <= opt.max_n; ++n) lengths.push_back(n);
  result.spectral = parallel_map(lengths, opt.jobs, verify_spectral);
  result.errata = errata_demonstrations();
  return result;
}

namespace detail {

inline std::string kfstar_closed_text(const VerificationVerdict& v) {
  const Check* c = v.find("kfstar");
  return c ? c->expected : "";
}

inline std::string gutman_closed_text(const VerificationVerdict& v) {
  const Check* c = v.find("gutman");
  return c ? c->expected : "";
}

inline std::string reproducer(const ChainSpec& spec) {
  std::string cmd = "kchain spectrum --n " + std::to_string(spec.n());
  if (!spec.is_base_chain()) cmd += " --delete " + spec.deleted_string();
  return cmd + "   # " + to_json(spec).dump();
}

}  // namespace detail

inline std::string render_sweep(const VerifyOptions& opt, const SweepResult& res) {
  std::ostringstream out;
  const std::string mode = opt.mode == SweepMode::Exhaustive ? "exhaustive" : "sample";
  switch (opt.format) {
    case OutputFormat::Text: {
      out << "# verify max_n=" << opt.max_n << " mode=" << mode << " seed=" << opt.seed
          << " sample_size=" << opt.sample_size << '\n';
      for (const auto& v : res.specs) {
        out << "spec n=" << v.spec.n() << " r=" << v.spec.r() << " deleted=[" << v.spec.deleted_string()
            << "] d=" << v.d << " kf=" << to_string(v.oracle.kirchhoff) << " tau=" << v.oracle.spanning_trees
            << " W=" << v.oracle.wiener << ' ' << (v.passed() ? "PASS" : "FAIL") << " (" << v.checks.size()
            << " checks)\n";
        for (const auto& c : v.checks)
          if (!c.pass) out << "  FAIL " << c.name << " expected=" << c.expected << " actual=" << c.actual << '\n';
        if (!v.passed()) out << "  reproducer: " << detail::reproducer(v.spec) << '\n';
      }
      for (const auto& s : res.spectral) {
        out << "spectral n=" << s.n << ' ' << (s.passed() ? "PASS" : "FAIL") << " (" << s.checks.size()
            << " checks)\n";
        for (const auto& c : s.checks)
          if (!c.pass) out << "  FAIL " << c.name << " expected=" << c.expected << " actual=" << c.actual << '\n';
      }
      for (const auto& e : res.errata) {
        out << "erratum " << e.name << ": printed " << e.printed << ", oracle " << e.oracle << " -> "
            << (e.demonstrated ? "demonstrated (printed form fails)" : "NOT DEMONSTRATED") << '\n';
      }
      std::size_t demonstrated = 0;
      for (const auto& e : res.errata) demonstrated += e.demonstrated ? 1 : 0;
      out << "summary: specs=" << res.specs.size() << " spectral=" << res.spectral.size()
          << " checks=" << res.checks() << " failures=" << res.failures() << " errata_demonstrated=" << demonstrated
          << '/' << res.errata.size() << ' ' << (res.passed() ? "PASS" : "FAIL") << '\n';
      break;
    }
    case OutputFormat::Csv: {
      out << "n,r,deleted,d,kf_oracle,kf_closed,kfstar_oracle,kfstar_closed,tau_oracle,tau_closed,"
             "wiener_oracle,wiener_closed,gutman_oracle,gutman_closed,all_match\n";
      for (const auto& v : res.specs) {
        const auto closed = [&v](const char* name) {
          const Check* c = v.find(name);
          return c ? c->expected : std::string();
        };
        out << v.spec.n() << ',' << v.spec.r() << ',' << csv_field(v.spec.deleted_string()) << ',' << v.d << ','
            << to_string(v.oracle.kirchhoff) << ',' << closed("kf") << ','
            << to_string(v.oracle.mult_deg_kirchhoff) << ',' << detail::kfstar_closed_text(v) << ','
            << v.oracle.spanning_trees << ',' << closed("tau") << ',' << v.oracle.wiener << ',' << closed("wiener")
            << ',' << v.oracle.gutman << ',' << detail::gutman_closed_text(v) << ','
            << (v.passed() ? "true" : "false") << '\n';
      }
      break;
    }
    case OutputFormat::Json: {
      json specs = json::array();
      for (const auto& v : res.specs) {
        const auto closed = [&v](const char* name) -> json {
          const Check* c = v.find(name);
          if (!c) return nullptr;
          return rational_json(parse_rational(c->expected));
        };
        json failing = json::array();
        for (const auto& c : v.checks)
          if (!c.pass) failing.push_back(json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}});
        specs.push_back(json{{"n", v.spec.n()},
                             {"r", v.spec.r()},
                             {"deleted", to_json(v.spec)["deleted"]},
                             {"d", v.d},
                             {"kf_oracle", rational_json(v.oracle.kirchhoff)},
                             {"kf_closed", closed("kf")},
                             {"kfstar_oracle", rational_json(v.oracle.mult_deg_kirchhoff)},
                             {"kfstar_closed", closed("kfstar")},
                             {"tau_oracle", v.oracle.spanning_trees.str()},
                             {"tau_closed", v.find("tau") ? json(v.find("tau")->expected) : json(nullptr)},
                             {"wiener_oracle", v.oracle.wiener.str()},
                             {"wiener_closed", v.find("wiener") ? json(v.find("wiener")->expected) : json(nullptr)},
                             {"gutman_oracle", v.oracle.gutman.str()},
                             {"gutman_closed", v.find("gutman") ? json(v.find("gutman")->expected) : json(nullptr)},
                             {"all_match", v.passed()},
                             {"failures", failing}});
      }
      json spectral = json::array();
      for (const auto& s : res.spectral) {
        json failing = json::array();
        for (const auto& c : s.checks)
          if (!c.pass) failing.push_back(json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}});
        spectral.push_back(json{{"n", s.n}, {"checks", s.checks.size()}, {"pass", s.passed()}, {"failures", failing}});
      }
      json errata = json::array();
      for (const auto& e : res.errata)
        errata.push_back(
            json{{"name", e.name}, {"printed", e.printed}, {"oracle", e.oracle}, {"demonstrated", e.demonstrated}});
      json doc{{"max_n", opt.max_n},
               {"mode", mode},
               {"seed", opt.seed},
               {"sample_size", opt.sample_size},
               {"specs", specs},
               {"spectral", spectral},
               {"errata", errata},
               {"summary",
                {{"specs", res.specs.size()},
                 {"checks", res.checks()},
                 {"failures", res.failures()},
                 {"pass", res.passed()}}}};
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace kchain::harness
