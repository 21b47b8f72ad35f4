#pragma once

// Command dispatch for the kchain tool. Exit status: 0 all checks pass,
// 1 verification mismatch, 2 usage error.

#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kchain/harness/config.hpp"
#include "kchain/harness/reports.hpp"
#include "kchain/harness/table.hpp"
#include "kchain/harness/verify.hpp"

namespace kchain::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer: '" + item + "'");
    }
  }
  return out;
}

inline VerifyOptions verify_options_from(const SettingMap& s) {
  VerifyOptions o;
  o.max_n = static_cast<int>(setting_as_int(s, "max_n"));
  o.mode = parse_mode(s.at("mode"));
  const long long seed = setting_as_int(s, "seed");
  if (seed < 0) throw InvalidArgument("seed must be non-negative");
  o.seed = static_cast<std::uint64_t>(seed);
  const long long jobs = setting_as_int(s, "jobs");
  if (jobs < 1) throw InvalidArgument("jobs must be >= 1");
  o.jobs = static_cast<std::size_t>(jobs);
  o.sample_size = static_cast<int>(setting_as_int(s, "sample_size"));
  o.format = parse_format(s.at("format"));
  if (o.max_n < 1) throw InvalidArgument("max-n must be >= 1");
  if (o.sample_size < 1) throw InvalidArgument("sample-size must be >= 1");
  return o;
}

inline SettingMap verify_defaults() {
  return {{"max_n", "6"}, {"mode", "exhaustive"}, {"seed", "1"},
          {"jobs", "1"},  {"sample_size", "64"},  {"format", "text"}};
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact invariants of linear crossed polyomino chains", "kchain"};
  app.require_subcommand(1);

  // table
  auto* table = app.add_subcommand("table", "Kf or Kf* of G_n over a range of n, two-decimal display");
  std::string table_kind = "kf";
  int table_from = 1;
  int table_to = 50;
  std::string table_format = "text";
  bool as_printed = false;
  table->add_option("--kind", table_kind, "kf | kfstar")->required();
  table->add_option("--from", table_from, "first n")->required();
  table->add_option("--to", table_to, "last n")->required();
  table->add_option("--format", table_format, "text | csv | json");
  table->add_flag("--as-printed", as_printed, "show printed values for known erratum cells");

  // verify
  auto* verify = app.add_subcommand("verify", "closed forms against brute-force oracles");
  std::string config_path;
  std::string v_max_n, v_mode, v_seed, v_jobs, v_sample, v_format;
  auto* o_max_n = verify->add_option("--max-n", v_max_n, "largest chain length");
  auto* o_mode = verify->add_option("--mode", v_mode, "exhaustive | sample");
  auto* o_seed = verify->add_option("--seed", v_seed, "sampling seed");
  auto* o_jobs = verify->add_option("--jobs", v_jobs, "worker threads");
  auto* o_sample = verify->add_option("--sample-size", v_sample, "sampled deletion sets per n");
  auto* o_format = verify->add_option("--format", v_format, "text | csv | json");
  verify->add_option("--config", config_path, "key=value settings file");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Laplacian block spectra of G_n or G^r_n");
  int spec_n = 1;
  std::string spec_delete;
  std::string spec_format = "text";
  spectrum->add_option("--n", spec_n, "chain length")->required();
  spectrum->add_option("--delete", spec_delete, "deleted verticals, e.g. 1,3");
  spectrum->add_option("--format", spec_format, "text | json");

  // ratios
  auto* ratios = app.add_subcommand("ratios", "Kf/W and Kf*/Gut against 1/4");
  std::string ratio_list;
  std::string ratio_format = "text";
  ratios->add_option("--n", ratio_list, "comma-separated chain lengths")->required();
  ratios->add_option("--format", ratio_format, "text | csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "kchain: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*table) {
      out << render_table(parse_table_kind(table_kind), table_from, table_to, parse_format(table_format), as_printed);
      return kExitOk;
    }
    if (*spectrum) {
      const OutputFormat f = parse_format(spec_format);
      out << render_spectrum(ChainSpec(spec_n, parse_int_list(spec_delete)), f);
      return kExitOk;
    }
    if (*ratios) {
      const std::vector<int> lengths = parse_int_list(ratio_list);
      if (lengths.empty()) throw InvalidArgument("--n needs at least one value");
      for (int n : lengths)
        if (n < 1) throw InvalidArgument("chain lengths must be >= 1");
      out << render_ratios(lengths, parse_format(ratio_format));
      return kExitOk;
    }
    if (*verify) {
      SettingMap flags;
      const auto take = [&flags](CLI::Option* opt, const std::string& key, const std::string& value) {
        if (opt->count() > 0) flags[key] = value;
      };
      take(o_max_n, "max_n", v_max_n);
      take(o_mode, "mode", v_mode);
      take(o_seed, "seed", v_seed);
      take(o_jobs, "jobs", v_jobs);
      take(o_sample, "sample_size", v_sample);
      take(o_format, "format", v_format);
      const VerifyOptions opt = verify_options_from(resolve_settings(verify_defaults(), config_path, flags));
      const SweepResult result = run_sweep(opt);
      out << render_sweep(opt, result);
      return result.passed() ? kExitOk : kExitMismatch;
    }
  } catch (const InvalidArgument& e) {
    err << "kchain: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kchain::harness
