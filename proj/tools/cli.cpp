/*
   Copyright 2026 The psibounds Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <psibounds/cli.hpp>

#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include <psibounds/bounds.hpp>
#include <psibounds/format.hpp>
#include <psibounds/oracle.hpp>
#include <psibounds/polygamma.hpp>
#include <psibounds/verifier.hpp>

namespace psib::cli {

namespace {

std::string shortest(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

const std::map<std::string, std::function<double(double)>>& kernels() {
  static const std::map<std::string, std::function<double(double)>> table = {
      {"digamma", [](double x) { return digamma(x); }},
      {"trigamma", [](double x) { return trigamma(x); }},
      {"tetragamma", [](double x) { return tetragamma(x); }},
      {"phi", [](double x) { return phi(x); }},
      {"f", [](double x) { return f_func(x); }},
      {"fprime", [](double x) { return f_prime(x); }},
      {"positivity", [](double x) { return positivity_expr(x); }},
  };
  return table;
}

struct Options {
  std::string fn;
  double x = 0.0;
  bool psi = false;
  bool harmonic = false;
  std::optional<std::int64_t> n;
  std::optional<double> bound_x;
  double grid_start = 1e-3;
  double grid_stop = 1e3;
  std::size_t points = 100'000;
  std::int64_t n_max = 10'000;
  unsigned threads = 1;
  std::string report_csv;
  std::int64_t table_n_max = 0;
  std::string out_path;
};

int cmd_eval(const Options& o, std::ostream& out) {
  const double value = kernels().at(o.fn)(o.x);
  out << format_sci17(value) << '\n';
  return kExitOk;
}

int cmd_bound(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.psi == o.harmonic) {
    err << "bound: pass exactly one of --psi or --harmonic\n";
    return kExitUsage;
  }
  if (o.psi) {
    if (!o.bound_x) {
      err << "bound --psi: --x is required\n";
      return kExitUsage;
    }
    const Interval enc = psi_enclosure(*o.bound_x);
    out << format_fixed17(enc.lo) << " < psi(" << shortest(*o.bound_x) << ") < "
        << format_fixed17(enc.hi) << '\n';
    return kExitOk;
  }
  if (!o.n) {
    err << "bound --harmonic: --n is required\n";
    return kExitUsage;
  }
  const HarmonicIndex n(*o.n);
  const Interval enc = harmonic_enclosure(n);
  out << format_fixed17(enc.lo) << (enc.lo_strict ? " < " : " <= ") << "H_" << n.value()
      << (enc.hi_strict ? " < " : " <= ") << format_fixed17(enc.hi) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  GridSpec grid;
  grid.start = o.grid_start;
  grid.stop = o.grid_stop;
  grid.count = o.points;
  VerifierConfig config = VerifierConfig::with_grid(grid);
  if (o.n_max < 1) {
    err << "n must be >= 1\n";
    return kExitUsage;
  }
  config.n_max = static_cast<std::uint64_t>(o.n_max);
  config.eval.threads = o.threads;
  const auto reports = run_all(config);
  out << reports_to_text(reports);
  for (const auto& r : reports) {
    if (!r.error.empty()) {
      err << r.property_name << ": " << r.error << '\n';
    }
  }
  if (!o.report_csv.empty()) {
    std::ofstream csv(o.report_csv, std::ios::binary);
    csv << reports_to_csv(reports);
    if (!csv) {
      err << "cannot write " << o.report_csv << '\n';
      return kExitUsage;
    }
  }
  return all_passed(reports) ? kExitOk : kExitVerificationFailed;
}

int cmd_table(const Options& o, std::ostream& err) {
  if (o.table_n_max < 1) {
    err << "n must be >= 1\n";
    return kExitUsage;
  }
  const auto n_max = static_cast<std::uint64_t>(o.table_n_max);
  if (n_max > kDefaultHarmonicCap) {
    err << "n-max exceeds cap of " << kDefaultHarmonicCap << '\n';
    return kExitUsage;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "cannot write " << o.out_path << '\n';
    return kExitUsage;
  }
  file << "n,H_exact,lower,upper,slack_lower,slack_upper\n";
  HarmonicSweep sweep;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const ExactRational& h = sweep.advance();
    const Interval enc = harmonic_enclosure(static_cast<std::int64_t>(n));
    const double slack_lower = round_to_double(h.value() - ExactRational::from_double(enc.lo).value());
    const double slack_upper = round_to_double(ExactRational::from_double(enc.hi).value() - h.value());
    file << n << ',' << format_g17(h.to_double()) << ',' << format_g17(enc.lo) << ','
         << format_g17(enc.hi) << ',' << format_g17(slack_lower) << ',' << format_g17(slack_upper)
         << '\n';
  }
  file.close();
  if (!file) {
    err << "cannot write " << o.out_path << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digamma-family kernels, sharp psi / harmonic-number enclosures and their verification"};
  app.name("psibounds");
  app.require_subcommand(1, 1);

  Options o;

  auto* eval = app.add_subcommand("eval", "Evaluate one kernel at x");
  std::vector<std::string> names;
  for (const auto& [name, fn] : kernels()) {
    names.push_back(name);
  }
  eval->add_option("--fn", o.fn, "Kernel name")->required()->check(CLI::IsMember(names));
  eval->add_option("--x", o.x, "Abscissa, x > 0")->required();

  auto* bound = app.add_subcommand("bound", "Print a sharp enclosure of psi(x) or H_n");
  auto* psi_flag = bound->add_flag("--psi", o.psi, "Enclose psi(x)");
  auto* harmonic_flag = bound->add_flag("--harmonic", o.harmonic, "Enclose H_n");
  psi_flag->excludes(harmonic_flag);
  bound->add_option("--x", o.bound_x, "Abscissa for --psi");
  bound->add_option("--n", o.n, "Index for --harmonic");

  auto* verify = app.add_subcommand("verify", "Check every property and print one line each");
  verify->add_option("--grid-start", o.grid_start, "First grid point")->capture_default_str();
  verify->add_option("--grid-stop", o.grid_stop, "Last grid point")->capture_default_str();
  verify->add_option("--points", o.points, "Log-spaced grid size")->capture_default_str();
  verify->add_option("--n-max", o.n_max, "Largest harmonic index checked")->capture_default_str();
  verify->add_option("--threads", o.threads, "Evaluation threads")->capture_default_str();
  verify->add_option("--report-csv", o.report_csv, "Also write the reports as CSV");

  auto* table = app.add_subcommand("table", "Write a CSV of H_n against its enclosure");
  table->add_option("--n-max", o.table_n_max, "Rows 1..n-max")->required();
  table->add_option("--out", o.out_path, "Output CSV path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      return cmd_eval(o, out);
    }
    if (bound->parsed()) {
      return cmd_bound(o, out, err);
    }
    if (verify->parsed()) {
      return cmd_verify(o, out, err);
    }
    if (table->parsed()) {
      return cmd_table(o, err);
    }
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace psib::cli
