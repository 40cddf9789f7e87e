// rindler: acceleration sweeps and closed-form audits from the command line.
//
//   rindler sweep [--state ...] [--region ...] [--r-start x] [--r-end x] [--steps n]
//                 [--mode equal|grid] [--measures list] [--out path] [--format csv|jsonl]
//                 [--plot path] [--config path] [--threads n]
//   rindler check [--samples n] [--seed n] [--strict] [--out path]
//
// Exit status: 0 success, 1 usage/config error, 2 numeric-invariant violation,
// 3 strict-mode audit failure.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "rindler/closed_forms.hpp"
#include "rindler/output.hpp"
#include "rindler/plot.hpp"
#include "rindler/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitStrict = 3;

const char* kUsage =
    "usage: rindler <sweep|check> [options]\n"
    "  sweep  run an acceleration sweep and write CSV/JSONL (and optionally SVG)\n"
    "  check  audit the reference closed forms against the first-principles pipeline\n"
    "run 'rindler <command> --help' for options\n";

const char* kSweepHelp =
    "rindler sweep options:\n"
    "  --state {w|ghz|ghz-like|all}   repeatable, default all\n"
    "  --region {I|II|both}           default both\n"
    "  --r-start <float>              default 0\n"
    "  --r-end <float>                default pi/4\n"
    "  --steps <int>                  default 100 (>= 2; <= 64 in grid mode)\n"
    "  --mode {equal|grid}            default equal\n"
    "  --measures <list>              comma list of fidelity,capacity,negativity (default all)\n"
    "  --out <path>                   default '-' (stdout)\n"
    "  --format {csv|jsonl}           default csv\n"
    "  --plot <path>                  write an SVG chart (equal mode only)\n"
    "  --config <path>                'key = value' file; flags override it\n"
    "  --threads <int>                worker threads, 0 = all cores (default 1)\n";

int run_sweep_command(const std::vector<std::string>& args) {
  for (const auto& a : args) {
    if (a == "--help" || a == "-h") {
      std::cout << kSweepHelp;
      return kExitOk;
    }
  }
  rindler::SweepConfig cfg;
  try {
    cfg = rindler::parse_sweep_config(args);
  } catch (const rindler::UsageError& e) {
    std::cerr << "rindler sweep: " << e.what() << "\n";
    return kExitUsage;
  }
  if (cfg.plot_path && cfg.mode == rindler::SweepMode::GRID) {
    std::cerr << "rindler sweep: --plot needs equal mode; grid sweeps have no single r axis\n";
    return kExitUsage;
  }
  try {
    const auto records = rindler::run_sweep(cfg);
    rindler::write_records(records, cfg.format, cfg.output_path);
    if (cfg.plot_path) rindler::emit_plot(records, *cfg.plot_path);
  } catch (const rindler::NumericInvariantError& e) {
    std::cerr << "rindler sweep: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const rindler::OutputError& e) {
    std::cerr << "rindler sweep: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_check_command(std::vector<std::string> args) {
  CLI::App app{"rindler check: audit the reference closed forms"};
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  bool strict = false;
  std::string out_path = "-";
  app.add_option("--samples", samples, "random acceleration triples per form")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "sampling seed");
  app.add_flag("--strict", strict, "fail (exit 3) when any max error exceeds 1e-10");
  app.add_option("--out", out_path, "report path, '-' for stdout");
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "rindler check: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<rindler::DiscrepancyReport> reports;
  try {
    for (const auto& id : rindler::all_closed_form_ids()) reports.push_back(rindler::audit(id, samples, seed));
  } catch (const rindler::NumericInvariantError& e) {
    std::cerr << "rindler check: " << e.what() << "\n";
    return kExitNumeric;
  }
  const std::string text = rindler::format_reports(reports);
  if (out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!(out << text)) {
      std::cerr << "rindler check: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
  }
  if (strict) {
    for (const auto& r : reports) {
      if (r.max_error() > rindler::kAuditMismatchThreshold) {
        std::cerr << "rindler check: " << rindler::label(r.id) << " max error " << r.max_error()
                  << " exceeds 1e-10\n";
        return kExitStrict;
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return kExitUsage;
  }
  const std::string command = argv[1];
  std::vector<std::string> rest(argv + 2, argv + argc);
  if (command == "sweep") return run_sweep_command(rest);
  if (command == "check") return run_check_command(std::move(rest));
  if (command == "--help" || command == "-h") {
    std::cout << kUsage;
    return kExitOk;
  }
  std::cerr << "rindler: unknown command '" << command << "'\n" << kUsage;
  return kExitUsage;
}
