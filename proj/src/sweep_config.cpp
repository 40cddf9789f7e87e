#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "rindler/sweep.hpp"

namespace rindler {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

double parse_real(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty() || !std::isfinite(x)) {
    throw UsageError("--" + key + ": '" + value + "' is not a finite number");
  }
  return x;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
  if (value.empty() || !std::all_of(value.begin(), value.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw UsageError("--" + key + ": '" + value + "' is not a nonnegative integer");
  }
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    throw UsageError("--" + key + ": '" + value + "' is out of range");
  }
}

// r values within this distance above pi/4 are read as pi/4 so that decimal
// spellings of the endpoint are accepted.
constexpr double kEndpointSlack = 1e-9;

double parse_r(const std::string& key, const std::string& value) {
  double r = parse_real(key, value);
  if (r > kMaxRindlerParameter && r <= kMaxRindlerParameter + kEndpointSlack) r = kMaxRindlerParameter;
  if (r < 0.0 || r > kMaxRindlerParameter) {
    throw UsageError("--" + key + ": '" + value + "' outside [0, pi/4]");
  }
  return r;
}

// Applies one option (already split into values) to the config.
void apply(SweepConfig& cfg, const std::string& key, const std::vector<std::string>& values) {
  auto single = [&]() -> const std::string& {
    if (values.size() != 1) throw UsageError("--" + key + " expects exactly one value");
    return values.front();
  };
  if (key == "state") {
    cfg.families = parse_family_list(values);
  } else if (key == "region") {
    cfg.regions = parse_region_list(values);
  } else if (key == "r-start") {
    cfg.r_start = parse_r(key, single());
  } else if (key == "r-end") {
    cfg.r_end = parse_r(key, single());
  } else if (key == "steps") {
    cfg.steps = parse_unsigned(key, single());
  } else if (key == "mode") {
    const std::string v = lowercase(single());
    if (v == "equal") cfg.mode = SweepMode::EQUAL;
    else if (v == "grid") cfg.mode = SweepMode::GRID;
    else throw UsageError("--mode: unknown mode '" + single() + "' (valid: equal, grid)");
  } else if (key == "measures") {
    cfg.measures = parse_measure_list(single());
  } else if (key == "out") {
    cfg.output_path = single();
  } else if (key == "format") {
    const std::string v = lowercase(single());
    if (v == "csv") cfg.format = OutputFormat::CSV;
    else if (v == "jsonl") cfg.format = OutputFormat::JSONL;
    else throw UsageError("--format: unknown format '" + single() + "' (valid: csv, jsonl)");
  } else if (key == "plot") {
    cfg.plot_path = single();
  } else if (key == "seed") {
    cfg.seed = parse_unsigned(key, single());
  } else if (key == "threads") {
    cfg.threads = parse_unsigned(key, single());
  } else {
    throw UsageError("unknown option '" + key + "'");
  }
}

const std::vector<std::string> kOptionKeys{"state", "region", "r-start", "r-end", "steps",
                                           "mode",  "measures", "out", "format", "plot",
                                           "seed",  "threads"};

std::vector<std::pair<std::string, std::vector<std::string>>> parse_config_text(
    const std::string& text) {
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineno) + ": expected 'key = value', got '" +
                       body + "'");
    }
    std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (key == "config") throw UsageError("config line " + std::to_string(lineno) + ": nested 'config'");
    if (std::find(kOptionKeys.begin(), kOptionKeys.end(), key) == kOptionKeys.end()) {
      throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    // Repeated state/region keys accumulate, like repeated flags.
    auto existing = std::find_if(entries.begin(), entries.end(),
                                 [&](const auto& e) { return e.first == key; });
    if (existing != entries.end() && (key == "state" || key == "region")) {
      existing->second.push_back(value);
    } else if (existing != entries.end()) {
      existing->second = {value};
    } else {
      entries.push_back({key, {value}});
    }
  }
  return entries;
}

}  // namespace

bool SweepConfig::wants(Measure m) const {
  return std::find(measures.begin(), measures.end(), m) != measures.end();
}

void SweepConfig::validate() const {
  if (families.empty()) throw UsageError("no state family selected");
  if (regions.empty()) throw UsageError("no region selected");
  if (measures.empty()) throw UsageError("no measure selected");
  if (steps < 2) throw UsageError("--steps: " + std::to_string(steps) + " is below the minimum of 2");
  if (mode == SweepMode::GRID && steps > kMaxGridSteps) {
    throw UsageError("--steps: " + std::to_string(steps) + " exceeds the grid-mode cap of 64");
  }
  if (r_start < 0.0 || r_end > kMaxRindlerParameter || r_start > r_end) {
    std::ostringstream msg;
    msg << "--r-start/--r-end: need 0 <= r-start <= r-end <= pi/4, got [" << r_start << ", "
        << r_end << "]";
    throw UsageError(msg.str());
  }
}

std::vector<StateFamily> parse_family_list(std::span<const std::string> tokens) {
  std::vector<StateFamily> out;
  for (const auto& token : tokens) {
    if (lowercase(token) == "all") {
      out.assign(kAllFamilies.begin(), kAllFamilies.end());
      continue;
    }
    try {
      out.push_back(parse_family(token));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--state: ") + e.what() + ", or all");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RindlerRegion> parse_region_list(std::span<const std::string> tokens) {
  std::vector<RindlerRegion> out;
  for (const auto& token : tokens) {
    if (lowercase(token) == "both") {
      out.assign(kAllRegions.begin(), kAllRegions.end());
      continue;
    }
    try {
      out.push_back(parse_region(token));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--region: ") + e.what() + ", or both");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Measure> parse_measure_list(std::string_view comma_list) {
  std::vector<Measure> out;
  std::size_t pos = 0;
  while (pos <= comma_list.size()) {
    const auto comma = std::min(comma_list.find(',', pos), comma_list.size());
    const std::string raw = trim(comma_list.substr(pos, comma - pos));
    const std::string token = lowercase(raw);
    if (token == "fidelity") out.push_back(Measure::FIDELITY);
    else if (token == "capacity") out.push_back(Measure::CAPACITY);
    else if (token == "negativity") out.push_back(Measure::NEGATIVITY);
    else if (token == "all") out = {Measure::FIDELITY, Measure::CAPACITY, Measure::NEGATIVITY};
    else throw UsageError("--measures: unknown measure '" + raw + "' (valid: fidelity, capacity, negativity, all)");
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SweepConfig parse_sweep_config(std::span<const std::string> args,
                               std::optional<std::string> config_text) {
  CLI::App app{"sweep"};
  app.allow_extras(false);
  std::map<std::string, std::vector<std::string>> given;
  for (const auto& key : kOptionKeys) {
    auto* opt = app.add_option("--" + key, given[key]);
    if (key == "state" || key == "region") {
      opt->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    } else {
      opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }
    opt->expected(1);
    opt->allow_extra_args(false);
  }
  std::string config_path;
  app.add_option("--config", config_path);

  // CLI11 consumes arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::string detail = e.what();
    throw UsageError(detail.empty() ? std::string("invalid arguments") : detail);
  }

  if (!config_text && !config_path.empty()) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw UsageError("--config: cannot read '" + config_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    config_text = buf.str();
  }

  SweepConfig cfg;
  if (config_text) {
    for (const auto& [key, values] : parse_config_text(*config_text)) apply(cfg, key, values);
  }
  for (const auto& key : kOptionKeys) {
    if (app.get_option("--" + key)->count() > 0) apply(cfg, key, given[key]);
  }
  cfg.validate();
  return cfg;
}

}  // namespace rindler
