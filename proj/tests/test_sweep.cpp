#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "rindler/measures.hpp"
#include "rindler/output.hpp"
#include "rindler/plot.hpp"
#include "rindler/sweep.hpp"

using namespace rindler;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

SweepConfig parse(std::initializer_list<const char*> args, std::optional<std::string> text = std::nullopt) {
  std::vector<std::string> v(args.begin(), args.end());
  return parse_sweep_config(v, std::move(text));
}

std::string csv(std::span<const MeasureRecord> records) {
  std::ostringstream out;
  write_csv(records, out);
  return out.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string usage_message(std::initializer_list<const char*> args,
                          std::optional<std::string> text = std::nullopt) {
  try {
    parse(args, std::move(text));
  } catch (const UsageError& e) {
    return e.what();
  }
  return "<accepted>";
}

// First y coordinate and whether the sequence never rises on screen.
std::pair<double, bool> polyline_profile(const std::string& svg, const std::string& id) {
  const auto at = svg.find("id=\"" + id + "\"");
  REQUIRE(at != std::string::npos);
  const auto p0 = svg.find("points=\"", at) + 8;
  const auto p1 = svg.find('"', p0);
  std::istringstream pts(svg.substr(p0, p1 - p0));
  std::string pair;
  std::vector<double> ys;
  while (pts >> pair) ys.push_back(std::stod(pair.substr(pair.find(',') + 1)));
  bool down = true;
  for (std::size_t i = 1; i < ys.size(); ++i) down = down && ys[i] >= ys[i - 1] - 1e-9;
  return {ys.front(), down};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("sweep-cli") {

TEST_CASE("parse_sweep_config examples") {
  const auto cfg = parse({"--state", "ghz", "--region", "I", "--steps", "3", "--r-start", "0", "--r-end", "0.5"});
  CHECK(cfg.families == std::vector{StateFamily::GHZ});
  CHECK(cfg.regions == std::vector{RindlerRegion::I});
  CHECK(cfg.steps == 3);
  CHECK(cfg.r_start == 0.0);
  CHECK(cfg.r_end == 0.5);

  const auto msg = usage_message({"--state", "bogus"});
  CHECK(msg.find("bogus") != std::string::npos);
  CHECK(msg.find("ghz-like") != std::string::npos);

  const auto def = parse({});
  const SweepConfig fresh;
  CHECK(def.families == fresh.families);
  CHECK(def.regions == fresh.regions);
  CHECK(def.steps == 100);
  CHECK(def.mode == SweepMode::EQUAL);
  CHECK(def.measures.size() == 3);
  CHECK(def.r_end == kQuarterPi);
  CHECK(def.output_path == "-");
  CHECK(!def.plot_path);
}

TEST_CASE("parse_sweep_config rejections") {
  CHECK(usage_message({"--frobnicate"}).find("frobnicate") != std::string::npos);
  CHECK(usage_message({"--steps", "1"}).find("1") != std::string::npos);
  CHECK(usage_message({"--r-end", "0.9"}).find("0.9") != std::string::npos);
  CHECK(usage_message({"--measures", "fidelity,purity"}).find("purity") != std::string::npos);
  CHECK(usage_message({"--region", "III"}).find("III") != std::string::npos);
  CHECK(usage_message({"--mode", "grid", "--steps", "65"}).find("65") != std::string::npos);
  CHECK(usage_message({"--r-start", "0.5", "--r-end", "0.2"}) != "<accepted>");
  CHECK(usage_message({}, "steps 4\n").find("steps 4") != std::string::npos);
  CHECK(usage_message({}, "colour = red\n").find("colour") != std::string::npos);
}

TEST_CASE("parse_sweep_config list forms") {
  const auto cfg = parse({"--state", "w", "--state", "ghz-like", "--region", "both", "--measures", "negativity,fidelity"});
  CHECK(cfg.families == std::vector{StateFamily::W, StateFamily::GHZ_LIKE});
  CHECK(cfg.regions.size() == 2);
  CHECK(cfg.wants(Measure::NEGATIVITY));
  CHECK(cfg.wants(Measure::FIDELITY));
  CHECK(!cfg.wants(Measure::CAPACITY));
  CHECK(parse({"--state", "all"}).families.size() == 3);
  CHECK(parse({"--r-end", "0.7853981634"}).r_end == kQuarterPi);
}

TEST_CASE("config text with flag overrides") {
  const std::string text =
      "# demo\n"
      "state = ghz\n"
      "state = w   # second family\n"
      "steps = 7\n"
      "--mode = grid\n"
      "format = jsonl\n";
  const auto from_file = parse({}, text);
  CHECK(from_file.families == std::vector{StateFamily::W, StateFamily::GHZ});
  CHECK(from_file.steps == 7);
  CHECK(from_file.mode == SweepMode::GRID);
  CHECK(from_file.format == OutputFormat::JSONL);

  const auto overridden = parse({"--steps", "5", "--state", "ghz-like"}, text);
  CHECK(overridden.steps == 5);
  CHECK(overridden.families == std::vector{StateFamily::GHZ_LIKE});
  CHECK(overridden.mode == SweepMode::GRID);

  const auto path = std::filesystem::temp_directory_path() / "rindler_test_config.txt";
  std::ofstream(path) << "steps = 9\nregion = II\n";
  const auto disk = parse({"--config", path.c_str()});
  CHECK(disk.steps == 9);
  CHECK(disk.regions == std::vector{RindlerRegion::II});
  std::filesystem::remove(path);
  CHECK(usage_message({"--config", "/nonexistent/rindler.cfg"}).find("/nonexistent/rindler.cfg") != std::string::npos);
}

TEST_CASE("sweep_points") {
  SweepConfig cfg;
  cfg.steps = 3;
  cfg.r_end = 0.5;
  auto pts = sweep_points(cfg);
  REQUIRE(pts.size() == 3);
  CHECK(pts[1].r()[0] == doctest::Approx(0.25));
  CHECK(pts[2].r() == std::array<double, 3>{0.5, 0.5, 0.5});

  cfg.mode = SweepMode::GRID;
  pts = sweep_points(cfg);
  REQUIRE(pts.size() == 27);
  CHECK(pts[1].r() == std::array<double, 3>{0.0, 0.0, 0.25});
  CHECK(pts[3].r() == std::array<double, 3>{0.0, 0.25, 0.0});
  CHECK(pts.back().r() == std::array<double, 3>{0.5, 0.5, 0.5});

  cfg.mode = SweepMode::EQUAL;
  cfg.steps = 100;
  cfg.r_end = kQuarterPi;
  CHECK(sweep_points(cfg).back().r()[0] == kQuarterPi);
}

TEST_CASE("run_sweep examples") {
  SweepConfig cfg;
  cfg.families = {StateFamily::GHZ};
  cfg.regions = {RindlerRegion::I};
  cfg.steps = 2;
  cfg.measures = {Measure::FIDELITY};
  auto recs = run_sweep(cfg);
  REQUIRE(recs.size() == 2);
  CHECK(std::abs(*recs[0].fidelity - 1.0) <= 1e-12);
  CHECK(std::abs(*recs[1].fidelity - 0.4892766952966) <= 1e-12);
  CHECK(!recs[0].capacity_avg);
  CHECK(!recs[0].neg_mean);

  cfg.regions = {RindlerRegion::II};
  cfg.r_end = 0.0;
  recs = run_sweep(cfg);
  REQUIRE(recs.size() == 2);
  for (const auto& r : recs) CHECK(std::abs(*r.fidelity - 0.5) <= 1e-12);

  cfg.families = {StateFamily::W};
  cfg.measures = {Measure::NEGATIVITY};
  recs = run_sweep(cfg);
  for (const auto& r : recs) {
    REQUIRE(r.neg_mean);
    CHECK(std::abs(*r.neg_mean) <= 1e-12);
    CHECK(!r.fidelity);
  }
}

TEST_CASE("run_sweep ordering") {
  SweepConfig cfg;
  cfg.steps = 4;
  const auto recs = run_sweep(cfg);
  REQUIRE(recs.size() == 3 * 2 * 4);
  std::size_t i = 0;
  for (auto f : kAllFamilies)
    for (auto reg : kAllRegions)
      for (std::size_t k = 0; k < 4; ++k, ++i) {
        CHECK(recs[i].family == f);
        CHECK(recs[i].region == reg);
      }
}

TEST_CASE("format_real") {
  CHECK(format_real(0.0) == "0.000000000000");
  CHECK(format_real(1.0) == "1.00000000000");
  CHECK(format_real(0.5) == "0.500000000000");
  CHECK(format_real(0.4892766952966) == "0.489276695297");
  CHECK(format_real(2.0) == "2.00000000000");
  CHECK(format_real(0.9999999999996) == "1.00000000000");
  CHECK(format_real(-0.25) == "-0.250000000000");
  CHECK(format_real(1.5e-5) == "0.0000150000000000");
  CHECK(format_real(2.5e7) == "2.50000000000e+07");
}

TEST_CASE("write_csv examples") {
  MeasureRecord rec;
  rec.family = StateFamily::GHZ;
  rec.region = RindlerRegion::I;
  rec.fidelity = 1.0;
  const std::vector<MeasureRecord> one{rec};
  CHECK(csv(one) == std::string(kCsvHeader) + "\nGHZ,I,0.000000000000,0.000000000000,0.000000000000,1.00000000000,,,,,,,,\n");
  CHECK(csv({}) == std::string(kCsvHeader) + "\n");

  SweepConfig cfg;
  cfg.steps = 6;
  CHECK(csv(run_sweep(cfg)) == csv(run_sweep(cfg)));
}

TEST_CASE("write_jsonl") {
  SweepConfig cfg;
  cfg.steps = 3;
  cfg.measures = {Measure::FIDELITY, Measure::NEGATIVITY};
  const auto recs = run_sweep(cfg);
  std::ostringstream out;
  write_jsonl(recs, out);
  std::istringstream in(out.str());
  std::string line;
  std::size_t n = 0;
  const auto header = split(kCsvHeader, ',');
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(j.size() == header.size());
    for (const auto& h : header) CHECK(j.contains(h));
    CHECK(j["capacity_avg"].is_null());
    CHECK(j["fidelity"].get<double>() == doctest::Approx(*recs[n].fidelity).epsilon(1e-12));
    CHECK(j["family"].get<std::string>() == std::string(to_string(recs[n].family)));
    ++n;
  }
  CHECK(n == recs.size());
}

TEST_CASE("CSV values round-trip against recomputation") {
  SweepConfig cfg;
  cfg.steps = 7;
  cfg.mode = SweepMode::GRID;
  cfg.steps = 3;
  cfg.families = {StateFamily::W, StateFamily::GHZ_LIKE};
  const auto text = csv(run_sweep(cfg));
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  const auto header = split(line, ',');
  std::size_t rows = 0;
  const std::vector<Measure> all{Measure::FIDELITY, Measure::CAPACITY, Measure::NEGATIVITY};
  while (std::getline(in, line)) {
    const auto cells = split(line, ',');
    REQUIRE(cells.size() == header.size());
    const auto fam = parse_family(cells[0]);
    const auto reg = parse_region(cells[1]);
    const AccelerationTriple a({std::stod(cells[2]), std::stod(cells[3]), std::stod(cells[4])});
    const auto rec = evaluate_point(fam, reg, a, all);
    const std::optional<double> fresh[] = {rec.fidelity, rec.c_ab, rec.c_ac, rec.c_bc, rec.capacity_avg,
                                           rec.neg_a_bc, rec.neg_b_ac, rec.neg_c_ab, rec.neg_mean};
    for (std::size_t k = 0; k < 9; ++k) CHECK(std::abs(std::stod(cells[5 + k]) - *fresh[k]) <= 1e-9);
    ++rows;
  }
  CHECK(rows == 2 * 2 * 27);
}

TEST_CASE("parallel and serial sweeps are byte-identical") {
  SweepConfig cfg;
  cfg.steps = 25;
  const auto serial = csv(run_sweep(cfg));
  for (std::size_t t : {2U, 3U, 8U, 0U}) {
    cfg.threads = t;
    CHECK(csv(run_sweep(cfg)) == serial);
  }
}

TEST_CASE("unwritable output path") {
  const std::vector<MeasureRecord> none;
  try {
    write_records(none, OutputFormat::CSV, "/nonexistent-dir/out.csv");
    FAIL("expected OutputError");
  } catch (const OutputError& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/out.csv") != std::string::npos);
  }
  MeasureRecord rec;
  rec.fidelity = 1.0;
  const std::vector<MeasureRecord> one{rec};
  CHECK_THROWS_AS(emit_plot(one, "/nonexistent-dir/plot.svg"), OutputError);
}

TEST_CASE("write_records to a file") {
  SweepConfig cfg;
  cfg.steps = 3;
  const auto recs = run_sweep(cfg);
  const auto path = std::filesystem::temp_directory_path() / "rindler_test_out.csv";
  write_records(recs, OutputFormat::CSV, path.string());
  CHECK(slurp(path) == csv(recs));
  std::filesystem::remove(path);
}

TEST_CASE("SVG structure") {
  SweepConfig cfg;
  cfg.regions = {RindlerRegion::I};
  cfg.measures = {Measure::FIDELITY};
  cfg.steps = 20;
  const auto svg = render_svg(run_sweep(cfg));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<polyline") == 3);
  CHECK(svg.find(">GHZ</text>") != std::string::npos);
  CHECK(svg.find(">GHZ-like</text>") != std::string::npos);
  CHECK(svg.find(">W</text>") != std::string::npos);

  cfg.families = {StateFamily::W};
  const auto single = render_svg(run_sweep(cfg));
  CHECK(count(single, "<polyline") == 1);
  CHECK(single.find(">GHZ</text>") == std::string::npos);
  CHECK(single.find(">W</text>") != std::string::npos);
}

TEST_CASE("SVG rejects grid sweeps") {
  SweepConfig cfg;
  cfg.mode = SweepMode::GRID;
  cfg.steps = 3;
  const auto recs = run_sweep(cfg);
  try {
    render_svg(recs);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("grid") != std::string::npos);
  }
  CHECK_THROWS_AS(render_svg(std::vector<MeasureRecord>{}), std::invalid_argument);
}

TEST_CASE("region-I GHZ negativity curve") {
  SweepConfig cfg;
  cfg.regions = {RindlerRegion::I};
  cfg.measures = {Measure::NEGATIVITY};
  cfg.steps = 30;
  const auto recs = run_sweep(cfg);
  const auto charts = plan_charts(recs);
  REQUIRE(charts.size() == 1);
  const auto svg = render_svg(recs);
  const auto [first_y, decreasing] = polyline_profile(svg, curve_id(Measure::NEGATIVITY, RindlerRegion::I, StateFamily::GHZ));
  CHECK(format_px(first_y) == format_px(charts[0].px_y(1.0)));
  CHECK(decreasing);
  CHECK(curve_id(Measure::FIDELITY, RindlerRegion::II, StateFamily::GHZ_LIKE) == "fidelity-II-GHZ-like");
}

TEST_CASE("plot files are deterministic") {
  SweepConfig cfg;
  cfg.steps = 15;
  const auto recs = run_sweep(cfg);
  const auto dir = std::filesystem::temp_directory_path();
  emit_plot(recs, (dir / "rindler_a.svg").string());
  emit_plot(recs, (dir / "rindler_b.svg").string());
  CHECK(slurp(dir / "rindler_a.svg") == slurp(dir / "rindler_b.svg"));
  CHECK(slurp(dir / "rindler_a.svg") == render_svg(recs));
  std::filesystem::remove(dir / "rindler_a.svg");
  std::filesystem::remove(dir / "rindler_b.svg");
}

}  // TEST_SUITE
