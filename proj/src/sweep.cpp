#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "rindler/measures.hpp"
#include "rindler/sweep.hpp"

namespace rindler {

namespace {

std::vector<double> axis(const SweepConfig& cfg) {
  std::vector<double> values(cfg.steps);
  const double span = cfg.r_end - cfg.r_start;
  for (std::size_t i = 0; i < cfg.steps; ++i) {
    values[i] = cfg.r_start + span * static_cast<double>(i) / static_cast<double>(cfg.steps - 1);
  }
  values.back() = cfg.r_end;
  return values;
}

}  // namespace

std::vector<AccelerationTriple> sweep_points(const SweepConfig& config) {
  const auto r = axis(config);
  std::vector<AccelerationTriple> points;
  if (config.mode == SweepMode::EQUAL) {
    points.reserve(r.size());
    for (double x : r) points.push_back(AccelerationTriple::equal(x));
  } else {
    points.reserve(r.size() * r.size() * r.size());
    for (double ra : r)
      for (double rb : r)
        for (double rc : r) points.emplace_back(std::array<double, 3>{ra, rb, rc});
  }
  return points;
}

MeasureRecord evaluate_point(StateFamily family, RindlerRegion region,
                             const AccelerationTriple& accel, std::span<const Measure> measures) {
  MeasureRecord rec;
  rec.family = family;
  rec.region = region;
  rec.r_a = accel.r()[0];
  rec.r_b = accel.r()[1];
  rec.r_c = accel.r()[2];
  const DensityMatrix rho = accelerated_channel(family, accel, region);
  for (Measure m : measures) {
    switch (m) {
      case Measure::FIDELITY:
        rec.fidelity = fidelity(rho, minkowski_state(family));
        break;
      case Measure::CAPACITY: {
        const auto cap = average_capacity(rho);
        rec.c_ab = cap.c_ab;
        rec.c_ac = cap.c_ac;
        rec.c_bc = cap.c_bc;
        rec.capacity_avg = cap.average;
        break;
      }
      case Measure::NEGATIVITY: {
        const auto neg = negativity_summary(rho);
        rec.neg_a_bc = neg.n_a_bc;
        rec.neg_b_ac = neg.n_b_ac;
        rec.neg_c_ab = neg.n_c_ab;
        rec.neg_mean = neg.mean;
        break;
      }
    }
  }
  return rec;
}

std::vector<MeasureRecord> run_sweep(const SweepConfig& config) {
  config.validate();
  const auto points = sweep_points(config);

  struct Task {
    StateFamily family;
    RindlerRegion region;
    std::size_t point;
  };
  std::vector<Task> tasks;
  for (auto family : kAllFamilies) {
    if (std::find(config.families.begin(), config.families.end(), family) == config.families.end()) continue;
    for (auto region : kAllRegions) {
      if (std::find(config.regions.begin(), config.regions.end(), region) == config.regions.end()) continue;
      for (std::size_t p = 0; p < points.size(); ++p) tasks.push_back({family, region, p});
    }
  }

  std::vector<MeasureRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::size_t error_task = tasks.size();
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || failed.load()) return;
      const Task& t = tasks[i];
      try {
        records[i] = evaluate_point(t.family, t.region, points[t.point], config.measures);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        // Keep the earliest failing task so the report does not depend on scheduling.
        if (i < error_task) {
          error_task = i;
          error = std::current_exception();
        }
        failed.store(true);
      }
    }
  };

  std::size_t threads = config.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                            : config.threads;
  threads = std::min(threads, std::max<std::size_t>(tasks.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  if (error) {
    const Task& t = tasks[error_task];
    const auto& r = points[t.point].r();
    try {
      std::rethrow_exception(error);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "sweep failed at family " << to_string(t.family) << ", region " << to_string(t.region)
          << ", r = (" << r[0] << ", " << r[1] << ", " << r[2] << "): " << e.what();
      throw NumericInvariantError(msg.str());
    }
  }
  return records;
}

}  // namespace rindler
