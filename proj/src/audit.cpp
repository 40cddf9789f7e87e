#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "rindler/closed_forms.hpp"
#include "rindler/measures.hpp"

namespace rindler {

namespace {

struct Hypothesis {
  ClosedFormId id;
  const char* description;
  // Expected pipeline-minus-closed-form residual.
  std::function<double(const AccelerationTriple&)> residual;
};

const std::vector<Hypothesis>& catalogued_slips() {
  static const std::vector<Hypothesis> slips{
      {{StateFamily::GHZ, RindlerRegion::I, ClosedFormKind::FIDELITY},
       "missing s1^2 s2^2 s3^2/4 term",
       [](const AccelerationTriple& a) {
         const double s = a.sin_r(0) * a.sin_r(1) * a.sin_r(2);
         return s * s / 4.0;
       }},
      {{StateFamily::W, RindlerRegion::II, ClosedFormKind::FIDELITY},
       "2 s1 s3 c2^2 printed twice where the second should read 2 s1 s2 c3^2",
       [](const AccelerationTriple& a) {
         const double c2 = a.cos_r(1), c3 = a.cos_r(2);
         const double s1 = a.sin_r(0), s2 = a.sin_r(1), s3 = a.sin_r(2);
         return 2.0 * (s1 * s2 * c3 * c3 - s1 * s3 * c2 * c2) / 9.0;
       }},
  };
  return slips;
}

const Hypothesis* find_slip(const ClosedFormId& id) {
  for (const auto& h : catalogued_slips())
    if (h.id == id) return &h;
  return nullptr;
}

ComplexMatrix hermitized(const ComplexMatrix& m) { return 0.5 * (m + adjoint(m)); }

double overlap(const ComplexMatrix& m, const PureState& psi) {
  const auto& v = psi.amplitudes();
  Complex s{};
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += std::conj(v[i]) * m(i, j) * v[j];
  return s.real();
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

std::string complex_text(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f%+.12fi", z.real(), z.imag());
  return buf;
}

}  // namespace

std::vector<AccelerationTriple> audit_samples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, kMaxRindlerParameter);
  std::vector<AccelerationTriple> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double ra = dist(rng);
    const double rb = dist(rng);
    const double rc = dist(rng);
    out.emplace_back(std::array<double, 3>{ra, rb, rc});
  }
  return out;
}

DiscrepancyReport audit(const ClosedFormId& id, std::size_t sample_count, std::uint64_t seed) {
  if (sample_count == 0) throw std::invalid_argument("audit: sample_count must be positive");
  DiscrepancyReport report;
  report.id = id;
  report.samples = sample_count;
  report.seed = seed;

  const PureState target = minkowski_state(id.family);
  const Hypothesis* slip = find_slip(id);
  double slip_deviation = 0.0;
  double worst = -1.0;
  double zero_error = 0.0;

  auto samples = audit_samples(sample_count, seed);
  // The zero-acceleration limit is checked separately and does not count as a sample.
  const AccelerationTriple at_rest;
  for (std::size_t n = 0; n <= samples.size(); ++n) {
    const bool rest = n == samples.size();
    const AccelerationTriple& accel = rest ? at_rest : samples[n];
    const DensityMatrix rho = accelerated_channel(id.family, accel, id.region);
    const double f_pipeline = fidelity(rho, target);

    if (id.kind == ClosedFormKind::FIDELITY) {
      const double f_closed = closed_form_fidelity(id, accel);
      const double err = std::abs(f_closed - f_pipeline);
      if (rest) {
        zero_error = err;
        continue;
      }
      if (slip) {
        slip_deviation = std::max(slip_deviation, std::abs((f_pipeline - f_closed) - slip->residual(accel)));
      }
      if (err > worst) {
        worst = err;
        report.worst_r = accel.r();
      }
      report.max_fidelity_error = std::max(report.max_fidelity_error, err);
      continue;
    }

    const ComplexMatrix raw = closed_form_density(id, accel);
    const ComplexMatrix herm = hermitized(raw);
    const double entry_err = max_abs_diff(herm, rho.matrix());
    if (rest) {
      zero_error = entry_err;
      continue;
    }
    report.max_raw_asymmetry = std::max(report.max_raw_asymmetry, hermitian_asymmetry(raw));
    report.max_trace_deviation = std::max(report.max_trace_deviation, std::abs(trace(raw) - Complex{1.0}));
    report.max_fidelity_error =
        std::max(report.max_fidelity_error, std::abs(overlap(herm, target) - f_pipeline));
    report.max_abs_entry_error = std::max(report.max_abs_entry_error, entry_err);
    if (entry_err > worst) {
      worst = entry_err;
      report.worst_r = accel.r();
      report.mismatched_entries.clear();
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
          if (std::abs(herm(i, j) - rho.matrix()(i, j)) > kAuditMismatchThreshold) {
            report.mismatched_entries.push_back(
                {ket_label(i), ket_label(j), herm(i, j), rho.matrix()(i, j)});
          }
    }
  }

  std::ostringstream note;
  const double err = report.max_error();
  if (slip && slip_deviation <= kAuditMismatchThreshold && err > kAuditMismatchThreshold) {
    report.residual_match = ResidualMatch{slip->description, slip_deviation};
    note << "residual (pipeline - closed form) explained at every sample by: " << slip->description
         << " (max deviation " << sci(slip_deviation) << ")";
  } else if (err <= kAuditMismatchThreshold && report.max_raw_asymmetry <= kAuditMismatchThreshold &&
             report.max_trace_deviation <= kTraceTolerance) {
    note << "agrees with the first-principles reduction at every sample";
  } else {
    note << "unexplained residual";
    if (id.kind == ClosedFormKind::DENSITY) {
      note << "; " << report.mismatched_entries.size() << " of 64 entries differ at the worst sample"
           << "; raw asymmetry up to " << sci(report.max_raw_asymmetry)
           << "; trace deviates from 1 by up to " << sci(report.max_trace_deviation);
    }
  }
  report.zero_acceleration_error = zero_error;
  note << "; zero-acceleration error " << sci(zero_error);
  report.residual_formula_note = note.str();
  return report;
}

std::string format_report(const DiscrepancyReport& r) {
  std::ostringstream out;
  out << "[" << label(r.id) << "]\n";
  out << "kind = " << (r.id.kind == ClosedFormKind::DENSITY ? "DENSITY" : "FIDELITY") << "\n";
  out << "family = " << to_string(r.id.family) << "\n";
  out << "region = " << to_string(r.id.region) << "\n";
  out << "samples = " << r.samples << "\n";
  out << "seed = " << r.seed << "\n";
  out << "max_abs_entry_error = " << sci(r.max_abs_entry_error) << "\n";
  out << "max_fidelity_error = " << sci(r.max_fidelity_error) << "\n";
  if (r.id.kind == ClosedFormKind::DENSITY) {
    out << "max_trace_deviation = " << sci(r.max_trace_deviation) << "\n";
    out << "max_raw_asymmetry = " << sci(r.max_raw_asymmetry) << "\n";
  }
  out << "zero_acceleration_error = " << sci(r.zero_acceleration_error) << "\n";
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12f %.12f %.12f", r.worst_r[0], r.worst_r[1], r.worst_r[2]);
  out << "worst_r = " << buf << "\n";
  out << "mismatched_entries = " << r.mismatched_entries.size() << "\n";
  for (const auto& e : r.mismatched_entries) {
    out << "  |" << e.row_ket << "><" << e.col_ket << "| closed_form " << complex_text(e.closed_form)
        << " pipeline " << complex_text(e.pipeline) << "\n";
  }
  out << "note = " << r.residual_formula_note << "\n";
  return out.str();
}

std::string format_reports(std::span<const DiscrepancyReport> reports) {
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out += "\n";
    out += format_report(reports[i]);
  }
  return out;
}

}  // namespace rindler
