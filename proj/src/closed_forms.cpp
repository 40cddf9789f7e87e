#include <cmath>
#include <stdexcept>

#include "rindler/closed_forms.hpp"

namespace rindler {

namespace {

std::size_t ket_index(const char* ket) {
  std::size_t index = 0;
  for (const char* p = ket; *p; ++p) index = (index << 1) | static_cast<std::size_t>(*p == '1');
  return index;
}

// Accumulates coefficient * |row><col| terms written with ket strings.
class KetSum {
 public:
  explicit KetSum(double prefactor) : prefactor_(prefactor), m_(8, 8) {}
  void add(const char* row, const char* col, double coefficient) {
    m_(ket_index(row), ket_index(col)) += prefactor_ * coefficient;
  }
  ComplexMatrix take() && { return std::move(m_); }

 private:
  double prefactor_;
  ComplexMatrix m_;
};

struct Coefficients {
  double c1, c2, c3, s1, s2, s3;
  explicit Coefficients(const AccelerationTriple& a)
      : c1(a.cos_r(0)), c2(a.cos_r(1)), c3(a.cos_r(2)),
        s1(a.sin_r(0)), s2(a.sin_r(1)), s3(a.sin_r(2)) {}
};

double sq(double x) { return x * x; }

ComplexMatrix rho_w_region_i(const Coefficients& k) {
  const auto& [c1, c2, c3, s1, s2, s3] = k;
  KetSum t(1.0 / 3.0);
  t.add("100", "100", sq(c2) * sq(c3));
  t.add("100", "010", c2 * c1 * sq(c3));
  t.add("100", "001", c3 * c1 * sq(c2));
  t.add("010", "100", c1 * c2 * sq(c3));
  t.add("010", "010", sq(c1) * sq(c3));
  t.add("010", "001", c3 * c2 * sq(c1));
  t.add("001", "100", c1 * c3 * sq(c2));
  t.add("001", "010", c2 * c3 * sq(c1));
  t.add("001", "001", sq(c1) * sq(c2));
  t.add("101", "101", sq(s1) * sq(c2) + sq(c2) * sq(s3));
  t.add("101", "011", c2 * c1 * sq(s3));
  t.add("101", "110", c2 * c3 * sq(s1));
  t.add("110", "110", sq(s2) * sq(c3) + sq(s1) * sq(c3));
  t.add("110", "011", c3 * c1 * sq(s2));
  t.add("110", "101", c3 * c2 * sq(s1));
  // Printed as |C1|^2|S3|^2 + |C1|^2|S1|^2.
  t.add("011", "011", sq(c1) * sq(s3) + sq(c1) * sq(s1));
  t.add("011", "101", c1 * c2 * sq(s3));
  t.add("011", "110", c1 * c3 * sq(s2));
  t.add("111", "111", sq(s2) * sq(s3) + sq(s1) * sq(s3) + sq(s1) * sq(s2));
  return std::move(t).take();
}

ComplexMatrix rho_w_region_ii(const Coefficients& k) {
  const auto& [c1, c2, c3, s1, s2, s3] = k;
  KetSum t(1.0 / 3.0);
  t.add("000", "000", sq(c2) * sq(c3) + sq(c1) * sq(c3) + sq(c1) * sq(c2));
  t.add("010", "010", sq(s2) * sq(c3) + sq(s2) * sq(c1));
  t.add("010", "100", s2 * s1 * sq(c3));
  t.add("010", "001", s2 * s3 * sq(c1));
  t.add("001", "001", sq(c1) * sq(s3) + sq(c2) * sq(s3));
  t.add("001", "100", s3 * s1 * sq(c2));
  t.add("001", "010", s3 * s2 * sq(c1));
  t.add("101", "101", sq(s1) * sq(s3));
  t.add("101", "011", s1 * s2 * sq(s3));
  t.add("101", "110", s3 * s2 * sq(s1));
  t.add("100", "100", sq(s1) * sq(c3) + sq(s1) * sq(c2));
  t.add("100", "010", s1 * s2 * sq(c3));
  t.add("100", "001", s1 * s3 * sq(c2));
  t.add("110", "110", sq(s1) * sq(s2));
  t.add("110", "011", s1 * s3 * sq(s2));
  t.add("110", "101", s2 * s3 * sq(s1));
  t.add("011", "011", sq(s2) * sq(s3));
  t.add("011", "101", s2 * s1 * sq(s3));
  t.add("011", "110", s3 * s1 * sq(s2));
  return std::move(t).take();
}

// The diagonal shared by both GHZ regions.
void ghz_diagonal(KetSum& t, const Coefficients& k) {
  const auto& [c1, c2, c3, s1, s2, s3] = k;
  t.add("000", "000", sq(c3) * sq(c1) * sq(c2));
  t.add("010", "010", sq(c3) * sq(c1) * sq(s2));
  t.add("100", "100", sq(c3) * sq(s1) * sq(c2));
  t.add("110", "110", sq(c3) * sq(s1) * sq(s2));
  t.add("001", "001", sq(s3) * sq(c1) * sq(c2));
  t.add("011", "011", sq(s3) * sq(c1) * sq(s2));
  t.add("101", "101", sq(s3) * sq(s1) * sq(c2));
  t.add("111", "111", sq(s3) * sq(s1) * sq(s2));
}

ComplexMatrix rho_ghz_region_i(const Coefficients& k) {
  KetSum t(0.5);
  ghz_diagonal(t, k);
  t.add("000", "111", k.c1 * k.c2 * k.c3);
  t.add("111", "000", k.c1 * k.c2 * k.c3);
  t.add("111", "111", 1.0);
  return std::move(t).take();
}

// Region II replaces the last three region-I terms by
// s1 s2 s3 (|000><111| + |111><000|) + |000><000|.
ComplexMatrix rho_ghz_region_ii(const Coefficients& k) {
  KetSum t(0.5);
  ghz_diagonal(t, k);
  t.add("000", "111", k.s1 * k.s2 * k.s3);
  t.add("111", "000", k.s1 * k.s2 * k.s3);
  t.add("000", "000", 1.0);
  return std::move(t).take();
}

ComplexMatrix rho_ghz_like_region_i(const Coefficients& k) {
  const auto& [c1, c2, c3, s1, s2, s3] = k;
  KetSum t(0.25);
  t.add("001", "001", sq(c1) * sq(c2));
  t.add("001", "100", c1 * c3 * sq(c2));
  t.add("001", "010", c2 * c3 * sq(c1));
  t.add("001", "111", c1 * c2 * c3);
  t.add("010", "010", sq(c1) * sq(c3));
  t.add("010", "001", c3 * c2 * sq(c1));
  t.add("010", "100", sq(c3) * c1 * c2);
  t.add("010", "111", c1 * c3);
  t.add("100", "100", sq(c2) * sq(c3));
  t.add("100", "001", c3 * c1 * sq(c2));
  t.add("100", "010", sq(c3) * c2 * c1);
  t.add("100", "111", c2 * c3);
  t.add("101", "101", sq(s1) * sq(c2) + sq(c2) * sq(s3));
  t.add("101", "110", c2 * c3 * sq(s1));
  t.add("101", "011", sq(s3) * c2 * c1);
  t.add("110", "110", sq(s2) * sq(c3) + sq(s1) * sq(c3));
  t.add("110", "011", c3 * c1 * sq(s2));
  t.add("110", "101", c3 * c2 * sq(s1));
  t.add("011", "011", sq(c1) * sq(s2) + sq(c1) * sq(s3));
  t.add("011", "101", sq(s3) * c1 * c2);
  t.add("011", "110", c1 * c3 * sq(s2));
  t.add("111", "111", sq(s1) * sq(s2) + sq(s1) * sq(s3) + sq(s2) * sq(s3) + 1.0);
  t.add("111", "010", c1 * c3);
  t.add("111", "001", c1 * c2);
  t.add("111", "100", c2 * c3);
  return std::move(t).take();
}

ComplexMatrix rho_ghz_like_region_ii(const Coefficients& k) {
  const auto& [c1, c2, c3, s1, s2, s3] = k;
  KetSum t(0.25);
  t.add("000", "000", sq(c1) * sq(c2) + sq(c1) * sq(c3) + sq(c2) * sq(c3) + 1.0);
  t.add("000", "101", s1 * s3);
  t.add("000", "110", s1 * s2);
  t.add("000", "011", s2 * s3);
  // Printed as c_2^2 s_3^2 + c_1^2 ss_3^2.
  t.add("001", "001", sq(c2) * sq(s3) + sq(c1) * sq(s3));
  t.add("001", "100", s1 * s3 * sq(c2));
  t.add("001", "010", s3 * s2 * sq(c1));
  t.add("010", "010", sq(s2) * sq(c3) + sq(c1) * sq(s2));
  t.add("010", "001", s2 * s3 * sq(c1));
  t.add("010", "100", s2 * s1 * sq(c3));
  t.add("100", "100", sq(s1) * sq(c2) + sq(s1) * sq(c3));
  t.add("100", "010", s1 * s2 * sq(c3));
  t.add("100", "001", s1 * s3 * sq(c2));
  t.add("101", "101", sq(s1) * sq(s3));
  t.add("101", "000", s1 * s3);
  t.add("101", "011", s1 * s2 * sq(s3));
  t.add("101", "110", s3 * s2 * sq(s1));
  t.add("110", "110", sq(s1) * sq(s2));
  t.add("110", "000", s1 * s2);
  t.add("110", "011", s1 * s3 * sq(s2));
  t.add("110", "101", s2 * s3 * sq(s1));
  t.add("011", "011", sq(s2) * sq(s3));
  t.add("011", "000", s2 * s3);
  t.add("011", "101", sq(s3) * s2 * s1);
  t.add("011", "110", s1 * s3 * sq(s2));
  return std::move(t).take();
}

}  // namespace

std::vector<ClosedFormId> all_closed_form_ids() {
  std::vector<ClosedFormId> ids;
  for (auto kind : {ClosedFormKind::DENSITY, ClosedFormKind::FIDELITY})
    for (auto family : kAllFamilies)
      for (auto region : kAllRegions) ids.push_back({family, region, kind});
  return ids;
}

std::string label(const ClosedFormId& id) {
  return std::string(id.kind == ClosedFormKind::DENSITY ? "rho_" : "F_") +
         std::string(to_string(id.family)) + "^(" + std::string(to_string(id.region)) + ")";
}

ComplexMatrix closed_form_density(const ClosedFormId& id, const AccelerationTriple& accel) {
  if (id.kind != ClosedFormKind::DENSITY) {
    throw std::invalid_argument("closed_form_density: " + label(id) + " is not a density form");
  }
  const Coefficients k(accel);
  const bool first = id.region == RindlerRegion::I;
  switch (id.family) {
    case StateFamily::W: return first ? rho_w_region_i(k) : rho_w_region_ii(k);
    case StateFamily::GHZ: return first ? rho_ghz_region_i(k) : rho_ghz_region_ii(k);
    case StateFamily::GHZ_LIKE: return first ? rho_ghz_like_region_i(k) : rho_ghz_like_region_ii(k);
  }
  throw std::logic_error("closed_form_density: unreachable");
}

double closed_form_fidelity(const ClosedFormId& id, const AccelerationTriple& accel) {
  if (id.kind != ClosedFormKind::FIDELITY) {
    throw std::invalid_argument("closed_form_fidelity: " + label(id) + " is not a fidelity form");
  }
  const auto [c1, c2, c3, s1, s2, s3] = Coefficients(accel);
  if (id.region == RindlerRegion::I) {
    switch (id.family) {
      case StateFamily::W:
        return (sq(c1) * sq(c2) + sq(c1) * sq(c3) + sq(c2) * sq(c3) + 2 * c1 * c2 * sq(c3) +
                2 * c1 * c3 * sq(c2) + 2 * c3 * c2 * sq(c1)) /
               9.0;
      case StateFamily::GHZ:
        return (1.0 + sq(c1) * sq(c2) * sq(c3) + 2 * c1 * c2 * c3) / 4.0;
      case StateFamily::GHZ_LIKE:
        return (1.0 + sq(c1) * (sq(c2) + sq(c3)) + sq(c2) * sq(c3) + 2 * c1 * (c2 + c3) +
                2 * c2 * c3 + 2 * c1 * c2 * sq(c3) + 2 * c1 * c3 * sq(c2) + 2 * c2 * c3 * sq(c1) +
                sq(s1) * (sq(s2) + sq(s3)) + sq(s2) * sq(s3)) /
               16.0;
    }
  } else {
    switch (id.family) {
      case StateFamily::W:
        // 2 s1 s3 c2^2 appears twice as printed.
        return (sq(s1) * (sq(c2) + sq(c3)) + sq(s2) * (sq(c1) + sq(c3)) +
                sq(s3) * (sq(c1) + sq(c2)) + 2 * s1 * s3 * sq(c2) + 2 * s2 * s3 * sq(c1) +
                2 * s1 * s3 * sq(c2)) /
               9.0;
      case StateFamily::GHZ:
        return (1.0 + sq(c1) * sq(c2) * sq(c3) + sq(s1) * sq(s2) * sq(s3) + 2 * s1 * s2 * s3) / 4.0;
      case StateFamily::GHZ_LIKE:
        return (sq(s1) * (sq(c2) + sq(c3)) + sq(s2) * (sq(c1) + sq(c3)) +
                sq(s3) * (sq(c1) + sq(c2)) + 2 * s2 * s3 * sq(c1) + 2 * s1 * s3 * sq(c2) +
                2 * s1 * s2 * sq(c3)) /
               16.0;
    }
  }
  throw std::logic_error("closed_form_fidelity: unreachable");
}

}  // namespace rindler
