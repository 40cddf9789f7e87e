#include <doctest.h>

#include <numbers>
#include <random>

#include "oracle.hpp"
#include "rindler/measures.hpp"

using namespace rindler;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

int oracle_family(StateFamily f) {
  return f == StateFamily::W ? 0 : f == StateFamily::GHZ ? 1 : 2;
}

DensityMatrix basis_projector(std::size_t index, std::size_t qubits) {
  std::vector<Complex> amps(std::size_t{1} << qubits);
  amps[index] = 1.0;
  return DensityMatrix::pure(amps, std::vector<std::size_t>(qubits, 2));
}

DensityMatrix bell() {
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> amps{h, 0.0, 0.0, h};
  return DensityMatrix::pure(amps, {2, 2});
}

std::vector<double> grid(std::size_t n) {
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = kQuarterPi * static_cast<double>(i) / static_cast<double>(n - 1);
  r.back() = kQuarterPi;
  return r;
}

}  // namespace

TEST_SUITE("measures") {

TEST_CASE("fidelity examples") {
  const auto ghz = minkowski_state(StateFamily::GHZ);
  CHECK(std::abs(fidelity(accelerated_channel(StateFamily::GHZ, {}, RindlerRegion::I), ghz) - 1.0) <= 1e-12);
  CHECK(std::abs(fidelity(accelerated_channel(StateFamily::GHZ, {}, RindlerRegion::II), ghz) - 0.5) <= 1e-12);
  const auto top = AccelerationTriple::equal(kQuarterPi);
  const double expected = (1.0 + 0.125 + 0.125 + 2.0 * std::pow(2.0, -1.5)) / 4.0;
  CHECK(std::abs(expected - 0.4892766952966) <= 1e-12);
  CHECK(std::abs(fidelity(accelerated_channel(StateFamily::GHZ, top, RindlerRegion::I), ghz) - expected) <= 1e-12);
}

TEST_CASE("fidelity of a state with itself") {
  for (auto f : kAllFamilies) {
    const auto psi = minkowski_state(f);
    CHECK(std::abs(fidelity(psi.projector(), psi) - 1.0) <= 1e-12);
  }
}

TEST_CASE("fidelity dimension mismatch") {
  CHECK_THROWS_AS(fidelity(bell(), minkowski_state(StateFamily::GHZ)), DimensionError);
}

TEST_CASE("von Neumann entropy examples") {
  CHECK(std::abs(von_neumann_entropy(minkowski_state(StateFamily::W).projector())) <= 1e-12);
  const double half[] = {0.5, 0.5};
  CHECK(std::abs(von_neumann_entropy(DensityMatrix(ComplexMatrix::diagonal(half), {2})) - 1.0) <= 1e-12);
  const double thirds[] = {2.0 / 3.0, 1.0 / 3.0};
  CHECK(std::abs(von_neumann_entropy(DensityMatrix(ComplexMatrix::diagonal(thirds), {2})) - 0.9182958340545) <= 1e-12);
}

TEST_CASE("entropy is additive on products") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix a(oracle::random_density(rng, 2), {2});
    const DensityMatrix b(oracle::random_density(rng, 4), {2, 2});
    const auto ab = tensor_product(a, b);
    CHECK(std::abs(von_neumann_entropy(ab) - von_neumann_entropy(a) - von_neumann_entropy(b)) <= 1e-10);
    CHECK(std::abs(von_neumann_entropy(ab) - oracle::entropy(oracle::to_eigen(ab.matrix()))) <= 1e-10);
  }
}

TEST_CASE("pair_capacity examples") {
  CHECK(std::abs(pair_capacity(bell(), 1) - 2.0) <= 1e-12);
  CHECK(std::abs(pair_capacity(basis_projector(0, 2), 1) - 1.0) <= 1e-12);
  const double quarter[] = {0.25, 0.25, 0.25, 0.25};
  CHECK(std::abs(pair_capacity(DensityMatrix(ComplexMatrix::diagonal(quarter), {2, 2}), 0)) <= 1e-12);
  CHECK_THROWS_AS(pair_capacity(bell(), 2), DimensionError);
  CHECK_THROWS_AS(pair_capacity(minkowski_state(StateFamily::W).projector(), 0), DimensionError);
}

TEST_CASE("average_capacity examples") {
  for (auto f : {StateFamily::GHZ, StateFamily::W}) {
    const auto cap = average_capacity(accelerated_channel(f, {}, RindlerRegion::I));
    CHECK(std::abs(cap.average - 1.0) <= 1e-12);
    CHECK(std::abs(cap.c_ab - 1.0) <= 1e-12);
  }
  const auto vac = average_capacity(basis_projector(0, 3));
  CHECK(std::abs(vac.average - 1.0) <= 1e-12);
}

TEST_CASE("negativity examples") {
  const auto ghz = accelerated_channel(StateFamily::GHZ, {}, RindlerRegion::I);
  for (std::size_t p = 0; p < 3; ++p) {
    CHECK(std::abs(negativity(ghz, p) - 1.0) <= 1e-12);
    CHECK(std::abs(negativity(basis_projector(0, 3), p)) <= 1e-12);
  }
  const auto w = accelerated_channel(StateFamily::W, {}, RindlerRegion::I);
  CHECK(std::abs(negativity(w, 0) - 0.9428090415821) <= 1e-12);
  CHECK(std::abs(negativity(w, 0) - 2.0 * std::sqrt(2.0) / 3.0) <= 1e-12);
  CHECK_THROWS(negativity(w, 3));
}

TEST_CASE("negativity_summary examples") {
  for (auto f : {StateFamily::GHZ, StateFamily::GHZ_LIKE}) {
    const auto n = negativity_summary(accelerated_channel(f, {}, RindlerRegion::I));
    CHECK(std::abs(n.n_a_bc - 1.0) <= 1e-12);
    CHECK(std::abs(n.n_b_ac - 1.0) <= 1e-12);
    CHECK(std::abs(n.n_c_ab - 1.0) <= 1e-12);
    CHECK(std::abs(n.mean - 1.0) <= 1e-12);
  }
  const double h = 1.0 / std::sqrt(2.0);
  // (|0> + |1>)/sqrt2 (x) |1> (x) |0>
  std::vector<Complex> prod(8);
  prod[0b010] = h;
  prod[0b110] = h;
  const auto n = negativity_summary(DensityMatrix::pure(prod, {2, 2, 2}));
  CHECK(std::abs(n.mean) <= 1e-12);
}

TEST_CASE("measures agree with the brute-force oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, kQuarterPi);
  for (int trial = 0; trial < 40; ++trial) {
    const std::array<double, 3> r{u(rng), u(rng), u(rng)};
    for (auto f : kAllFamilies)
      for (auto region : kAllRegions) {
        const auto rho = accelerated_channel(f, AccelerationTriple(r), region);
        const auto ref = oracle::channel(oracle_family(f), r, region == RindlerRegion::I);
        CHECK(std::abs(fidelity(rho, minkowski_state(f)) - oracle::fidelity(ref, oracle_family(f))) <= 1e-12);
        CHECK(std::abs(average_capacity(rho).average - oracle::average_capacity(ref)) <= 1e-10);
        for (std::size_t p = 0; p < 3; ++p)
          CHECK(std::abs(negativity(rho, p) - oracle::negativity(ref, static_cast<int>(p))) <= 1e-10);
      }
  }
}

TEST_CASE("monotone fidelity and negativity along equal accelerations") {
  const auto rs = grid(50);
  for (auto f : kAllFamilies) {
    const auto psi = minkowski_state(f);
    std::vector<double> f1, f2, n1, n2;
    for (double r : rs) {
      const auto a = AccelerationTriple::equal(r);
      const auto rho1 = accelerated_channel(f, a, RindlerRegion::I);
      const auto rho2 = accelerated_channel(f, a, RindlerRegion::II);
      f1.push_back(fidelity(rho1, psi));
      f2.push_back(fidelity(rho2, psi));
      n1.push_back(negativity_summary(rho1).mean);
      n2.push_back(negativity_summary(rho2).mean);
    }
    CAPTURE(to_string(f));
    CHECK(std::abs(n2.front()) <= 1e-10);
    for (std::size_t i = 1; i < rs.size(); ++i) {
      CHECK(f1[i] <= f1[i - 1] + 1e-12);
      CHECK(n1[i] <= n1[i - 1] + 1e-12);
      CHECK(n2[i] >= n2[i - 1] - 1e-12);
      if (f != StateFamily::GHZ) CHECK(f2[i] >= f2[i - 1] - 1e-12);
    }
  }
}

TEST_CASE("negativity is phase invariant") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, kQuarterPi);
  std::uniform_real_distribution<double> ph(-3.1, 3.1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::array<double, 3> r{u(rng), u(rng), u(rng)};
    const AccelerationTriple plain(r);
    const AccelerationTriple phased(r, {ph(rng), ph(rng), ph(rng)});
    for (auto f : kAllFamilies)
      for (auto region : kAllRegions) {
        const auto a = negativity_summary(accelerated_channel(f, plain, region));
        const auto b = negativity_summary(accelerated_channel(f, phased, region));
        CHECK(std::abs(a.n_a_bc - b.n_a_bc) <= 1e-10);
        CHECK(std::abs(a.n_b_ac - b.n_b_ac) <= 1e-10);
        CHECK(std::abs(a.n_c_ab - b.n_c_ab) <= 1e-10);
      }
  }
}

TEST_CASE("symmetric inputs give equal components") {
  for (double r : grid(12)) {
    for (auto f : kAllFamilies)
      for (auto region : kAllRegions) {
        const auto rho = accelerated_channel(f, AccelerationTriple::equal(r), region);
        const auto n = negativity_summary(rho);
        CHECK(std::abs(n.n_a_bc - n.n_b_ac) <= 1e-10);
        CHECK(std::abs(n.n_a_bc - n.n_c_ab) <= 1e-10);
        const auto c = average_capacity(rho);
        CHECK(std::abs(c.c_ab - c.c_ac) <= 1e-10);
        CHECK(std::abs(c.c_ab - c.c_bc) <= 1e-10);
        CHECK(std::abs(c.average - (c.c_ab + c.c_ac + c.c_bc) / 3.0) <= 1e-15);
      }
  }
}

}  // TEST_SUITE
