#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "symmea/construction.hpp"
#include "symmea/eigh.hpp"
#include "symmea/errors.hpp"
#include "test_support.hpp"

using namespace symmea;
using namespace testsupport;

namespace {

double max_dev(const std::vector<HermitianOperator>& a, const std::vector<HermitianOperator>& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, max_abs_diff(a[i].matrix(), b[i].matrix()));
  return worst;
}

}  // namespace

TEST_CASE("H operators sum to zero in both variants") {
  Rng rng(8);
  for (std::size_t d : {2u, 3u, 4u}) {
    const BasisPartition p(gell_mann_basis(d), d == 2 ? std::vector<std::size_t>{2, 3}
                                                      : std::vector<std::size_t>{3, d * d - 2});
    for (std::size_t a = 0; a < p.n_blocks(); ++a)
      for (bool primed : {false, true}) {
        const auto h = build_h_operators(p, a, primed);
        REQUIRE(h.size() == p.block_size(a));
        HermitianOperator sum = HermitianOperator::zero(d);
        for (const auto& op : h) sum += op;
        CHECK(max_abs(sum.matrix()) < 1e-12);
      }
  }
}

TEST_CASE("M=2 block reduces to the +/- pair") {
  const BasisPartition p(gell_mann_basis(2), {2});
  const auto h = build_h_operators(p, 0, false);
  const double c = 1.0 + std::sqrt(2.0);
  const HermitianOperator expect1 = -c * p.block(0)[0];
  const HermitianOperator expect2 = c * p.block(0)[0];
  CHECK(max_abs_diff(h[0].matrix(), expect1.matrix()) < 1e-14);
  CHECK(max_abs_diff(h[1].matrix(), expect2.matrix()) < 1e-14);
}

TEST_CASE("worked d=3 example: strength range and the three boundary measurements") {
  const BasisPartition p = alber_partition();
  const double s3 = std::sqrt(3.0);
  const double t_max = (s3 - 1.0) / (2.0 * s3);
  const double t_min = -(s3 - 1.0) / (4.0 * s3);

  const auto h = build_h_operators(p, 0, false);
  const Interval range = t_range(h, 3);
  CHECK(range.hi == doctest::Approx(t_max).epsilon(1e-13));
  CHECK(range.lo == doctest::Approx(t_min).epsilon(1e-13));
  CHECK(range.contains(0.0));

  CHECK(max_dev(build_measurement_block(p, 0, {false, +1}, t_max), example3_projectors()) < 1e-12);
  CHECK(max_dev(build_measurement_block(p, 0, {false, -1}, t_min), example3_rank2()) < 1e-12);
  CHECK(max_dev(build_measurement_block(p, 0, {false, +1}, -t_min), example3_rank2_plus()) < 1e-12);

  CHECK(x_from_t(t_max, 3, 3, false) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(x_from_t(t_min, 3, 3, false) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(x_from_t(-t_min, 3, 3, false) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("qubit SIC strength bounds") {
  const BasisPartition p(gell_mann_basis(2), {4});
  const Interval unprimed = t_range(build_h_operators(p, 0, false), 4);
  const Interval primed = t_range(build_h_operators(p, 0, true), 4);
  CHECK(1.0 / unprimed.hi == doctest::Approx(6.0 * std::sqrt(6.0)).epsilon(1e-13));
  CHECK(1.0 / primed.hi == doctest::Approx(2.0 * std::sqrt(6.0)).epsilon(1e-13));
}

TEST_CASE("x_from_t properties") {
  // t -> 0 collapses to the excluded trivial point d/M^2
  CHECK(x_from_t(0.0, 3, 2, false) == doctest::Approx(2.0 / 9.0));
  // strictly increasing in |t|, even in sign
  double prev = 0.0;
  for (double t : {0.01, 0.02, 0.05, 0.1}) {
    const double x = x_from_t(t, 3, 2, false);
    CHECK(x > prev);
    CHECK(x_from_t(-t, 3, 2, false) == doctest::Approx(x));
    prev = x;
  }
  // cross-variant identity t'^2 (1-sqrtM)^2 = t^2 (1+sqrtM)^2 at equal x
  for (std::size_t m : {2u, 3u, 4u, 5u}) {
    const double x = static_cast<double>(3) / (m * m) + 0.01;
    const double t = t_magnitude_from_x(x, m, 3, false);
    const double tp = t_magnitude_from_x(x, m, 3, true);
    const double root = std::sqrt(static_cast<double>(m));
    CHECK(tp * tp * (1 - root) * (1 - root) ==
          doctest::Approx(t * t * (1 + root) * (1 + root)).epsilon(1e-12));
  }
}

TEST_CASE("measurement blocks are POVMs with the declared trace") {
  Rng rng(10);
  const BasisPartition p(gell_mann_basis(4), {3, 5, 4, 4});
  for (std::size_t a = 0; a < p.n_blocks(); ++a) {
    const std::size_t m = p.block_size(a);
    for (bool primed : {false, true}) {
      const auto h = build_h_operators(p, a, primed);
      const Interval r = t_range(h, m);
      const double t = 0.7 * r.hi;
      const auto e = build_measurement_block(p, a, {primed, +1}, t);
      HermitianOperator sum = HermitianOperator::zero(4);
      for (const auto& op : e) {
        sum += op;
        CHECK(trace(op.matrix()).real() ==
              doctest::Approx(4.0 / static_cast<double>(m)).epsilon(1e-12));
        CHECK(eigvalsh(op.matrix()).front() > -1e-10);
      }
      CHECK(max_abs_diff(sum.matrix(), ComplexMatrix::identity(4)) < 1e-12);
    }
  }
}

TEST_CASE("infeasible strengths raise a positivity diagnostic") {
  const BasisPartition p = alber_partition();
  const double too_big = (std::sqrt(3.0) - 1.0) / (2.0 * std::sqrt(3.0)) * 1.5;
  CHECK_THROWS_AS(build_measurement_block(p, 0, {false, +1}, too_big), InfeasibleConstruction);
  try {
    build_measurement_block(p, 0, {false, +1}, too_big);
  } catch (const InfeasibleConstruction& e) {
    CHECK(e.eigenvalue < -1e-10);
    CHECK(std::string(e.what()).find("eigenvalue") != std::string::npos);
  }
  CHECK_THROWS_AS(build_measurement_block(p, 0, {false, +1}, 0.0), InfeasibleConstruction);
}

TEST_CASE("basis recovery round-trips") {
  // worked d=3 example
  {
    const BasisPartition p = alber_partition();
    const double t = (std::sqrt(3.0) - 1.0) / (2.0 * std::sqrt(3.0));
    const auto e = build_measurement_block(p, 0, {false, +1}, t);
    const auto rec = recover_basis_block(e, t, {false, +1});
    REQUIRE(rec.size() == 2);
    CHECK(max_abs_diff(rec[0].matrix(), p.block(0)[0].matrix()) < 1e-10);
    CHECK(max_abs_diff(rec[1].matrix(), p.block(0)[1].matrix()) < 1e-10);
  }
  // random d=4 block with M=5, both variants
  {
    Rng rng(77);
    BasisPartition p(gell_mann_basis(4), {5});
    p = rotate_block(p, 0, random_orthogonal(4, rng));
    for (bool primed : {false, true}) {
      const Interval r = t_range(build_h_operators(p, 0, primed), 5);
      const double t = 0.6 * r.lo;  // negative strength branch
      const auto e = build_measurement_block(p, 0, {primed, -1}, t);
      const auto rec = recover_basis_block(e, t, {primed, -1});
      for (std::size_t k = 0; k < 4; ++k)
        CHECK(max_abs_diff(rec[k].matrix(), p.block(0)[k].matrix()) < 1e-8);
    }
  }
  // inconsistent t is detected through the orthonormality check
  {
    const BasisPartition p = alber_partition();
    const double t = (std::sqrt(3.0) - 1.0) / (2.0 * std::sqrt(3.0));
    const auto e = build_measurement_block(p, 0, {false, +1}, t);
    CHECK_THROWS_AS(recover_basis_block(e, 0.5 * t, {false, +1}), Error);
  }
}

TEST_CASE("SIC families recover the Pauli basis up to sign") {
  const BasisPartition p(gell_mann_basis(2), {4});
  const double t_star = 1.0 / (6.0 * std::sqrt(6.0));
  const auto e = build_measurement_block(p, 0, {false, -1}, -t_star);
  const auto rec = recover_basis_block(e, -t_star, {false, -1});
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(max_abs_diff(rec[k].matrix(), p.block(0)[k].matrix()) < 1e-10);
}

TEST_CASE("cross-variant trace table") {
  Rng rng(12);
  for (std::size_t m : {2u, 3u, 4u, 5u}) {
    BasisPartition p(gell_mann_basis(4), {m});
    if (m > 2) p = rotate_block(p, 0, random_orthogonal(m - 1, rng));
    const auto h = build_h_operators(p, 0, false);
    const auto hp = build_h_operators(p, 0, true);
    const double md = static_cast<double>(m);
    for (std::size_t k = 0; k + 1 < m; ++k) {
      CHECK(hs_inner(h[k], hp[k]) == doctest::Approx(md * md - 2.0 * md - 1.0).epsilon(1e-9));
      CHECK(hs_inner(h[k], hp[m - 1]) == doctest::Approx(md - 1.0).epsilon(1e-9));
      CHECK(hs_inner(h[m - 1], hp[k]) == doctest::Approx(md - 1.0).epsilon(1e-9));
      for (std::size_t l = 0; l + 1 < m; ++l)
        if (l != k) CHECK(hs_inner(h[k], hp[l]) == doctest::Approx(-(md + 1.0)).epsilon(1e-9));
    }
    CHECK(hs_inner(h[m - 1], hp[m - 1]) == doctest::Approx(-(md - 1.0) * (md - 1.0)).epsilon(1e-9));
  }
}

TEST_CASE("opposite-sign pairs at equal x") {
  // Tr E+ E- = 2 z - x on the diagonal and 2 z - y off it, whenever both
  // signs are admissible.
  for (auto [d, m, x] : std::initializer_list<std::tuple<std::size_t, std::size_t, double>>{
           {3, 3, 0.5}, {2, 4, 0.2}, {4, 5, 0.2}}) {
    const BasisPartition p(gell_mann_basis(d), {m});
    const double t = t_magnitude_from_x(x, m, d, false);
    const auto plus = build_measurement_block(p, 0, {false, +1}, t);
    const auto minus = build_measurement_block(p, 0, {false, -1}, -t);
    const double dd = static_cast<double>(d), md = static_cast<double>(m);
    const double z = dd / (md * md);
    const double y = (dd - md * x) / (md * (md - 1.0));
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l) {
        const double expect = k == l ? 2.0 * z - x : 2.0 * z - y;
        CHECK(hs_inner(plus[k], minus[l]) == doctest::Approx(expect).epsilon(1e-9));
      }
  }
  // M=2 at x = d/M: orthogonal pair with cross-term d/2. Reaching x = d/M
  // needs rank-(d/2) projectors, so the generator must split the spectrum
  // evenly; at d=4 take diag(1,1,-1,-1)/2.
  {
    const BasisPartition p2(gell_mann_basis(2), {2});
    const double t2 = t_magnitude_from_x(1.0, 2, 2, false);
    const auto plus2 = build_measurement_block(p2, 0, {false, +1}, t2);
    const auto minus2 = build_measurement_block(p2, 0, {false, -1}, -t2);
    CHECK(std::abs(hs_inner(plus2[0], minus2[0])) < 1e-10);
    CHECK(hs_inner(plus2[0], minus2[1]) == doctest::Approx(1.0).epsilon(1e-10));

    ComplexMatrix m(4, 4);
    m(0, 0) = m(1, 1) = 0.5;
    m(2, 2) = m(3, 3) = -0.5;
    const BasisPartition p4({HermitianOperator(std::move(m))}, {2});
    const double t4 = t_magnitude_from_x(2.0, 2, 4, false);
    const auto plus4 = build_measurement_block(p4, 0, {false, +1}, t4);
    const auto minus4 = build_measurement_block(p4, 0, {false, -1}, -t4);
    CHECK(std::abs(hs_inner(plus4[0], minus4[0])) < 1e-10);
    CHECK(hs_inner(plus4[0], minus4[1]) == doctest::Approx(2.0).epsilon(1e-10));
  }
}

TEST_CASE("variant coincidence for small blocks") {
  // M = 2: identical POVMs element by element
  {
    const BasisPartition p(gell_mann_basis(3), {2});
    const auto rep = variant_coincidence(p, 0, 1.0);
    CHECK(rep.equal_sets);
    CHECK(rep.pairing == std::vector<std::size_t>{0, 1});
    CHECK(rep.max_pair_deviation < 1e-10);
  }
  // M = 3: equal sets under the (1 2) swap
  {
    const BasisPartition p = alber_partition();
    const auto rep = variant_coincidence(p, 0, 0.5);
    CHECK(rep.equal_sets);
    CHECK(rep.pairing == std::vector<std::size_t>{1, 0, 2});
  }
  // M = 4: four genuinely distinct families
  {
    const BasisPartition p(gell_mann_basis(2), {4});
    const auto rep = variant_coincidence(p, 0, 0.15);
    CHECK_FALSE(rep.equal_sets);
    CHECK(rep.max_pair_deviation > 1e-3);
  }
  // infeasible x propagates the construction error
  {
    const BasisPartition p(gell_mann_basis(2), {4});
    CHECK_THROWS_AS(variant_coincidence(p, 0, 0.3), InfeasibleConstruction);
  }
}
