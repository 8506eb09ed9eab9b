#include <cmath>
#include <numbers>

#include <doctest.h>

#include "pointint/errors.hpp"
#include "pointint/schrodinger.hpp"
#include "support/oracles.hpp"

using namespace pointint;
using namespace pointint::schrodinger;
using pointint::testing::Rng;

namespace {

double scaled_diff(const TransferMatrix& a, const TransferMatrix& b) {
  return max_abs_diff(a, b) / std::max(1.0, b.cwiseAbs().maxCoeff());
}

DeltaTriple random_triple(Rng& rng) {
  return {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(0.01, 1.0),
          rng.uniform(-5, 5)};
}

}  // namespace

TEST_CASE("NonRelMedium validation") {
  CHECK_THROWS_AS(NonRelMedium(0.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(NonRelMedium(1.0, -1.0), InvalidParameter);
  CHECK(NonRelMedium(2.0, 4.0).energy() == doctest::Approx(4.0));
}

TEST_CASE("propagator") {
  CHECK(max_abs_diff(propagator(0.0, NonRelMedium(1.3, 0.7, 2.0)), TransferMatrix::Identity()) ==
        0.0);

  TransferMatrix quarter;
  quarter << 0.0, 2.0, -0.5, 0.0;
  CHECK(max_abs_diff(propagator(std::numbers::pi / 2, NonRelMedium(1.0, 1.0)), quarter) < 1e-15);

  Rng rng(21);
  for (int n = 0; n < 300; ++n) {
    const NonRelMedium med(rng.uniform(0.1, 5), rng.uniform(0.1, 5), rng.uniform(-5, 5));
    const double x = rng.uniform(-2, 2);
    const double y = rng.uniform(-2, 2);
    const TransferMatrix gx = propagator(x, med);
    // det = e^{2iAx}
    REQUIRE(std::abs(gx.determinant() - std::polar(1.0, 2 * med.vector_potential() * x)) < 1e-12);
    // composition
    REQUIRE(scaled_diff(propagator(x, med) * propagator(y, med), propagator(x + y, med)) < 1e-12);
    // independent route: exp of the generator
    const auto oracle = pointint::testing::expm(
        x * pointint::testing::schrodinger_generator(med.mass(), med.wave_number(),
                                                     med.vector_potential()));
    REQUIRE(scaled_diff(gx, oracle) < 1e-12);
  }
}

TEST_CASE("free propagator conserves current; A != 0 alone does not") {
  CHECK(conserves_current(propagator(0.8, NonRelMedium(1.0, 1.5)), 1e-12));
  CHECK_FALSE(conserves_current(propagator(0.8, NonRelMedium(1.0, 1.5, 0.7)), 1e-6));
}

TEST_CASE("mode_vectors") {
  const ModePair modes = mode_vectors(NonRelMedium(1.0, 2.0));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(modes.u_plus(0) - r) < 1e-16);
  CHECK(std::abs(modes.u_plus(1) - Complex(0, r)) < 1e-16);
  CHECK(modes.is_biorthogonal());
  CHECK_THROWS_AS(mode_vectors(NonRelMedium(1.0, 2.0, 0.1)), ModesRequireFreeSpace);

  Rng rng(5);
  for (int n = 0; n < 100; ++n) {
    const NonRelMedium med(rng.uniform(0.1, 5), rng.uniform(0.1, 5));
    const ModePair mp = mode_vectors(med);
    REQUIRE(mp.is_biorthogonal());
    const double x = rng.uniform(-3, 3);
    const double kx = med.wave_number() * x;
    const TransferMatrix g = propagator(x, med);
    REQUIRE((g * mp.u_plus - std::polar(1.0, kx) * mp.u_plus).cwiseAbs().maxCoeff() < 1e-12);
    REQUIRE((g * mp.u_minus - std::polar(1.0, -kx) * mp.u_minus).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("three_delta_transfer") {
  SUBCASE("zero strengths give free propagation over 2a") {
    const NonRelMedium med(1.2, 0.9);
    const DeltaTriple cfg{0, 0, 0, 0.3, 0};
    CHECK(max_abs_diff(three_delta_transfer(cfg, med), propagator(0.6, med)) < 1e-14);
  }
  SUBCASE("closed form of the zero-strength case") {
    const double m = 1.5, k = 0.8, a = 0.4;
    const NonRelMedium med(m, k);
    TransferMatrix want;
    want << std::cos(2 * k * a), 2 * m / k * std::sin(2 * k * a),
        -k / (2 * m) * std::sin(2 * k * a), std::cos(2 * k * a);
    CHECK(max_abs_diff(closed_form_transfer({0, 0, 0, a, 0}, med), want) < 1e-15);
  }
  SUBCASE("gauge mismatch and bad spacing") {
    CHECK_THROWS_AS(three_delta_transfer({1, 1, 1, 0.1, 0.5}, NonRelMedium(1, 1, 0.0)),
                    InvalidParameter);
    CHECK_THROWS_AS(three_delta_transfer({1, 1, 1, 0.0, 0.0}, NonRelMedium(1, 1)),
                    InvalidParameter);
  }
  SUBCASE("product and closed form agree; magnetic field only in the phase") {
    Rng rng(99);
    for (int n = 0; n < 1000; ++n) {
      const DeltaTriple cfg = random_triple(rng);
      const NonRelMedium med(rng.uniform(0.1, 5), rng.uniform(0.1, 5), cfg.vector_potential);
      const TransferMatrix product = three_delta_transfer(cfg, med);
      REQUIRE(scaled_diff(product, closed_form_transfer(cfg, med)) < 1e-12);
      const TransferMatrix real_part =
          std::polar(1.0, -2 * cfg.vector_potential * cfg.half_spacing) * product;
      REQUIRE(real_part.imag().cwiseAbs().maxCoeff() <
              1e-12 * std::max(1.0, product.cwiseAbs().maxCoeff()));
      REQUIRE(std::abs(closed_form_real_part(cfg, med).determinant() - 1.0) <
              1e-12 * std::max(1.0, product.cwiseAbs2().maxCoeff()));
    }
  }
}

TEST_CASE("renormalized_strengths") {
  SUBCASE("delta potential needs no renormalization") {
    const auto cfg = renormalized_strengths(ConnectionParams::make(1, 0, 2.5, 1), 0.01, 1.0);
    CHECK(cfg.v_plus == 0.0);
    CHECK(cfg.v_minus == 0.0);
    CHECK(cfg.v_zero == 2.5);
    CHECK(cfg.vector_potential == 0.0);
  }
  SUBCASE("epsilon potential") {
    const auto cfg = renormalized_strengths(ConnectionParams::make(1, 1, 0, 1), 0.01, 1.0);
    CHECK(cfg.v_plus == doctest::Approx(-48.0).epsilon(1e-14));
    CHECK(cfg.v_minus == doctest::Approx(-48.0).epsilon(1e-14));
    CHECK(cfg.v_zero == doctest::Approx(2500.0).epsilon(1e-14));
  }
  SUBCASE("vector potential A = theta / 2a") {
    const auto cfg = renormalized_strengths(ConnectionParams::make(1, 0, 0, 1, 0.2), 0.1, 1.0);
    CHECK(cfg.vector_potential == doctest::Approx(1.0));
  }
  SUBCASE("v_plus follows delta, v_minus follows alpha") {
    const auto p = ConnectionParams::make(2, 1, 1, 1);
    const auto cfg = renormalized_strengths(p, 0.1, 1.0);
    CHECK(cfg.v_plus == doctest::Approx(-5.0 + 2.0));
    CHECK(cfg.v_minus == doctest::Approx(-5.0 + 3.0));
    const auto flat = renormalized_strengths(ConnectionParams::make(2, 0, 3, 0.5), 0.1, 1.0);
    CHECK(flat.v_plus == doctest::Approx(-0.5 / 0.4));
    CHECK(flat.v_minus == doctest::Approx(1.0 / 0.4));
    CHECK(flat.v_zero == doctest::Approx(12.0 / 4.5));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(renormalized_strengths(ConnectionParams::make(-1, 0, 3, -1), 0.1, 1.0),
                    SingularRenormalization);
    CHECK_THROWS_AS(renormalized_strengths(ConnectionParams::identity(), 0.0, 1.0),
                    InvalidParameter);
    CHECK_THROWS_AS(renormalized_strengths(ConnectionParams::identity(), 0.1, -1.0),
                    InvalidParameter);
  }
}

TEST_CASE("renormalized three-delta model converges to the target") {
  const auto check_decay = [](const ConnectionParams& p, double m, double k) {
    double previous = 1e300;
    for (double a : {1e-2, 1e-3, 1e-4}) {
      const DeltaTriple cfg = renormalized_strengths(p, a, m);
      const double err =
          max_abs_diff(three_delta_transfer(cfg, NonRelMedium(m, k, cfg.vector_potential)),
                       as_matrix(p));
      CHECK(err < previous);
      previous = err;
    }
    CHECK(previous < 1e-2);
  };
  check_decay(ConnectionParams::make(2, 1, 1, 1, 0.3), 1.0, 1.0);
  check_decay(ConnectionParams::make(1, -0.5, 0, 1, -1.0), 0.7, 2.0);
  check_decay(ConnectionParams::make(2, 0, 3, 0.5, 0.4), 1.0, 1.0);
  check_decay(ConnectionParams::make(1, 0, -2, 1, 0.0), 1.0, 1.5);
}

TEST_CASE("transmission") {
  for (double k : {1e-3, 0.5, 10.0, 1e4}) {
    CHECK(transmission(ConnectionParams::identity(), NonRelMedium(1.0, k)) == 1.0);
  }
  CHECK(transmission(ConnectionParams::make(1, 0, 1, 1), NonRelMedium(1.0, 2.0)) ==
        doctest::Approx(0.8).epsilon(1e-15));
  const auto generic = ConnectionParams::make(2, 1, 1, 1);
  CHECK(transmission(generic, NonRelMedium(1.0, 1e6)) < 1e-10);
  CHECK(transmission(ConnectionParams::make(1, 1, 0, 1), NonRelMedium(1.0, 1e-6)) >
        1.0 - 1e-12);
  CHECK(transmission(ConnectionParams::make(1, 0, 1, 1), NonRelMedium(1.0, 1e-6)) < 1e-10);

  Rng rng(8);
  for (int n = 0; n < 500; ++n) {
    const ConnectionParams p = rng.connection(5.0);
    const double m = rng.uniform(0.1, 5.0);
    const double k = rng.uniform(0.1, 5.0);
    const double t2 = transmission(p, NonRelMedium(m, k));
    REQUIRE(t2 >= 0.0);
    REQUIRE(t2 <= 1.0);
    REQUIRE(std::abs(t2 - scatter(as_matrix(p), mode_vectors(NonRelMedium(m, k))).t_prob) <
            1e-10);
  }
}
