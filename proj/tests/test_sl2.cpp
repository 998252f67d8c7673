#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "conekit/msec.hpp"
#include "conekit/sampling.hpp"
#include "conekit/sl2.hpp"

using namespace conekit;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Mat2> sample_elements(Sampler& sampler, int count) {
  std::vector<Mat2> out;
  for (int i = 0; i < count; ++i) {
    Mat2 g = Mat2::rotation(sampler.uniform(0.0, kPi));
    g = g.compose(Mat2::diagonal(sampler.uniform(0.4, 2.5)));
    g = g.compose(Mat2::shear(sampler.uniform(-1.5, 1.5)));
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("matrices are normalized to determinant one") {
  const Mat2 g(4.0, 0.0, 0.0, 1.0);  // det 4, rescaled by 1/2
  CHECK_THAT(g.a, WithinAbs(2.0, 1e-15));
  CHECK_THAT(g.d, WithinAbs(0.5, 1e-15));
  CHECK_THROWS(Mat2(1.0, 0.0, 0.0, -1.0));
  CHECK_THROWS(Mat2(1.0, 2.0, 1.0, 2.0));

  const Mat2 r = Mat2::rotation(0.3);
  const Mat2 should_be_id = r.compose(r.inverse());
  CHECK_THAT(should_be_id.a, WithinAbs(1.0, 1e-15));
  CHECK_THAT(should_be_id.b, WithinAbs(0.0, 1e-15));

  CHECK_THAT(Mat2::diagonal(2.0).operator_norm(), WithinAbs(2.0, 1e-14));
  CHECK_THAT(Mat2::rotation(1.1).operator_norm(), WithinAbs(1.0, 1e-14));
}

TEST_CASE("projective angles reduce mod pi with the arc distance") {
  CHECK_THAT(p1_point(kPi + 0.25).theta, WithinAbs(0.25, 1e-14));
  CHECK_THAT(p1_point(-0.25).theta, WithinAbs(kPi - 0.25, 1e-14));
  CHECK_THAT(p1_distance(P1Point{0.1}, P1Point{kPi - 0.1}),
             WithinAbs(0.2, 1e-14));
}

TEST_CASE("projective action of a diagonal element contracts the tangent") {
  // diag(2, 1/2) sends tan(theta) to tan(theta)/4.
  const Mat2 g = Mat2::diagonal(2.0);
  const P1Point img = act_p1(g, P1Point{kPi / 4.0});
  CHECK_THAT(img.theta, WithinAbs(std::atan(0.25), 1e-14));
  CHECK_THAT(act_p1(g, P1Point{0.0}).theta, WithinAbs(0.0, 1e-14));
  CHECK_THAT(act_p1(g, P1Point{kPi / 2.0}).theta, WithinAbs(kPi / 2.0, 1e-14));
}

TEST_CASE("multiplier at the attracting axis equals the squared gain") {
  const Mat2 g = Mat2::diagonal(2.0);
  CHECK_THAT(sigma_p1(g, P1Point{0.0}), WithinAbs(0.25, 1e-15));
  CHECK_THAT(sigma_p1(g, P1Point{kPi / 2.0}), WithinAbs(4.0, 1e-15));
  CHECK_THAT(sigma_p1_s(g, P1Point{0.0}, 0.5), WithinAbs(0.5, 1e-15));
  CHECK_THAT(sigma_p1_s(g, P1Point{0.0}, 0.0), WithinAbs(1.0, 1e-15));
}

TEST_CASE("multiplier is the derivative of the action") {
  Sampler sampler(41);
  const auto elements = sample_elements(sampler, 12);
  const double h = 1e-5;
  for (const Mat2& g : elements) {
    for (int j = 0; j < 8; ++j) {
      const double theta = sampler.uniform(0.0, kPi);
      const double plus = act_p1(g, P1Point{theta + h}).theta;
      const double minus = act_p1(g, P1Point{theta - h}).theta;
      double diff = plus - minus;
      // The image angle may wrap around the end of [0, pi).
      if (diff > kPi / 2.0) diff -= kPi;
      if (diff < -kPi / 2.0) diff += kPi;
      const double numeric = diff / (2.0 * h);
      CHECK_THAT(sigma_p1(g, P1Point{theta}), WithinAbs(numeric, 1e-8));
    }
  }
}

TEST_CASE("the angle family satisfies the cocycle law") {
  Sampler sampler(42);
  const auto elements = sample_elements(sampler, 30);
  for (std::size_t i = 0; i + 1 < elements.size(); i += 2) {
    const Mat2 g = elements[i];
    const Mat2 gamma = elements[i + 1];
    for (int j = 0; j < 6; ++j) {
      const P1Point y{sampler.uniform(0.0, kPi)};
      const double lhs = sigma_p1(g.compose(gamma), y);
      const double rhs = sigma_p1(gamma, y) * sigma_p1(g, act_p1(gamma, y));
      CHECK(rel_gap(lhs, rhs) < 1e-13);
    }
  }
}

TEST_CASE("rotations carry multiplier one everywhere") {
  Sampler sampler(43);
  for (int i = 0; i < 20; ++i) {
    const Mat2 k = Mat2::rotation(sampler.uniform(0.0, 2.0 * kPi));
    for (int j = 0; j < 8; ++j) {
      const P1Point y{sampler.uniform(0.0, kPi)};
      CHECK_THAT(sigma_p1(k, y), WithinAbs(1.0, 1e-14));
      CHECK_THAT(sigma_p1_s(k, y, 1.7), WithinAbs(1.0, 1e-13));
    }
  }
}

TEST_CASE("quadrature measure is uniform and exact on low harmonics") {
  const AtomicMeasure m = p1_quadrature(256);
  CHECK(is_probability(m));
  CHECK(m.size() == 256);
  // Midpoint sums of cos(2 theta) and sin(2 theta) vanish identically.
  double c = 0.0, s = 0.0;
  for (const auto& a : m.atoms()) {
    c += a.weight * std::cos(2.0 * a.point[0]);
    s += a.weight * std::sin(2.0 * a.point[0]);
  }
  CHECK_THAT(c, WithinAbs(0.0, 1e-14));
  CHECK_THAT(s, WithinAbs(0.0, 1e-14));
  CHECK_THROWS(p1_quadrature(1));
}

TEST_CASE("angle doubling sends the quadrature resultant to zero") {
  // Pushing each atom theta -> 2 theta mod pi turns the uniform grid into
  // a uniform grid again, so the vector average of (cos 2t, sin 2t)
  // vanishes. This exposes the atoms as genuine angle points.
  const AtomicMeasure m = p1_quadrature(128);
  const AtomicMeasure doubled = pushforward(m, [](const Vec& x) {
    Vec y(1);
    y[0] = p1_point(2.0 * x[0]).theta;
    return y;
  });
  double c = 0.0, s = 0.0;
  for (const auto& a : doubled.atoms()) {
    c += a.weight * std::cos(2.0 * a.point[0]);
    s += a.weight * std::sin(2.0 * a.point[0]);
  }
  CHECK_THAT(c, WithinAbs(0.0, 1e-13));
  CHECK_THAT(s, WithinAbs(0.0, 1e-13));
}

TEST_CASE("uniform angle measure is fixed at unit lifted multiplier") {
  const FixedMeasureReport hyper =
      fixed_measure_check(Mat2::diagonal(2.0), 2048);
  CHECK(hyper.passed());
  CHECK_THAT(hyper.sigma_tilde, WithinAbs(1.0, 1e-9));
  CHECK(hyper.max_weak_residual < 1e-6);

  const FixedMeasureReport sheared =
      fixed_measure_check(Mat2::shear(0.7).compose(Mat2::rotation(0.4)), 2048);
  CHECK(sheared.passed());

  CHECK_THROWS(fixed_measure_check(Mat2::diagonal(2.0), 32));
}

TEST_CASE("square root weighting pushes the average strictly below one") {
  // sigma^(1/2) averages below 1 by strict concavity whenever sigma is
  // not constant.
  const FixedMeasureReport r =
      fixed_measure_check(Mat2::diagonal(2.0), 2048, 0.5);
  CHECK(r.sigma_tilde < 1.0 - 1e-3);
  CHECK(r.sigma_tilde > 0.5);
}

TEST_CASE("rotation fixes the quadrature measure exactly atom by atom") {
  // A rotation by a grid step permutes the quadrature atoms.
  const int N = 64;
  const Mat2 k = Mat2::rotation(kPi / N);
  const LiftedPair lifted = lift(p1_pair());
  const AtomicMeasure m = p1_quadrature(N);
  const AtomicMeasure img = lifted.rho_tilde(k.to_mat(), m);
  CHECK(measure_gap(img, m, 1e-9) < 1e-12);
}

TEST_CASE("hyperbolic iterates concentrate mass at the attracting angle") {
  const Mat2 g = Mat2::diagonal(2.0);
  const AtomicMeasure m = p1_quadrature(1024);
  const ConcentrationReport report =
      proximality_concentration(g, m, 12, 0.01);

  CHECK_THAT(report.attract_theta, WithinAbs(0.0, 1e-12));
  CHECK_THAT(report.repel_theta, WithinAbs(kPi / 2.0, 1e-12));
  REQUIRE(report.mass.size() == 13);
  for (std::size_t n = 1; n < report.mass.size(); ++n)
    CHECK(report.mass[n] >= report.mass[n - 1] - 1e-12);
  // The grid has no atom exactly on the repelling line, so everything
  // eventually lands in the window.
  CHECK_THAT(report.mass.back(), WithinAbs(1.0, 1e-12));
  CHECK(report.mass.front() < 0.05);
}

TEST_CASE("attracting and repelling deltas behave as fixed points") {
  const Mat2 g = Mat2::diagonal(2.0);
  const AtomicMeasure at_attract = AtomicMeasure::dirac(make_vec({0.0}));
  const ConcentrationReport a =
      proximality_concentration(g, at_attract, 5, 0.01);
  for (const double mass : a.mass) CHECK_THAT(mass, WithinAbs(1.0, 1e-15));

  const AtomicMeasure at_repel =
      AtomicMeasure::dirac(make_vec({kPi / 2.0}));
  const ConcentrationReport r =
      proximality_concentration(g, at_repel, 5, 0.01);
  for (const double mass : r.mass) CHECK_THAT(mass, WithinAbs(0.0, 1e-15));
}

TEST_CASE("eigendirections are read off a generic hyperbolic element") {
  // g = [[3, 1], [2, 1]] normalized has eigenvector (1, lam - a) for the
  // larger eigenvalue; check g fixes the reported angles projectively.
  const Mat2 g(3.0, 1.0, 2.0, 1.0);
  const ConcentrationReport report =
      proximality_concentration(g, p1_quadrature(8), 0, 0.01);
  const P1Point attract{report.attract_theta};
  const P1Point repel{report.repel_theta};
  CHECK(p1_distance(act_p1(g, attract), attract) < 1e-12);
  CHECK(p1_distance(act_p1(g, repel), repel) < 1e-12);
  CHECK(p1_distance(attract, repel) > 0.1);
  // The attracting direction carries the smaller multiplier.
  CHECK(sigma_p1(g, attract) < 1.0);
  CHECK(sigma_p1(g, repel) > 1.0);
}

TEST_CASE("non-hyperbolic elements are rejected for concentration") {
  CHECK_THROWS(proximality_concentration(Mat2::rotation(0.5),
                                         p1_quadrature(64), 3, 0.01));
  CHECK_THROWS(proximality_concentration(Mat2::identity(),
                                         p1_quadrature(64), 3, 0.01));
  CHECK_THROWS(proximality_concentration(Mat2::diagonal(2.0),
                                         AtomicMeasure::dirac(make_vec({0.0}), 0.5),
                                         3, 0.01));
}

TEST_CASE("the angle pair plugs into the generic lift machinery") {
  const LiftedPair lifted = lift(p1_pair());
  Sampler sampler(44);
  const auto elements = sample_elements(sampler, 10);

  std::vector<std::pair<Mat, Mat>> pairs;
  for (std::size_t i = 0; i + 1 < elements.size(); i += 2)
    pairs.emplace_back(elements[i].to_mat(), elements[i + 1].to_mat());

  std::vector<AtomicMeasure> measures;
  for (int i = 0; i < 4; ++i) {
    std::vector<Atom> atoms;
    const auto w = sampler.probability_weights(5);
    for (int j = 0; j < 5; ++j) {
      Vec p(1);
      p[0] = sampler.uniform(0.0, kPi);
      atoms.push_back({std::move(p), w[static_cast<std::size_t>(j)]});
    }
    measures.push_back(AtomicMeasure(std::move(atoms)));
  }
  const VerifyReport report =
      verify_lifted_multiplier(lifted, pairs, measures, 1e-10);
  CHECK(report.passed());
  CHECK(report.max_violation < 1e-12);
}

TEST_CASE("evaluation matrix rows follow the cocycle when shifted") {
  Sampler sampler(45);
  const auto elements = sample_elements(sampler, 6);
  std::vector<P1Point> base;
  for (int j = 0; j < 9; ++j)
    base.push_back(p1_point((j + 0.5) * kPi / 9.0));

  const double s = 1.3;
  const Mat F = vsigma_sample(elements, base, s);
  REQUIRE(F.rows() == 6);
  REQUIRE(F.cols() == 9);

  const Mat2 gamma = Mat2::shear(0.3);
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j) {
      const double lhs = sigma_p1_s(elements[i].compose(gamma), base[j], s);
      const double rhs = sigma_p1_s(gamma, base[j], s) *
                         sigma_p1_s(elements[i], act_p1(gamma, base[j]), s);
      CHECK(rel_gap(lhs, rhs) < 1e-12);
      CHECK(F(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) ==
            sigma_p1_s(elements[i], base[j], s));
    }
}
