#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "conekit/cone.hpp"

using namespace conekit;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = 3.14159265358979323846;

PolyhedralCone quadrant() {
  return PolyhedralCone(2, {make_vec({1.0, 0.0}), make_vec({0.0, 1.0})});
}

/// Cone over a regular pentagon at height 1, plus the centroid ray.
PolyhedralCone pentagon_with_centroid() {
  std::vector<Vec> gens;
  for (int k = 0; k < 5; ++k) {
    const double theta = 2.0 * kPi * k / 5.0;
    gens.push_back(make_vec({std::cos(theta), std::sin(theta), 1.0}));
  }
  gens.push_back(make_vec({0.0, 0.0, 1.0}));
  return PolyhedralCone(3, std::move(gens));
}

}  // namespace

TEST_CASE("cone construction validates input") {
  CHECK_THROWS(PolyhedralCone(2, {}));
  CHECK_THROWS(PolyhedralCone(2, {make_vec({0.0, 0.0})}));
  CHECK_THROWS(PolyhedralCone(3, {make_vec({1.0, 0.0})}));
}

TEST_CASE("nnls recovers exact nonnegative coefficients") {
  Mat A(3, 2);
  A.col(0) = make_vec({1.0, 0.0, 1.0});
  A.col(1) = make_vec({0.0, 1.0, 1.0});
  const NnlsResult r = nnls(A, make_vec({1.0, 1.0, 2.0}));
  CHECK_THAT(r.coeffs[0], WithinAbs(1.0, 1e-12));
  CHECK_THAT(r.coeffs[1], WithinAbs(1.0, 1e-12));
  CHECK_THAT(r.residual, WithinAbs(0.0, 1e-12));
}

TEST_CASE("nnls clips to the boundary for infeasible targets") {
  // Target below the quadrant: best approximation zeroes the y part.
  Mat A(2, 2);
  A.col(0) = make_vec({1.0, 0.0});
  A.col(1) = make_vec({0.0, 1.0});
  const NnlsResult r = nnls(A, make_vec({2.0, -3.0}));
  CHECK_THAT(r.coeffs[0], WithinAbs(2.0, 1e-12));
  CHECK_THAT(r.coeffs[1], WithinAbs(0.0, 1e-12));
  CHECK_THAT(r.residual, WithinAbs(3.0, 1e-12));
}

TEST_CASE("nnls residual matches a brute-force grid search") {
  // Reproduce pentagon vertex 0 from the other four vertices. The grid
  // search below is an independent upper bound for the true distance;
  // the solver must do at least as well, and the grid must come close.
  std::vector<Vec> others;
  for (int k = 1; k < 5; ++k) {
    const double theta = 2.0 * kPi * k / 5.0;
    others.push_back(make_vec({std::cos(theta), std::sin(theta), 1.0}));
  }
  const Vec target = make_vec({1.0, 0.0, 1.0});

  Mat A(3, 4);
  for (int k = 0; k < 4; ++k) A.col(k) = others[static_cast<std::size_t>(k)];
  const NnlsResult r = nnls(A, target);

  double best = std::numeric_limits<double>::infinity();
  const double step = 0.05;
  for (double c0 = 0.0; c0 <= 1.5; c0 += step)
    for (double c1 = 0.0; c1 <= 1.5; c1 += step)
      for (double c2 = 0.0; c2 <= 1.5; c2 += step)
        for (double c3 = 0.0; c3 <= 1.5; c3 += step) {
          const Vec y = c0 * others[0] + c1 * others[1] + c2 * others[2] +
                        c3 * others[3];
          best = std::min(best, (y - target).norm());
        }

  CHECK(r.residual <= best + 1e-12);
  CHECK(best - r.residual <= 0.1);
  CHECK(r.residual > 0.3);
}

TEST_CASE("cone membership accepts generators and conic combinations") {
  const PolyhedralCone cone = quadrant();
  for (const Vec& g : cone.generators()) CHECK(cone_contains(cone, g));
  CHECK(cone_contains(cone, make_vec({2.0, 3.0})));
  CHECK(cone_contains(cone, make_vec({0.0, 0.0})));
  CHECK_FALSE(cone_contains(cone, make_vec({-1.0, 1.0})));
  CHECK_FALSE(cone_contains(cone, make_vec({1.0, -1e-3})));
}

TEST_CASE("pentagon vertices are extreme, the centroid ray is not") {
  const PolyhedralCone cone = pentagon_with_centroid();
  for (int k = 0; k < 5; ++k) CHECK(is_extreme_generator(cone, k));
  CHECK_FALSE(is_extreme_generator(cone, 5));
}

TEST_CASE("a single generator is extreme") {
  const PolyhedralCone ray(2, {make_vec({1.0, 2.0})});
  CHECK(is_extreme_generator(ray, 0));
}

TEST_CASE("section projection gives the canonical ray representative") {
  const SectionFunctional L(make_vec({1.0, 1.0}));
  const Vec q = project_to_section(L, make_vec({2.0, 6.0}));
  CHECK_THAT(q[0], WithinAbs(0.25, 1e-15));
  CHECK_THAT(q[1], WithinAbs(0.75, 1e-15));
  CHECK_THAT(L(q), WithinAbs(1.0, 1e-15));
  CHECK_THROWS(project_to_section(L, make_vec({-1.0, -1.0})));
  CHECK_THROWS(project_to_section(L, make_vec({0.0, 0.0})));
}

TEST_CASE("section functional positivity on a cone") {
  const PolyhedralCone cone = quadrant();
  CHECK(SectionFunctional(make_vec({1.0, 1.0})).positive_on(cone));
  CHECK(SectionFunctional(make_vec({0.5, 2.0})).positive_on(cone));
  CHECK_FALSE(SectionFunctional(make_vec({1.0, -1.0})).positive_on(cone));
  CHECK_FALSE(SectionFunctional(make_vec({1.0, 0.0})).positive_on(cone));
}

TEST_CASE("barycenter validates weights and averages points") {
  const std::vector<Vec> pts{make_vec({1.0, 0.0}), make_vec({0.0, 1.0})};
  const std::vector<double> w{0.25, 0.75};
  const Vec b = barycenter(pts, w);
  CHECK_THAT(b[0], WithinAbs(0.25, 1e-15));
  CHECK_THAT(b[1], WithinAbs(0.75, 1e-15));

  const std::vector<double> bad{0.5, 0.6};
  CHECK_THROWS(barycenter(pts, bad));
  const std::vector<double> negative{1.5, -0.5};
  CHECK_THROWS(barycenter(pts, negative));
}
