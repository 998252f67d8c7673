#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "conekit/dynamics.hpp"
#include "conekit/models.hpp"
#include "conekit/sampling.hpp"

using namespace conekit;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<Vec> simplex_points() {
  return {make_vec({1.0, 0.0}), make_vec({0.0, 1.0}), make_vec({0.5, 0.5}),
          make_vec({0.2, 0.8}), make_vec({0.9, 0.1})};
}

std::vector<std::pair<GroupWord, GroupWord>> word_pairs(Sampler& sampler,
                                                        int generators,
                                                        int count,
                                                        int max_length) {
  std::vector<std::pair<GroupWord, GroupWord>> out;
  for (int i = 0; i < count; ++i)
    out.emplace_back(sampler.word(generators, max_length),
                     sampler.word(generators, max_length));
  return out;
}

std::vector<SectionSample> simplex_samples(Sampler& sampler,
                                           const GroupModel& model,
                                           const SectionFunctional& L,
                                           int count, int max_length) {
  std::vector<SectionSample> out;
  for (int i = 0; i < count; ++i)
    out.push_back({sampler.word(static_cast<int>(model.generators().size()),
                                max_length)
                       .evaluate(model),
                   sampler.section_point(L), sampler.section_point(L),
                   sampler.uniform(0.05, 0.95)});
  return out;
}

}  // namespace

TEST_CASE("group model basics") {
  const GroupModel model = quadrant_monomial_model();
  CHECK(model.dim() == 2);
  const Mat g = model.generators()[0];
  CHECK((model.compose(g, model.inverse(g)) - model.identity()).norm() < 1e-14);

  GroupWord w{{{0, 1}, {1, 1}, {0, -1}}};
  const Mat m = w.evaluate(model);
  const Mat expected =
      model.generators()[0] * model.generators()[1] *
      model.inverse(model.generators()[0]);
  CHECK((m - expected).norm() < 1e-14);

  CHECK_THROWS(GroupModel(2, {Mat::Zero(2, 2)}));
}

TEST_CASE("induced pair on the simplex: stretch example") {
  const GroupModel model = quadrant_monomial_model();
  const ConicPair pair = induced_pair(model, quadrant_section());
  const Mat g = model.generators()[0];  // diag(2, 3)

  // At the corner (1, 0): g moves along the ray of (1, 0) with factor 2.
  CHECK_THAT(pair.sigma(g, make_vec({1.0, 0.0})), WithinAbs(2.0, 1e-15));
  const Vec img = pair.rho(g, make_vec({1.0, 0.0}));
  CHECK_THAT(img[0], WithinAbs(1.0, 1e-15));
  CHECK_THAT(img[1], WithinAbs(0.0, 1e-15));

  // Midpoint: L(g x) = 1 + 1.5 = 2.5, image (0.4, 0.6).
  CHECK_THAT(pair.sigma(g, make_vec({0.5, 0.5})), WithinAbs(2.5, 1e-15));
  const Vec mid = pair.rho(g, make_vec({0.5, 0.5}));
  CHECK_THAT(mid[0], WithinAbs(0.4, 1e-15));
  CHECK_THAT(mid[1], WithinAbs(0.6, 1e-15));
}

TEST_CASE("induced pair rejects off-section points lazily") {
  const GroupModel model = quadrant_monomial_model();
  const ConicPair pair = induced_pair(model, quadrant_section());
  const Mat g = model.generators()[0];
  CHECK_THROWS(pair.sigma(g, make_vec({1.0, 1.0})));

  // An action leaving the positive half space must be rejected too.
  const GroupModel flip(2, {-Mat::Identity(2, 2)});
  const ConicPair bad = induced_pair(flip, quadrant_section());
  CHECK_THROWS(bad.sigma(flip.generators()[0], make_vec({0.5, 0.5})));
}

TEST_CASE("cocycle law holds for the induced pair") {
  const GroupModel model = quadrant_monomial_model();
  const ConicPair pair = induced_pair(model, quadrant_section());
  Sampler sampler(11);
  const auto words = word_pairs(sampler, 2, 60, 6);
  const auto points = simplex_points();
  const VerifyReport report =
      verify_multiplier(pair.semi(), model, words, points, 1e-10);
  CHECK(report.passed());
  CHECK(report.max_violation < 1e-12);
}

TEST_CASE("a corrupted multiplier breaks the cocycle law") {
  const GroupModel model = quadrant_monomial_model();
  const ConicPair pair = induced_pair(model, quadrant_section());
  SemiConicPair bad = pair.semi();
  bad.sigma = [base = pair.sigma](const Mat& g, const Vec& x) {
    return base(g, x) * (1.0 + x[0]);
  };
  Sampler sampler(12);
  const auto words = word_pairs(sampler, 2, 40, 5);
  const auto points = simplex_points();
  const VerifyReport report =
      verify_multiplier(bad, model, words, points, 1e-10);
  CHECK_FALSE(report.passed());
  CHECK(report.max_violation > 1e-3);
  CHECK_FALSE(report.worst_input.empty());
}

TEST_CASE("squared multiplier stays a cocycle but loses affinity") {
  const GroupModel model = quadrant_monomial_model();
  const ConicPair base = induced_pair(model, quadrant_section());
  ConicPair squared{base.section, base.rho,
                    [s = base.sigma](const Mat& g, const Vec& x) {
                      const double v = s(g, x);
                      return v * v;
                    }};

  Sampler sampler(13);
  const auto words = word_pairs(sampler, 2, 40, 5);
  const auto points = simplex_points();
  CHECK(verify_multiplier(squared.semi(), model, words, points, 1e-10)
            .passed());

  const auto samples = simplex_samples(sampler, model, base.section, 60, 5);
  const ConicPairReport report = verify_conic_pair(squared, samples, 1e-10);
  CHECK_FALSE(report.affinity.passed());
  CHECK(report.affinity.max_violation > 1e-3);
}

TEST_CASE("convexity identities hold for the induced pair") {
  const GroupModel model = quadrant_monomial_model();
  const ConicPair pair = induced_pair(model, quadrant_section());
  Sampler sampler(14);
  const auto samples = simplex_samples(sampler, model, pair.section, 80, 6);
  const ConicPairReport report = verify_conic_pair(pair, samples, 1e-10);
  CHECK(report.passed());
  CHECK(report.max_violation() < 1e-13);
}

TEST_CASE("synthesized action extends the pair homogeneously") {
  const GroupModel model = quadrant_monomial_model();
  const ConicPair pair = induced_pair(model, quadrant_section());
  Sampler sampler(15);
  const auto samples = simplex_samples(sampler, model, pair.section, 40, 5);
  const PointAction act = synthesize_action(pair, samples, 1e-10);

  // On this family the synthesis must reproduce the matrix action.
  for (int i = 0; i < 20; ++i) {
    const Mat g = sampler.word(2, 6).evaluate(model);
    const Vec v = sampler.positive_point(2, 0.1, 3.0);
    CHECK((act(g, v) - g * v).norm() < 1e-12 * (g * v).norm());
  }
  CHECK(act(model.generators()[0], Vec::Zero(2)).norm() == 0.0);

  // Round trip: inducing from the synthesized action recovers the pair.
  const ConicPair back = induced_pair(act, pair.section);
  for (int i = 0; i < 20; ++i) {
    const Mat g = sampler.word(2, 6).evaluate(model);
    const Vec x = sampler.section_point(pair.section);
    CHECK(rel_gap(back.sigma(g, x), pair.sigma(g, x)) < 1e-12);
    CHECK((back.rho(g, x) - pair.rho(g, x)).norm() < 1e-12);
  }
}

TEST_CASE("synthesis refuses a pair that fails validation") {
  const GroupModel model = quadrant_monomial_model();
  const ConicPair base = induced_pair(model, quadrant_section());
  ConicPair squared{base.section, base.rho,
                    [s = base.sigma](const Mat& g, const Vec& x) {
                      const double v = s(g, x);
                      return v * v;
                    }};
  Sampler sampler(16);
  const auto samples = simplex_samples(sampler, model, base.section, 30, 5);
  CHECK_THROWS(synthesize_action(squared, samples, 1e-10));
}

TEST_CASE("multiplier ratio recovers a constant rescaling") {
  const GroupModel model = quadrant_monomial_model();
  const ConicPair pair = induced_pair(model, quadrant_section());
  const Mat g = model.generators()[0] * model.generators()[1];

  SemiConicPair scaled = pair.semi();
  scaled.sigma = [s = pair.sigma](const Mat& m, const Vec& x) {
    return 1.75 * s(m, x);
  };
  const auto points = simplex_points();
  CHECK_THAT(multiplier_ratio(pair.semi(), scaled, g, points, 1e-10),
             WithinAbs(1.75, 1e-12));

  // A point-dependent rescaling is not a constant ratio.
  SemiConicPair warped = pair.semi();
  warped.sigma = [s = pair.sigma](const Mat& m, const Vec& x) {
    return (1.0 + x[0]) * s(m, x);
  };
  CHECK_THROWS(multiplier_ratio(pair.semi(), warped, g, points, 1e-10));

  // Pairs with different actions are not comparable.
  SemiConicPair moved = pair.semi();
  moved.rho = [r = pair.rho](const Mat& m, const Vec& x) {
    Vec y = r(m, x);
    y[0] += 0.1;
    y[1] -= 0.1;
    return y;
  };
  CHECK_THROWS(multiplier_ratio(pair.semi(), moved, g, points, 1e-10));
}

TEST_CASE("determinant homomorphism rescales the multiplier") {
  const GroupModel model = quadrant_monomial_model();
  const ConicPair pair = induced_pair(model, quadrant_section());
  const auto hom = [](const Mat& g) {
    return std::sqrt(std::abs(g.determinant()));
  };
  Sampler sampler(17);
  std::vector<Mat> elements;
  for (int i = 0; i < 20; ++i)
    elements.push_back(sampler.word(2, 6).evaluate(model));

  const ConicPair scaled =
      scale_multiplier(pair, hom, model, elements, 1e-10);
  const Vec x = make_vec({0.5, 0.5});
  for (const Mat& g : elements) {
    CHECK(rel_gap(scaled.sigma(g, x), hom(g) * pair.sigma(g, x)) < 1e-14);
    CHECK((scaled.rho(g, x) - pair.rho(g, x)).norm() == 0.0);
  }

  // A non-multiplicative scale is rejected.
  const auto bad = [](const Mat& g) { return 1.0 + g(0, 0); };
  CHECK_THROWS(scale_multiplier(pair, bad, model, elements, 1e-10));
}

TEST_CASE("orbit coverage reaches both simplex corners") {
  const GroupModel model = quadrant_stretch_swap_model();
  const ConicPair pair = induced_pair(model, quadrant_section());
  const std::vector<Vec> targets{make_vec({1.0, 0.0}), make_vec({0.0, 1.0})};
  const CoverageReport report = orbit_coverage(
      pair, model, make_vec({0.3, 0.7}), targets, 40, 1e-3);
  CHECK(report.covered);
  CHECK(report.points_visited > 10);
  for (const auto& t : report.targets) {
    CHECK(t.min_distance <= 1e-3);
    CHECK(t.word_length <= 40);
  }
}

TEST_CASE("rotations of the disc never approach the rim corners") {
  const GroupModel model = disc_rotation_model(2.0 * 3.14159265358979323846 /
                                               7.0);
  const ConicPair pair = induced_pair(model, disc_section());
  const std::vector<Vec> targets{make_vec({0.0, 1.0, 1.0})};
  const CoverageReport report = orbit_coverage(
      pair, model, make_vec({0.25, 0.0, 1.0}), targets, 14, 1e-3);
  CHECK_FALSE(report.covered);
  // The orbit stays on the circle of radius 0.25, which keeps distance
  // at least 0.75 from the rim point.
  CHECK(report.targets[0].min_distance > 0.7);
}

TEST_CASE("rotation heights are invariant, monomial heights are not") {
  Sampler sampler(18);
  const std::vector<Vec> disc_points{make_vec({0.3, 0.1, 1.0}),
                                     make_vec({-0.2, 0.4, 1.0})};
  const GroupModel rot = disc_rotation_model(0.9);
  std::vector<Mat> rot_elements{rot.generators()[0],
                                rot.generators()[0] * rot.generators()[0]};
  const InvarianceReport inv = invariant_section_check(
      rot, disc_section(), rot_elements, disc_points, 1e-12);
  CHECK(inv.invariant);
  CHECK(inv.max_violation < 1e-14);

  const GroupModel mono = quadrant_monomial_model();
  std::vector<Mat> mono_elements{mono.generators()[0]};
  const auto pts = simplex_points();
  const InvarianceReport non = invariant_section_check(
      mono, quadrant_section(), mono_elements, pts, 1e-12);
  CHECK_FALSE(non.invariant);
  CHECK(non.max_violation > 0.5);
}

TEST_CASE("multiplier of the rotation pair is identically one") {
  const GroupModel rot = disc_rotation_model(1.3);
  const ConicPair pair = induced_pair(rot, disc_section());
  Sampler sampler(19);
  for (int i = 0; i < 10; ++i) {
    const Mat g = sampler.word(1, 5).evaluate(rot);
    const double r = sampler.uniform(0.0, 0.9);
    const double phi = sampler.uniform(0.0, 6.28);
    const Vec x =
        make_vec({r * std::cos(phi), r * std::sin(phi), 1.0});
    CHECK_THAT(pair.sigma(g, x), WithinAbs(1.0, 1e-14));
  }
}

TEST_CASE("one dimensional pairs over a trivial group are constant") {
  // On a one dimensional cone the section is a single point, so any
  // conic pair fixes it and the multiplier at the identity is 1.
  const GroupModel model = trivial_model(1);
  const ConicPair pair =
      induced_pair(model, SectionFunctional(make_vec({2.0})));
  const Vec q = make_vec({0.5});
  CHECK_THAT(pair.sigma(model.identity(), q), WithinAbs(1.0, 1e-15));
  CHECK((pair.rho(model.identity(), q) - q).norm() == 0.0);
}
