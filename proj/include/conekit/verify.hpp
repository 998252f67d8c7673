#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>

#include "conekit/linalg.hpp"
#include "conekit/report.hpp"

namespace conekit {

template <class P>
using ActionFn = std::function<P(const Mat&, const P&)>;
template <class P>
using MultiplierFn = std::function<double(const Mat&, const P&)>;

template <class P>
struct ConvexSample {
  Mat g;
  P x1;
  P x2;
  double lambda = 0.5;
};

/// Cocycle law sigma(g h, x) = sigma(g, rho(h, x)) * sigma(h, x), checked
/// as a relative gap over every (element pair, point) combination. Works
/// for any carrier P: section points, projective angles, atomic measures.
template <class P>
VerifyReport verify_multiplier_law(const ActionFn<P>& rho,
                                   const MultiplierFn<P>& sigma,
                                   std::span<const std::pair<Mat, Mat>> pairs,
                                   std::span<const P> points, double tol,
                                   std::string name = "multiplier-law") {
  VerifyReport report{std::move(name), tol};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Mat& g = pairs[i].first;
    const Mat& h = pairs[i].second;
    const Mat gh = g * h;
    for (std::size_t j = 0; j < points.size(); ++j) {
      const double lhs = sigma(gh, points[j]);
      const double rhs = sigma(g, rho(h, points[j])) * sigma(h, points[j]);
      report.record("pair=" + std::to_string(i) + ";point=" + std::to_string(j),
                    lhs, rhs, rel_gap(lhs, rhs));
    }
  }
  return report;
}

/// Convexity checks on one pair: the multiplier is affine along segments,
/// and the action maps a convex combination to the sigma-weighted convex
/// combination of the images. `mix(a, x, b, y)` forms a*x + b*y in the
/// carrier, `gap` measures the deviation between two carrier points.
template <class P, class MixFn, class GapFn>
ConicPairReport verify_convexity(const ActionFn<P>& rho,
                                 const MultiplierFn<P>& sigma,
                                 std::span<const ConvexSample<P>> samples,
                                 MixFn mix, GapFn gap, double tol) {
  ConicPairReport report;
  report.affinity = VerifyReport{"multiplier-affinity", tol};
  report.mixing = VerifyReport{"action-mixing", tol};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    const double lam = s.lambda;
    const P xm = mix(lam, s.x1, 1.0 - lam, s.x2);
    const double s1 = sigma(s.g, s.x1);
    const double s2 = sigma(s.g, s.x2);
    const double sm = sigma(s.g, xm);
    const std::string input = "sample=" + std::to_string(i);
    report.affinity.record(input, sm, lam * s1 + (1.0 - lam) * s2,
                           rel_gap(sm, lam * s1 + (1.0 - lam) * s2));

    const P lhs = rho(s.g, xm);
    const P rhs = mix(lam * s1 / sm, rho(s.g, s.x1), (1.0 - lam) * s2 / sm,
                      rho(s.g, s.x2));
    report.mixing.record(input, 0.0, 0.0, gap(lhs, rhs));
  }
  return report;
}

}  // namespace conekit
