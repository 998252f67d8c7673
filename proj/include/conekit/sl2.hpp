#pragma once

#include <string>
#include <vector>

#include "conekit/dynamics.hpp"
#include "conekit/measure.hpp"

namespace conekit {

/// Unimodular 2x2 real matrix [[a, b], [c, d]]. Constructors renormalize
/// by sqrt(det) and reject a nonpositive determinant.
struct Mat2 {
  double a, b, c, d;

  Mat2(double a, double b, double c, double d);

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 rotation(double phi);
  static Mat2 diagonal(double lam);  // diag(lam, 1/lam), lam > 0
  static Mat2 shear(double t);       // [[1, t], [0, 1]]

  Mat2 compose(const Mat2& other) const;
  Mat2 inverse() const { return {d, -b, -c, a}; }
  double trace() const { return a + d; }
  double operator_norm() const;  // largest singular value

  Mat to_mat() const;
  static Mat2 from_mat(const Mat& m);
};

/// Projective line as angles theta in [0, pi); v(theta) = (cos, sin).
struct P1Point {
  double theta = 0.0;
};

P1Point p1_point(double theta);
double p1_distance(P1Point x, P1Point y);

/// Projective action: the angle of g v(theta), reduced mod pi.
P1Point act_p1(const Mat2& g, P1Point x);

/// Angular Jacobian of the action at theta: 1 / ||g v(theta)||^2. This is
/// the derivative d(g theta)/d theta, so the cocycle law follows from the
/// chain rule and the integral over the normalized angle measure is 1.
double sigma_p1(const Mat2& g, P1Point x);
double sigma_p1_s(const Mat2& g, P1Point x, double s);

/// Midpoint quadrature of the normalized angle measure: N atoms at
/// (i + 1/2) pi / N with weight 1/N each, stored as 1-d points.
AtomicMeasure p1_quadrature(int N);

/// The action and multiplier family as a pair on 1-d angle points, with
/// group elements passed as 2x2 matrices.
SemiConicPair p1_pair(double s = 1.0);

struct FixedMeasureReport {
  double sigma_tilde = 0.0;
  double mass_violation = 0.0;
  std::vector<std::pair<std::string, double>> weak_residuals;
  double max_weak_residual = 0.0;
  bool passed(double mass_tol = tol::fixed_mass,
              double weak_tol = tol::fixed_weak) const {
    return mass_violation <= mass_tol && max_weak_residual <= weak_tol;
  }
};

/// Quadrature check that the normalized angle measure is fixed by the
/// lifted pair: the lifted multiplier equals 1 and the lifted image
/// integrates the low harmonics cos(2k theta), sin(2k theta), k <= harmonics,
/// to the same values as the quadrature measure itself.
FixedMeasureReport fixed_measure_check(const Mat2& g, int N, double s = 1.0,
                                       int harmonics = 4);

struct ConcentrationReport {
  double attract_theta = 0.0;
  double repel_theta = 0.0;
  std::vector<double> mass;  // mass[n] within epsilon of attract, n = 0..iterations
};

/// Iterated plain pushforward of nu under a hyperbolic element, tracking
/// the mass inside the epsilon window around the attracting direction.
/// Rejects |trace| <= 2 + 1e-12 and non-probability nu.
ConcentrationReport proximality_concentration(const Mat2& g,
                                              const AtomicMeasure& nu,
                                              int iterations, double epsilon);

/// Evaluation matrix F(i, j) = sigma^s(g_i, y_j).
Mat vsigma_sample(const std::vector<Mat2>& group_points,
                  const std::vector<P1Point>& base_points, double s);

}  // namespace conekit
