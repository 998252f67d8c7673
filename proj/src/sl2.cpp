#include "conekit/sl2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "conekit/msec.hpp"

namespace conekit {

namespace {
constexpr double kPi = std::numbers::pi;
}

Mat2::Mat2(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
  const double det = a * d - b * c;
  if (!(det > 0.0) || !std::isfinite(det))
    throw std::invalid_argument("Mat2: determinant must be positive finite");
  const double scale = 1.0 / std::sqrt(det);
  a *= scale;
  b *= scale;
  c *= scale;
  d *= scale;
}

Mat2 Mat2::rotation(double phi) {
  return {std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi)};
}

Mat2 Mat2::diagonal(double lam) {
  if (!(lam > 0.0))
    throw std::invalid_argument("Mat2::diagonal: lam must be positive");
  return {lam, 0.0, 0.0, 1.0 / lam};
}

Mat2 Mat2::shear(double t) { return {1.0, t, 0.0, 1.0}; }

Mat2 Mat2::compose(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
          c * o.b + d * o.d};
}

double Mat2::operator_norm() const {
  const double t = a * a + b * b + c * c + d * d;
  const double disc = std::max(0.0, t * t - 4.0);
  return std::sqrt((t + std::sqrt(disc)) / 2.0);
}

Mat Mat2::to_mat() const { return make_mat2(a, b, c, d); }

Mat2 Mat2::from_mat(const Mat& m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw std::invalid_argument("Mat2::from_mat: matrix is not 2x2");
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

P1Point p1_point(double theta) {
  if (!std::isfinite(theta))
    throw std::invalid_argument("p1_point: non-finite angle");
  double r = std::fmod(theta, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r = 0.0;
  return {r};
}

double p1_distance(P1Point x, P1Point y) {
  const double d = std::abs(p1_point(x.theta).theta - p1_point(y.theta).theta);
  return std::min(d, kPi - d);
}

P1Point act_p1(const Mat2& g, P1Point x) {
  const double ct = std::cos(x.theta);
  const double st = std::sin(x.theta);
  const double wx = g.a * ct + g.b * st;
  const double wy = g.c * ct + g.d * st;
  return p1_point(std::atan2(wy, wx));
}

double sigma_p1(const Mat2& g, P1Point x) {
  const double ct = std::cos(x.theta);
  const double st = std::sin(x.theta);
  const double wx = g.a * ct + g.b * st;
  const double wy = g.c * ct + g.d * st;
  return 1.0 / (wx * wx + wy * wy);
}

double sigma_p1_s(const Mat2& g, P1Point x, double s) {
  return std::pow(sigma_p1(g, x), s);
}

AtomicMeasure p1_quadrature(int N) {
  if (N < 2) throw std::invalid_argument("p1_quadrature: N must be >= 2");
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    Vec p(1);
    p[0] = (static_cast<double>(i) + 0.5) * kPi / static_cast<double>(N);
    atoms.push_back({std::move(p), 1.0 / static_cast<double>(N)});
  }
  return AtomicMeasure(std::move(atoms));
}

SemiConicPair p1_pair(double s) {
  PointAction rho = [](const Mat& g, const Vec& y) {
    if (y.size() != 1)
      throw std::invalid_argument("p1 pair: points are 1-d angles");
    Vec out(1);
    out[0] = act_p1(Mat2::from_mat(g), P1Point{y[0]}).theta;
    return out;
  };
  PointMultiplier sigma = [s](const Mat& g, const Vec& y) {
    if (y.size() != 1)
      throw std::invalid_argument("p1 pair: points are 1-d angles");
    return sigma_p1_s(Mat2::from_mat(g), P1Point{y[0]}, s);
  };
  return SemiConicPair{std::move(rho), std::move(sigma)};
}

namespace {

double integrate(const AtomicMeasure& mu,
                 const std::function<double(double)>& f) {
  std::vector<double> terms;
  terms.reserve(mu.size());
  for (const auto& a : mu.atoms()) terms.push_back(a.weight * f(a.point[0]));
  return pairwise_sum(terms);
}

}  // namespace

FixedMeasureReport fixed_measure_check(const Mat2& g, int N, double s,
                                       int harmonics) {
  if (N < 64)
    throw std::invalid_argument(
        "fixed_measure_check: quadrature needs N >= 64");
  if (harmonics < 1)
    throw std::invalid_argument("fixed_measure_check: harmonics must be >= 1");

  const LiftedPair lifted = lift(p1_pair(s));
  const AtomicMeasure m = p1_quadrature(N);
  const Mat gm = g.to_mat();

  FixedMeasureReport report;
  report.sigma_tilde = lifted.sigma_tilde(gm, m);
  report.mass_violation = std::abs(report.sigma_tilde - 1.0);

  const AtomicMeasure image = lifted.rho_tilde(gm, m);
  for (int k = 1; k <= harmonics; ++k) {
    const double kk = 2.0 * static_cast<double>(k);
    const auto co = [kk](double t) { return std::cos(kk * t); };
    const auto si = [kk](double t) { return std::sin(kk * t); };
    const double rc = std::abs(integrate(image, co) - integrate(m, co));
    const double rs = std::abs(integrate(image, si) - integrate(m, si));
    report.weak_residuals.emplace_back("cos" + std::to_string(2 * k), rc);
    report.weak_residuals.emplace_back("sin" + std::to_string(2 * k), rs);
    report.max_weak_residual = std::max({report.max_weak_residual, rc, rs});
  }
  return report;
}

ConcentrationReport proximality_concentration(const Mat2& g,
                                              const AtomicMeasure& nu,
                                              int iterations, double epsilon) {
  if (std::abs(g.trace()) <= 2.0 + 1e-12)
    throw std::invalid_argument(
        "proximality_concentration: element is not hyperbolic (|trace| <= 2)");
  if (!(epsilon > 0.0))
    throw std::invalid_argument("proximality_concentration: epsilon must be positive");
  if (iterations < 0)
    throw std::invalid_argument("proximality_concentration: negative iteration count");
  if (!is_probability(nu))
    throw std::invalid_argument(
        "proximality_concentration: nu is not a probability measure");
  if (nu.dim() != 1)
    throw std::invalid_argument("proximality_concentration: atoms must be 1-d angles");

  const double tr = g.trace();
  const double sq = std::sqrt(tr * tr - 4.0);
  const double dominant = tr > 0.0 ? (tr + sq) / 2.0 : (tr - sq) / 2.0;
  const double other = tr > 0.0 ? (tr - sq) / 2.0 : (tr + sq) / 2.0;
  auto eigendirection = [&](double lam) {
    const double v1x = g.b, v1y = lam - g.a;
    const double v2x = lam - g.d, v2y = g.c;
    const bool first = std::hypot(v1x, v1y) >= std::hypot(v2x, v2y);
    return p1_point(std::atan2(first ? v1y : v2y, first ? v1x : v2x));
  };

  ConcentrationReport report;
  report.attract_theta = eigendirection(dominant).theta;
  report.repel_theta = eigendirection(other).theta;

  auto window_mass = [&](const AtomicMeasure& mu) {
    double mass = 0.0;
    for (const auto& a : mu.atoms())
      if (p1_distance(P1Point{a.point[0]}, P1Point{report.attract_theta}) <=
          epsilon)
        mass += a.weight;
    return mass;
  };
  auto step = [&g](const Vec& y) {
    Vec out(1);
    out[0] = act_p1(g, P1Point{y[0]}).theta;
    return out;
  };

  AtomicMeasure cur = nu;
  report.mass.push_back(window_mass(cur));
  for (int n = 0; n < iterations; ++n) {
    cur = pushforward(cur, step);
    report.mass.push_back(window_mass(cur));
  }
  return report;
}

Mat vsigma_sample(const std::vector<Mat2>& group_points,
                  const std::vector<P1Point>& base_points, double s) {
  Mat F(static_cast<Eigen::Index>(group_points.size()),
        static_cast<Eigen::Index>(base_points.size()));
  for (std::size_t i = 0; i < group_points.size(); ++i)
    for (std::size_t j = 0; j < base_points.size(); ++j)
      F(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          sigma_p1_s(group_points[i], base_points[j], s);
  return F;
}

}  // namespace conekit
