#include "conekit/msec.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace conekit {

namespace {

void require_probability(const AtomicMeasure& nu, const char* who) {
  if (!is_probability(nu))
    throw std::invalid_argument(std::string(who) +
                                ": measure is not a probability measure");
}

}  // namespace

double LiftedPair::sigma_tilde(const Mat& g, const AtomicMeasure& nu) const {
  require_probability(nu, "sigma_tilde");
  std::vector<double> terms;
  terms.reserve(nu.size());
  for (const auto& a : nu.atoms()) terms.push_back(a.weight * base.sigma(g, a.point));
  return pairwise_sum(terms);
}

AtomicMeasure LiftedPair::rho_tilde(const Mat& g, const AtomicMeasure& nu) const {
  const double st = sigma_tilde(g, nu);
  std::vector<Atom> atoms;
  atoms.reserve(nu.size());
  for (const auto& a : nu.atoms())
    atoms.push_back({base.rho(g, a.point), a.weight * base.sigma(g, a.point) / st});
  return merge_atoms(AtomicMeasure(std::move(atoms)), merge_tol);
}

LiftedPair lift(const SemiConicPair& base) { return LiftedPair{base}; }

LiftedPair lift(const ConicPair& base) { return LiftedPair{base.semi()}; }

VerifyReport verify_lifted_multiplier(const LiftedPair& pair,
                                      std::span<const std::pair<Mat, Mat>> elements,
                                      std::span<const AtomicMeasure> measures,
                                      double tol) {
  ActionFn<AtomicMeasure> rho = [&pair](const Mat& g, const AtomicMeasure& nu) {
    return pair.rho_tilde(g, nu);
  };
  MultiplierFn<AtomicMeasure> sigma = [&pair](const Mat& g,
                                              const AtomicMeasure& nu) {
    return pair.sigma_tilde(g, nu);
  };
  return verify_multiplier_law<AtomicMeasure>(rho, sigma, elements, measures,
                                              tol, "lifted-multiplier-law");
}

ConicPairReport verify_lifted_conic_pair(const LiftedPair& pair,
                                         std::span<const MeasureSample> samples,
                                         double tol) {
  ActionFn<AtomicMeasure> rho = [&pair](const Mat& g, const AtomicMeasure& nu) {
    return pair.rho_tilde(g, nu);
  };
  MultiplierFn<AtomicMeasure> sigma = [&pair](const Mat& g,
                                              const AtomicMeasure& nu) {
    return pair.sigma_tilde(g, nu);
  };
  auto mix = [&pair](double a, const AtomicMeasure& mu, double b,
                     const AtomicMeasure& kappa) {
    return merge_atoms(combine(a, mu, b, kappa), pair.merge_tol);
  };
  auto gap = [&pair](const AtomicMeasure& a, const AtomicMeasure& b) {
    return measure_gap(a, b, pair.merge_tol);
  };
  return verify_convexity<AtomicMeasure>(rho, sigma, samples, mix, gap, tol);
}

EquivarianceReport barycenter_equivariance_check(const ConicPair& base,
                                                 const Mat& g,
                                                 const AtomicMeasure& nu,
                                                 double tol) {
  (void)tol;
  require_probability(nu, "barycenter_equivariance_check");
  const LiftedPair lifted = lift(base);
  const Vec beta = resultant(nu);
  const Vec through_point = base.rho(g, beta);
  const Vec through_lift = resultant(lifted.rho_tilde(g, nu));
  EquivarianceReport report;
  report.barycenter_gap =
      (through_point - through_lift).lpNorm<Eigen::Infinity>();
  report.sigma_gap = rel_gap(base.sigma(g, beta), lifted.sigma_tilde(g, nu));
  return report;
}

VerifyReport radon_nikodym_check(const LiftedPair& pair, const Mat& g,
                                 const AtomicMeasure& nu, double tol) {
  require_probability(nu, "radon_nikodym_check");
  VerifyReport report{"radon-nikodym", tol};

  const double st = pair.sigma_tilde(g, nu);
  const AtomicMeasure lifted = canonical_order(pair.rho_tilde(g, nu));
  auto move_point = [&pair, &g](const Vec& y) { return pair.base.rho(g, y); };
  const AtomicMeasure plain = canonical_order(
      merge_atoms(pushforward(nu, move_point), pair.merge_tol));

  if (lifted.size() != plain.size()) {
    report.record("support", static_cast<double>(lifted.size()),
                  static_cast<double>(plain.size()),
                  std::numeric_limits<double>::infinity());
    return report;
  }

  const Mat ginv = g.inverse();
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    const auto& image = plain.atoms()[i];
    const auto& got = lifted.atoms()[i];
    const double expected =
        image.weight / (pair.base.sigma(ginv, image.point) * st);
    const double pos_gap = (image.point - got.point).lpNorm<Eigen::Infinity>();
    report.record("atom=" + std::to_string(i), got.weight, expected,
                  std::max(pos_gap, rel_gap(got.weight, expected)));
  }
  return report;
}

double section_functional_from_density(const std::function<double(const Vec&)>& f,
                                       const AtomicMeasure& mu) {
  std::vector<double> terms;
  terms.reserve(mu.size());
  for (const auto& a : mu.atoms()) {
    const double fy = f(a.point);
    if (fy <= 0.0)
      throw std::domain_error(
          "section_functional_from_density: density is not positive on the support");
    terms.push_back(a.weight * fy);
  }
  return pairwise_sum(terms);
}

SemiConicPair reweight_multiplier(const SemiConicPair& pair,
                                  std::function<double(const Vec&)> f) {
  PointAction rho = pair.rho;
  PointMultiplier sigma = pair.sigma;
  PointMultiplier reweighted = [rho, sigma, f](const Mat& g, const Vec& y) {
    const double fy = f(y);
    const double fry = f(rho(g, y));
    if (fy <= 0.0 || fry <= 0.0)
      throw std::domain_error("reweight_multiplier: density must be positive");
    return fry / fy * sigma(g, y);
  };
  return SemiConicPair{rho, std::move(reweighted)};
}

ConicPair reweight_multiplier(const ConicPair& pair,
                              std::function<double(const Vec&)> f) {
  SemiConicPair semi = reweight_multiplier(pair.semi(), std::move(f));
  return ConicPair{pair.section, semi.rho, semi.sigma};
}

}  // namespace conekit
