#pragma once

#include <functional>
#include <span>
#include <utility>

#include "conekit/dynamics.hpp"
#include "conekit/measure.hpp"

namespace conekit {

/// Lift of a point pair to atomic probability measures on the base space:
/// the lifted multiplier integrates sigma, the lifted action moves atoms
/// through rho and reweights them by sigma.
struct LiftedPair {
  SemiConicPair base;
  double merge_tol = tol::atom_merge;

  /// sum_i w_i sigma(g, y_i). Requires a probability measure.
  double sigma_tilde(const Mat& g, const AtomicMeasure& nu) const;

  /// Atoms (rho(g, y_i), w_i sigma(g, y_i) / sigma_tilde), coalesced at
  /// merge_tol so supports stay canonical.
  AtomicMeasure rho_tilde(const Mat& g, const AtomicMeasure& nu) const;
};

LiftedPair lift(const SemiConicPair& base);
LiftedPair lift(const ConicPair& base);

/// Cocycle law for the lifted multiplier over measures.
VerifyReport verify_lifted_multiplier(const LiftedPair& pair,
                                      std::span<const std::pair<Mat, Mat>> elements,
                                      std::span<const AtomicMeasure> measures,
                                      double tol = tol::compositional);

using MeasureSample = ConvexSample<AtomicMeasure>;

/// Convexity identities for the lift on the simplex of probability
/// measures (mixtures are formed atomwise).
ConicPairReport verify_lifted_conic_pair(const LiftedPair& pair,
                                         std::span<const MeasureSample> samples,
                                         double tol = tol::compositional);

struct EquivarianceReport {
  double barycenter_gap = 0.0;
  double sigma_gap = 0.0;
  bool passed(double tol) const {
    return barycenter_gap <= tol && sigma_gap <= tol;
  }
};

/// Barycenter equivariance of the lift on a convex section: moving the
/// barycenter through rho matches the barycenter of the lifted measure,
/// and the lifted multiplier evaluates sigma at the barycenter.
EquivarianceReport barycenter_equivariance_check(const ConicPair& base,
                                                 const Mat& g,
                                                 const AtomicMeasure& nu,
                                                 double tol = tol::compositional);

/// Density transport identity: the lifted image of nu equals the plain
/// pushforward reweighted by 1 / (sigma(g^{-1}, y) sigma_tilde(g, nu)).
VerifyReport radon_nikodym_check(const LiftedPair& pair, const Mat& g,
                                 const AtomicMeasure& nu,
                                 double tol = tol::radon_nikodym);

/// Linear functional mu -> integral of f against mu, f > 0 on the support.
double section_functional_from_density(const std::function<double(const Vec&)>& f,
                                       const AtomicMeasure& mu);

/// Multiplier carried to the f-section and read back through the canonical
/// ray identification: sigma'(g, y) = f(rho(g, y)) / f(y) * sigma(g, y).
SemiConicPair reweight_multiplier(const SemiConicPair& pair,
                                  std::function<double(const Vec&)> f);
ConicPair reweight_multiplier(const ConicPair& pair,
                              std::function<double(const Vec&)> f);

}  // namespace conekit
