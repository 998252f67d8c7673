#pragma once

#include <span>
#include <vector>

#include "conekit/linalg.hpp"
#include "conekit/tolerances.hpp"

namespace conekit {

/// Finitely generated convex cone in R^dim, given by its generator rays.
class PolyhedralCone {
 public:
  PolyhedralCone(int dim, std::vector<Vec> generators);

  int dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return generators_; }

 private:
  int dim_;
  std::vector<Vec> generators_;
};

/// Positive linear functional L cutting the compact section Q = L^{-1}(1).
class SectionFunctional {
 public:
  explicit SectionFunctional(Vec weights);

  double value(const Vec& x) const { return weights_.dot(x); }
  double operator()(const Vec& x) const { return value(x); }
  int dim() const { return static_cast<int>(weights_.size()); }
  const Vec& weights() const { return weights_; }

  /// True iff L is strictly positive on every generator of the cone.
  bool positive_on(const PolyhedralCone& cone) const;

 private:
  Vec weights_;
};

struct NnlsResult {
  Vec coeffs;
  double residual = 0.0;
};

/// Lawson-Hanson active-set solve of min ||A c - b|| over c >= 0.
NnlsResult nnls(const Mat& A, const Vec& b);

/// Membership of x in the cone, via nonnegative least squares:
/// true iff some c >= 0 has ||sum_i c_i g_i - x|| <= tol.
bool cone_contains(const PolyhedralCone& cone, const Vec& x,
                   double tol = tol::membership);

/// Canonical ray representative x / L(x). Rejects L(x) <= 0.
Vec project_to_section(const SectionFunctional& L, const Vec& x);

/// True iff the indexed generator is not within tol (residual norm,
/// normalized by the generator's own norm) of the cone spanned by the
/// remaining generators.
bool is_extreme_generator(const PolyhedralCone& cone, int generator_index,
                          double tol = tol::membership);

/// Convex combination sum_i w_i x_i; weights must be nonnegative and sum
/// to 1 within weight_tol.
Vec barycenter(std::span<const Vec> points, std::span<const double> weights,
               double weight_tol = tol::identity);

}  // namespace conekit
