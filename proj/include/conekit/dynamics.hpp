#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "conekit/cone.hpp"
#include "conekit/linalg.hpp"
#include "conekit/report.hpp"
#include "conekit/verify.hpp"

namespace conekit {

/// Matrix group given by finitely many generators, acting linearly on R^dim.
class GroupModel {
 public:
  GroupModel(int dim, std::vector<Mat> generators);

  int dim() const { return dim_; }
  const std::vector<Mat>& generators() const { return generators_; }
  Mat identity() const { return Mat::Identity(dim_, dim_); }
  Mat compose(const Mat& a, const Mat& b) const { return a * b; }
  Mat inverse(const Mat& a) const;
  Vec act(const Mat& g, const Vec& x) const;

 private:
  int dim_;
  std::vector<Mat> generators_;
};

/// Reduced word over the model's generators: (generator index, +1 or -1).
struct GroupWord {
  std::vector<std::pair<int, int>> letters;
  Mat evaluate(const GroupModel& model) const;
  int length() const { return static_cast<int>(letters.size()); }
};

using PointAction = ActionFn<Vec>;
using PointMultiplier = MultiplierFn<Vec>;

/// Action plus multiplier on a point carrier, with no convexity assumed.
struct SemiConicPair {
  PointAction rho;
  PointMultiplier sigma;
};

/// Section action rho with its multiplier sigma relative to the cutting
/// functional: sigma(g, x) = L(g x) and rho(g, x) = g x / L(g x).
struct ConicPair {
  SectionFunctional section;
  PointAction rho;
  PointMultiplier sigma;
  SemiConicPair semi() const { return {rho, sigma}; }
};

/// Pair induced on the section of L by a linear action. Rejects (lazily,
/// at evaluation) points that the action carries out of the open half
/// space of L, and arguments not lying on the section.
ConicPair induced_pair(const GroupModel& model, SectionFunctional L);
ConicPair induced_pair(PointAction act, SectionFunctional L);

/// Cocycle law over word pairs evaluated in the model.
VerifyReport verify_multiplier(const SemiConicPair& pair, const GroupModel& model,
                               std::span<const std::pair<GroupWord, GroupWord>> words,
                               std::span<const Vec> points,
                               double tol = tol::compositional);

using SectionSample = ConvexSample<Vec>;

/// Affinity of sigma and the weighted mixing identity for rho on section
/// segments.
ConicPairReport verify_conic_pair(const ConicPair& pair,
                                  std::span<const SectionSample> samples,
                                  double tol = tol::compositional);

/// Homogeneous extension act(g, v) = L(v) sigma(g, v/L(v)) rho(g, v/L(v)),
/// with act(g, 0) = 0. Validates the convexity identities on the supplied
/// samples first and throws (naming the worst sample) if they fail.
PointAction synthesize_action(const ConicPair& pair,
                              std::span<const SectionSample> validation,
                              double tol = tol::compositional);

/// Constant ratio sigma_b / sigma_a at g across sample points. Throws if
/// the two pairs disagree on rho or the ratio varies beyond tol.
double multiplier_ratio(const SemiConicPair& a, const SemiConicPair& b,
                        const Mat& g, std::span<const Vec> points,
                        double tol = tol::compositional);

/// Same action, multiplier scaled by a positive homomorphism of the group.
/// The homomorphism property is validated on the supplied sample elements.
ConicPair scale_multiplier(const ConicPair& pair,
                           const std::function<double(const Mat&)>& hom,
                           const GroupModel& model,
                           std::span<const Mat> samples,
                           double tol = tol::identity);

struct TargetCoverage {
  Vec target;
  double min_distance = 0.0;
  int word_length = 0;  // depth at which min_distance was first attained
};

struct CoverageReport {
  bool covered = false;
  std::size_t points_visited = 0;
  std::vector<TargetCoverage> targets;
};

/// Breadth-first enumeration of the orbit of x0 under the section action,
/// deduplicated spatially, reporting the closest approach to each target.
CoverageReport orbit_coverage(const ConicPair& pair, const GroupModel& model,
                              const Vec& x0, std::span<const Vec> targets,
                              int max_word_length, double tol = tol::coverage,
                              double dedup_tol = tol::orbit_dedup);

struct InvarianceReport {
  bool invariant = false;
  double max_violation = 0.0;
};

/// Whether L(act(g, x)) = L(x) across the sampled elements and points.
InvarianceReport invariant_section_check(const GroupModel& model,
                                         const SectionFunctional& L,
                                         std::span<const Mat> elements,
                                         std::span<const Vec> points,
                                         double tol = tol::compositional);

}  // namespace conekit
