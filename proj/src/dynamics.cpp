#include "conekit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace conekit {

GroupModel::GroupModel(int dim, std::vector<Mat> generators)
    : dim_(dim), generators_(std::move(generators)) {
  if (dim_ < 1) throw std::invalid_argument("GroupModel: dim must be >= 1");
  if (generators_.empty())
    throw std::invalid_argument("GroupModel: no generators");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const Mat& g = generators_[i];
    if (g.rows() != dim_ || g.cols() != dim_)
      throw std::invalid_argument("GroupModel: generator " + std::to_string(i) +
                                  " is not dim x dim");
    if (std::abs(g.determinant()) < 1e-14)
      throw std::invalid_argument("GroupModel: generator " + std::to_string(i) +
                                  " is singular");
  }
}

Mat GroupModel::inverse(const Mat& a) const {
  if (std::abs(a.determinant()) < 1e-300)
    throw std::domain_error("GroupModel: element is not invertible");
  return a.inverse();
}

Vec GroupModel::act(const Mat& g, const Vec& x) const {
  if (x.size() != dim_)
    throw std::invalid_argument("GroupModel: point dimension mismatch");
  return g * x;
}

Mat GroupWord::evaluate(const GroupModel& model) const {
  Mat out = model.identity();
  for (const auto& [idx, exp] : letters) {
    if (idx < 0 || idx >= static_cast<int>(model.generators().size()))
      throw std::out_of_range("GroupWord: generator index out of range");
    if (exp != 1 && exp != -1)
      throw std::invalid_argument("GroupWord: exponent must be +1 or -1");
    const Mat& g = model.generators()[static_cast<std::size_t>(idx)];
    out = out * (exp == 1 ? g : model.inverse(g));
  }
  return out;
}

ConicPair induced_pair(PointAction act, SectionFunctional L) {
  auto on_section = [L](const Vec& x) {
    if (x.size() != L.dim())
      throw std::invalid_argument("induced pair: point dimension mismatch");
    if (std::abs(L(x) - 1.0) > 1e-6)
      throw std::invalid_argument("induced pair: point is not on the section");
  };
  auto image = [act, L, on_section](const Mat& g, const Vec& x) {
    on_section(x);
    Vec z = act(g, x);
    if (L(z) <= 0.0)
      throw std::domain_error(
          "induced pair: action leaves the positive side of the section");
    return z;
  };
  PointMultiplier sigma = [L, image](const Mat& g, const Vec& x) {
    return L(image(g, x));
  };
  PointAction rho = [L, image](const Mat& g, const Vec& x) {
    Vec z = image(g, x);
    return Vec(z / L(z));
  };
  return ConicPair{std::move(L), std::move(rho), std::move(sigma)};
}

ConicPair induced_pair(const GroupModel& model, SectionFunctional L) {
  if (L.dim() != model.dim())
    throw std::invalid_argument("induced_pair: functional dimension mismatch");
  PointAction act = [model](const Mat& g, const Vec& x) {
    return model.act(g, x);
  };
  return induced_pair(std::move(act), std::move(L));
}

VerifyReport verify_multiplier(const SemiConicPair& pair, const GroupModel& model,
                               std::span<const std::pair<GroupWord, GroupWord>> words,
                               std::span<const Vec> points, double tol) {
  std::vector<std::pair<Mat, Mat>> pairs;
  pairs.reserve(words.size());
  for (const auto& [w1, w2] : words)
    pairs.emplace_back(w1.evaluate(model), w2.evaluate(model));
  return verify_multiplier_law<Vec>(pair.rho, pair.sigma, pairs, points, tol);
}

namespace {

Vec mix_points(double a, const Vec& x, double b, const Vec& y) {
  return a * x + b * y;
}

double point_gap(const Vec& x, const Vec& y) {
  return (x - y).lpNorm<Eigen::Infinity>();
}

}  // namespace

ConicPairReport verify_conic_pair(const ConicPair& pair,
                                  std::span<const SectionSample> samples,
                                  double tol) {
  return verify_convexity<Vec>(pair.rho, pair.sigma, samples, mix_points,
                               point_gap, tol);
}

PointAction synthesize_action(const ConicPair& pair,
                              std::span<const SectionSample> validation,
                              double tol) {
  const ConicPairReport report = verify_conic_pair(pair, validation, tol);
  if (!report.passed()) {
    const VerifyReport& bad =
        report.affinity.passed() ? report.mixing : report.affinity;
    throw std::invalid_argument(
        "synthesize_action: pair fails " + bad.name + " at " + bad.worst_input +
        " with violation " + format_double(bad.max_violation));
  }
  SectionFunctional L = pair.section;
  PointAction rho = pair.rho;
  PointMultiplier sigma = pair.sigma;
  return [L, rho, sigma](const Mat& g, const Vec& v) -> Vec {
    const double lam = L(v);
    if (v.lpNorm<Eigen::Infinity>() == 0.0) return Vec(Vec::Zero(v.size()));
    if (lam <= 0.0)
      throw std::domain_error(
          "synthesized action: point not in the open cone of the section");
    const Vec y = v / lam;
    return Vec(lam * sigma(g, y) * rho(g, y));
  };
}

double multiplier_ratio(const SemiConicPair& a, const SemiConicPair& b,
                        const Mat& g, std::span<const Vec> points, double tol) {
  if (points.empty())
    throw std::invalid_argument("multiplier_ratio: no sample points");
  double ratio = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (point_gap(a.rho(g, points[i]), b.rho(g, points[i])) > tol)
      throw std::invalid_argument(
          "multiplier_ratio: pairs do not share the same action");
    const double sa = a.sigma(g, points[i]);
    const double sb = b.sigma(g, points[i]);
    if (sa <= 0.0 || sb <= 0.0)
      throw std::domain_error("multiplier_ratio: nonpositive multiplier value");
    const double r = sb / sa;
    if (i == 0) {
      ratio = r;
    } else if (rel_gap(r, ratio) > tol) {
      throw std::invalid_argument(
          "multiplier_ratio: ratio varies across points (" +
          format_double(ratio) + " vs " + format_double(r) + ")");
    }
  }
  return ratio;
}

ConicPair scale_multiplier(const ConicPair& pair,
                           const std::function<double(const Mat&)>& hom,
                           const GroupModel& model,
                           std::span<const Mat> samples, double tol) {
  if (rel_gap(hom(model.identity()), 1.0) > tol)
    throw std::invalid_argument("scale_multiplier: hom(identity) != 1");
  for (const Mat& g : samples) {
    if (hom(g) <= 0.0)
      throw std::invalid_argument("scale_multiplier: hom takes a nonpositive value");
    for (const Mat& h : samples) {
      if (rel_gap(hom(model.compose(g, h)), hom(g) * hom(h)) > tol)
        throw std::invalid_argument(
            "scale_multiplier: hom is not multiplicative on the samples");
    }
  }
  PointMultiplier sigma = pair.sigma;
  PointMultiplier scaled = [hom, sigma](const Mat& g, const Vec& x) {
    return hom(g) * sigma(g, x);
  };
  return ConicPair{pair.section, pair.rho, std::move(scaled)};
}

CoverageReport orbit_coverage(const ConicPair& pair, const GroupModel& model,
                              const Vec& x0, std::span<const Vec> targets,
                              int max_word_length, double tol,
                              double dedup_tol) {
  if (max_word_length < 0)
    throw std::invalid_argument("orbit_coverage: negative word length bound");

  std::vector<Mat> letters;
  for (const Mat& g : model.generators()) {
    letters.push_back(g);
    letters.push_back(model.inverse(g));
  }

  CoverageReport report;
  for (const Vec& t : targets)
    report.targets.push_back({t, (x0 - t).norm(), 0});

  std::vector<Vec> visited{x0};
  std::vector<Vec> frontier{x0};
  auto seen = [&](const Vec& y) {
    return std::any_of(visited.begin(), visited.end(), [&](const Vec& v) {
      return (v - y).norm() <= dedup_tol;
    });
  };

  for (int depth = 1; depth <= max_word_length && !frontier.empty(); ++depth) {
    std::vector<Vec> next;
    for (const Vec& x : frontier) {
      for (const Mat& g : letters) {
        Vec y = pair.rho(g, x);
        if (seen(y)) continue;
        visited.push_back(y);
        next.push_back(y);
        for (auto& tc : report.targets) {
          const double d = (y - tc.target).norm();
          if (d < tc.min_distance) {
            tc.min_distance = d;
            tc.word_length = depth;
          }
        }
      }
    }
    frontier = std::move(next);
  }

  report.points_visited = visited.size();
  report.covered = std::all_of(
      report.targets.begin(), report.targets.end(),
      [tol](const TargetCoverage& tc) { return tc.min_distance <= tol; });
  return report;
}

InvarianceReport invariant_section_check(const GroupModel& model,
                                         const SectionFunctional& L,
                                         std::span<const Mat> elements,
                                         std::span<const Vec> points,
                                         double tol) {
  InvarianceReport report;
  for (const Mat& g : elements) {
    for (const Vec& x : points) {
      const double before = L(x);
      const double after = L(model.act(g, x));
      const double viol =
          std::abs(after - before) / std::max(1.0, std::abs(before));
      report.max_violation = std::max(report.max_violation, viol);
    }
  }
  report.invariant = report.max_violation <= tol;
  return report;
}

}  // namespace conekit
