#include "conekit/cone.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace conekit {

PolyhedralCone::PolyhedralCone(int dim, std::vector<Vec> generators)
    : dim_(dim), generators_(std::move(generators)) {
  if (dim_ < 1) throw std::invalid_argument("PolyhedralCone: dim must be >= 1");
  if (generators_.empty())
    throw std::invalid_argument("PolyhedralCone: generator list is empty");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].size() != dim_)
      throw std::invalid_argument("PolyhedralCone: generator " +
                                  std::to_string(i) + " has wrong dimension");
    if (generators_[i].norm() == 0.0)
      throw std::invalid_argument("PolyhedralCone: generator " +
                                  std::to_string(i) + " is zero");
  }
}

SectionFunctional::SectionFunctional(Vec weights) : weights_(std::move(weights)) {
  if (weights_.size() == 0 || weights_.norm() == 0.0)
    throw std::invalid_argument("SectionFunctional: zero functional");
}

bool SectionFunctional::positive_on(const PolyhedralCone& cone) const {
  if (cone.dim() != dim()) return false;
  for (const Vec& g : cone.generators())
    if (value(g) <= 0.0) return false;
  return true;
}

NnlsResult nnls(const Mat& A, const Vec& b) {
  const Eigen::Index n = A.cols();
  Vec x = Vec::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);

  // Dual threshold scaled to the problem; below it a coordinate cannot
  // improve the residual in a numerically meaningful way.
  const double scale = std::max(1.0, (A.transpose() * b).cwiseAbs().maxCoeff());
  const double w_tol = 1e-13 * scale;

  auto solve_passive = [&](Vec& z) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < n; ++i)
      if (passive[static_cast<std::size_t>(i)]) idx.push_back(i);
    if (idx.empty()) {
      z = Vec::Zero(n);
      return;
    }
    Mat Ap(A.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) Ap.col(static_cast<Eigen::Index>(k)) = A.col(idx[k]);
    Vec zp = Ap.colPivHouseholderQr().solve(b);
    z = Vec::Zero(n);
    for (std::size_t k = 0; k < idx.size(); ++k) z[idx[k]] = zp[static_cast<Eigen::Index>(k)];
  };

  const int max_outer = 3 * static_cast<int>(n) + 10;
  for (int outer = 0; outer < max_outer; ++outer) {
    const Vec w = A.transpose() * (b - A * x);
    Eigen::Index best = -1;
    double best_w = w_tol;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!passive[static_cast<std::size_t>(i)] && w[i] > best_w) {
        best_w = w[i];
        best = i;
      }
    }
    if (best < 0) break;
    passive[static_cast<std::size_t>(best)] = true;

    Vec z;
    solve_passive(z);
    int inner_guard = 3 * static_cast<int>(n) + 10;
    while (inner_guard-- > 0) {
      double alpha = 1.0;
      bool clipped = false;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (passive[static_cast<std::size_t>(i)] && z[i] <= 0.0) {
          const double denom = x[i] - z[i];
          if (denom > 0.0) alpha = std::min(alpha, x[i] / denom);
          clipped = true;
        }
      }
      if (!clipped) break;
      x += alpha * (z - x);
      for (Eigen::Index i = 0; i < n; ++i) {
        if (passive[static_cast<std::size_t>(i)] && x[i] <= 1e-14 * scale) {
          passive[static_cast<std::size_t>(i)] = false;
          x[i] = 0.0;
        }
      }
      solve_passive(z);
    }
    x = z.cwiseMax(0.0);
  }

  return NnlsResult{x, (A * x - b).norm()};
}

namespace {

Mat generators_matrix(const PolyhedralCone& cone, int skip = -1) {
  const auto& gens = cone.generators();
  const Eigen::Index cols =
      static_cast<Eigen::Index>(gens.size()) - (skip >= 0 ? 1 : 0);
  Mat A(cone.dim(), cols);
  Eigen::Index c = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (static_cast<int>(i) == skip) continue;
    A.col(c++) = gens[i];
  }
  return A;
}

}  // namespace

bool cone_contains(const PolyhedralCone& cone, const Vec& x, double tol) {
  if (x.size() != cone.dim())
    throw std::invalid_argument("cone_contains: dimension mismatch");
  return nnls(generators_matrix(cone), x).residual <= tol;
}

Vec project_to_section(const SectionFunctional& L, const Vec& x) {
  if (x.size() != L.dim())
    throw std::invalid_argument("project_to_section: dimension mismatch");
  const double lam = L(x);
  if (lam <= 0.0)
    throw std::domain_error(
        "project_to_section: point not in the open half space of L");
  return x / lam;
}

bool is_extreme_generator(const PolyhedralCone& cone, int generator_index,
                          double tol) {
  const auto& gens = cone.generators();
  if (generator_index < 0 ||
      generator_index >= static_cast<int>(gens.size()))
    throw std::out_of_range("is_extreme_generator: bad generator index");
  if (gens.size() == 1) return true;
  const Vec& g = gens[static_cast<std::size_t>(generator_index)];
  const double res =
      nnls(generators_matrix(cone, generator_index), g).residual;
  return res / g.norm() > tol;
}

Vec barycenter(std::span<const Vec> points, std::span<const double> weights,
               double weight_tol) {
  if (points.empty())
    throw std::invalid_argument("barycenter: empty point list");
  if (points.size() != weights.size())
    throw std::invalid_argument("barycenter: points/weights size mismatch");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("barycenter: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > weight_tol)
    throw std::invalid_argument("barycenter: weights do not sum to 1");
  Vec out = Vec::Zero(points[0].size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != out.size())
      throw std::invalid_argument("barycenter: inconsistent point dimensions");
    out += weights[i] * points[i];
  }
  return out;
}

}  // namespace conekit
