#include "conekit/measure.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace conekit {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) {
  atoms_.reserve(atoms.size());
  Eigen::Index dim = -1;
  for (auto& a : atoms) {
    if (!std::isfinite(a.weight))
      throw std::invalid_argument("AtomicMeasure: non-finite weight");
    if (a.weight < 0.0)
      throw std::invalid_argument("AtomicMeasure: negative weight");
    if (a.weight == 0.0) continue;
    if (!a.point.allFinite())
      throw std::invalid_argument("AtomicMeasure: non-finite atom position");
    if (dim < 0) dim = a.point.size();
    if (a.point.size() != dim)
      throw std::invalid_argument("AtomicMeasure: inconsistent atom dimensions");
    atoms_.push_back(std::move(a));
  }
}

AtomicMeasure AtomicMeasure::dirac(Vec point, double weight) {
  return AtomicMeasure({Atom{std::move(point), weight}});
}

double AtomicMeasure::total_mass() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.weight;
  return m;
}

bool is_probability(const AtomicMeasure& mu, double tol) {
  return !mu.empty() && std::abs(mu.total_mass() - 1.0) <= tol;
}

Vec resultant(const AtomicMeasure& mu) {
  if (mu.empty()) throw std::invalid_argument("resultant: empty measure");
  Vec out = Vec::Zero(mu.dim());
  for (const auto& a : mu.atoms()) out += a.weight * a.point;
  return out;
}

AtomicMeasure pushforward(const AtomicMeasure& mu,
                          const std::function<Vec(const Vec&)>& f) {
  std::vector<Atom> atoms;
  atoms.reserve(mu.size());
  for (const auto& a : mu.atoms()) atoms.push_back({f(a.point), a.weight});
  return AtomicMeasure(std::move(atoms));
}

AtomicMeasure normalize(const AtomicMeasure& mu) {
  const double m = mu.total_mass();
  if (m <= 0.0) throw std::domain_error("normalize: measure has zero mass");
  std::vector<Atom> atoms = mu.atoms();
  for (auto& a : atoms) a.weight /= m;
  return AtomicMeasure(std::move(atoms));
}

AtomicMeasure merge_atoms(const AtomicMeasure& mu, double tol) {
  if (tol < 0.0) throw std::invalid_argument("merge_atoms: negative tolerance");
  std::vector<Atom> merged;
  merged.reserve(mu.size());
  for (const auto& a : mu.atoms()) {
    bool absorbed = false;
    for (auto& rep : merged) {
      if ((rep.point - a.point).norm() <= tol) {
        rep.weight += a.weight;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(a);
  }
  return AtomicMeasure(std::move(merged));
}

AtomicMeasure combine(double a, const AtomicMeasure& mu, double b,
                      const AtomicMeasure& kappa) {
  if (a < 0.0 || b < 0.0)
    throw std::invalid_argument("combine: negative coefficient");
  std::vector<Atom> atoms;
  atoms.reserve(mu.size() + kappa.size());
  for (const auto& at : mu.atoms()) atoms.push_back({at.point, a * at.weight});
  for (const auto& at : kappa.atoms()) atoms.push_back({at.point, b * at.weight});
  return AtomicMeasure(std::move(atoms));
}

namespace {

bool atom_less(const Atom& x, const Atom& y) {
  for (Eigen::Index i = 0; i < x.point.size(); ++i) {
    if (x.point[i] < y.point[i]) return true;
    if (x.point[i] > y.point[i]) return false;
  }
  return x.weight < y.weight;
}

}  // namespace

AtomicMeasure canonical_order(const AtomicMeasure& mu) {
  std::vector<Atom> atoms = mu.atoms();
  std::stable_sort(atoms.begin(), atoms.end(), atom_less);
  return AtomicMeasure(std::move(atoms));
}

double measure_gap(const AtomicMeasure& a, const AtomicMeasure& b,
                   double merge_tol) {
  const AtomicMeasure ca = canonical_order(merge_atoms(a, merge_tol));
  const AtomicMeasure cb = canonical_order(merge_atoms(b, merge_tol));
  if (ca.size() != cb.size()) return std::numeric_limits<double>::infinity();
  double gap = 0.0;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const auto& x = ca.atoms()[i];
    const auto& y = cb.atoms()[i];
    gap = std::max(gap, (x.point - y.point).lpNorm<Eigen::Infinity>());
    gap = std::max(gap, std::abs(x.weight - y.weight));
  }
  return gap;
}

void write_measure_csv(const AtomicMeasure& mu, std::ostream& out) {
  const AtomicMeasure c = canonical_order(mu);
  for (const auto& a : c.atoms()) {
    for (Eigen::Index i = 0; i < a.point.size(); ++i)
      out << format_double(a.point[i]) << ',';
    out << format_double(a.weight) << '\n';
  }
}

AtomicMeasure read_measure_csv(std::istream& in) {
  std::vector<Atom> atoms;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> fields;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) fields.push_back(std::stod(cell));
    if (fields.size() < 2)
      throw std::invalid_argument("read_measure_csv: row needs >= 2 fields");
    Vec p(static_cast<Eigen::Index>(fields.size()) - 1);
    for (std::size_t i = 0; i + 1 < fields.size(); ++i)
      p[static_cast<Eigen::Index>(i)] = fields[i];
    atoms.push_back({std::move(p), fields.back()});
  }
  return AtomicMeasure(std::move(atoms));
}

}  // namespace conekit
