#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "conekit/linalg.hpp"
#include "conekit/tolerances.hpp"

namespace conekit {

struct Atom {
  Vec point;
  double weight = 0.0;
};

/// Finitely supported nonnegative measure. Weights are strictly positive
/// after construction: zero-weight atoms are dropped, negative or
/// non-finite ones are rejected.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms);

  static AtomicMeasure dirac(Vec point, double weight = 1.0);

  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }
  int dim() const { return atoms_.empty() ? 0 : static_cast<int>(atoms_[0].point.size()); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  double total_mass() const;

 private:
  std::vector<Atom> atoms_;
};

bool is_probability(const AtomicMeasure& mu, double tol = tol::identity);

/// sum_i w_i x_i. Linear in the measure; rejects empty input.
Vec resultant(const AtomicMeasure& mu);

/// Image measure: atoms map through f, weights unchanged.
AtomicMeasure pushforward(const AtomicMeasure& mu,
                          const std::function<Vec(const Vec&)>& f);

/// Scale weights so the total mass is 1. Rejects zero mass.
AtomicMeasure normalize(const AtomicMeasure& mu);

/// Coalesce atoms whose points lie within tol of an earlier atom
/// (first-visited representative wins). Total mass is preserved exactly.
AtomicMeasure merge_atoms(const AtomicMeasure& mu, double tol = tol::atom_merge);

/// a*mu + b*kappa as an atomic measure (atom lists concatenated).
AtomicMeasure combine(double a, const AtomicMeasure& mu, double b,
                      const AtomicMeasure& kappa);

/// Canonical order: lexicographic by coordinates, then weight.
AtomicMeasure canonical_order(const AtomicMeasure& mu);

/// Distance between measures with matching support layout: both sides are
/// merged at merge_tol and canonically ordered, then compared atom by atom
/// (max of point gap and weight gap). Mismatched support counts give +inf.
double measure_gap(const AtomicMeasure& a, const AtomicMeasure& b,
                   double merge_tol = tol::atom_merge);

/// CSV rows "x_1,...,x_d,weight" in canonical atom order, no header.
void write_measure_csv(const AtomicMeasure& mu, std::ostream& out);
AtomicMeasure read_measure_csv(std::istream& in);

}  // namespace conekit
