#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "conekit/cone.hpp"
#include "conekit/dynamics.hpp"
#include "conekit/measure.hpp"

namespace conekit {

/// Seeded draws for property tests and scenarios. One seed fixes every
/// subsequent draw, which is what makes reruns byte-identical.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double unit();                       // [0, 1)
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);     // inclusive bounds

  GroupWord word(int generator_count, int max_length, int min_length = 1);
  Vec positive_point(int dim, double lo = 0.1, double hi = 1.0);

  /// Positive coordinates scaled onto the section of L.
  Vec section_point(const SectionFunctional& L);

  std::vector<double> probability_weights(int count);
  AtomicMeasure measure_on_section(const SectionFunctional& L, int atom_count,
                                   bool probability = true);

 private:
  std::mt19937_64 rng_;
};

}  // namespace conekit
