#include "conekit/sampling.hpp"

#include <stdexcept>

namespace conekit {

double Sampler::unit() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double Sampler::uniform(double lo, double hi) {
  return lo + (hi - lo) * unit();
}

int Sampler::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

GroupWord Sampler::word(int generator_count, int max_length, int min_length) {
  if (generator_count < 1)
    throw std::invalid_argument("word: need at least one generator");
  GroupWord w;
  const int len = uniform_int(min_length, max_length);
  w.letters.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    w.letters.emplace_back(uniform_int(0, generator_count - 1),
                           unit() < 0.5 ? 1 : -1);
  return w;
}

Vec Sampler::positive_point(int dim, double lo, double hi) {
  Vec x(dim);
  for (int i = 0; i < dim; ++i) x[i] = uniform(lo, hi);
  return x;
}

Vec Sampler::section_point(const SectionFunctional& L) {
  const Vec x = positive_point(L.dim());
  const double lam = L(x);
  if (lam <= 0.0)
    throw std::domain_error("section_point: functional is nonpositive on positive points");
  return Vec(x / lam);
}

std::vector<double> Sampler::probability_weights(int count) {
  if (count < 1) throw std::invalid_argument("probability_weights: count < 1");
  std::vector<double> w(static_cast<std::size_t>(count));
  double total = 0.0;
  for (auto& wi : w) {
    wi = uniform(0.1, 1.0);
    total += wi;
  }
  for (auto& wi : w) wi /= total;
  return w;
}

AtomicMeasure Sampler::measure_on_section(const SectionFunctional& L,
                                          int atom_count, bool probability) {
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(atom_count));
  std::vector<double> w = probability ? probability_weights(atom_count)
                                      : std::vector<double>();
  for (int i = 0; i < atom_count; ++i) {
    const double weight =
        probability ? w[static_cast<std::size_t>(i)] : uniform(0.1, 2.0);
    atoms.push_back({section_point(L), weight});
  }
  return AtomicMeasure(std::move(atoms));
}

}  // namespace conekit
