#include "conekit/models.hpp"

#include <cmath>

namespace conekit {

GroupModel quadrant_monomial_model() {
  Mat stretch = make_mat2(2.0, 0.0, 0.0, 3.0);
  Mat swap = make_mat2(0.0, 1.0, 2.0, 0.0);
  return GroupModel(2, {stretch, swap});
}

SectionFunctional quadrant_section() {
  return SectionFunctional(make_vec({1.0, 1.0}));
}

GroupModel quadrant_stretch_swap_model() {
  Mat stretch = make_mat2(2.0, 0.0, 0.0, 1.0);
  Mat swap = make_mat2(0.0, 1.0, 1.0, 0.0);
  return GroupModel(2, {stretch, swap});
}

GroupModel disc_rotation_model(double angle) {
  Mat rot(3, 3);
  rot << std::cos(angle), -std::sin(angle), 0.0,
         std::sin(angle),  std::cos(angle), 0.0,
         0.0,              0.0,             1.0;
  return GroupModel(3, {rot});
}

SectionFunctional disc_section() {
  return SectionFunctional(make_vec({0.0, 0.0, 1.0}));
}

GroupModel trivial_model(int dim) {
  return GroupModel(dim, {Mat(Mat::Identity(dim, dim))});
}

}  // namespace conekit
