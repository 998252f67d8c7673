#pragma once

#include "conekit/dynamics.hpp"

namespace conekit {

/// Positive monomial matrices on the closed first quadrant of R^2:
/// generated by diag(2, 3) and the weighted swap [[0, 1], [2, 0]]. Every
/// element is diagonal or antidiagonal with positive entries, so the
/// quadrant is preserved and no ray is fixed by the whole group.
GroupModel quadrant_monomial_model();

/// The section functional x + y cutting the standard 1-simplex.
SectionFunctional quadrant_section();

/// diag(2, 1) and the plain swap: iterates drive any interior point of
/// the simplex toward both corners.
GroupModel quadrant_stretch_swap_model();

/// Rotation about the z axis, acting on the cone over the unit disc at
/// height 1. The height functional is invariant, so the induced
/// multiplier is identically 1.
GroupModel disc_rotation_model(double angle);

/// The height functional z for the disc cone.
SectionFunctional disc_section();

/// Identity-only group in the given dimension.
GroupModel trivial_model(int dim);

}  // namespace conekit
