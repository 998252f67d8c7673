#pragma once

/// Default numeric tolerances, shared by the library, the test suites and
/// the CLI scenarios. Change them here or per call site, nowhere else.
namespace conekit::tol {

/// Identity-level algebraic checks (round trips, exact cancellations).
inline constexpr double identity = 1e-12;

/// Compositional checks (cocycle law, affinity, equivariance chains).
inline constexpr double compositional = 1e-10;

/// Orbit coverage distance to a target section point.
inline constexpr double coverage = 1e-3;

/// Spatial deduplication of orbit points during breadth-first enumeration.
inline constexpr double orbit_dedup = 1e-6;

/// Membership and extreme-ray residual threshold (nonnegative least squares).
inline constexpr double membership = 1e-9;

/// Atom coalescing distance when canonicalizing atomic measures.
inline constexpr double atom_merge = 1e-9;

/// Coboundary solving, log scale: |log(f(to)/(sigma f(from)))| <= this.
inline constexpr double coboundary = 1e-9;

/// Cauchy tail test for declared limit sequences in orbit graphs.
inline constexpr double limit_cauchy = 1e-10;

/// Density transport identity between lifted action and plain pushforward.
inline constexpr double radon_nikodym = 1e-9;

/// Quadrature fixed-measure checks on the projective line.
inline constexpr double fixed_mass = 1e-6;
inline constexpr double fixed_weak = 1e-4;

}  // namespace conekit::tol
