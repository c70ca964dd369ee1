#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "edmsphere/edm.hpp"

namespace edmsphere {

/// gamma (E - I). Throws PreconditionError for n < 1 or gamma <= 0.
Edm gen_regular_simplex(Index n, double gamma, const Tolerances& tol = {});

/// The regular simplex on the unit sphere, gamma = 2n/(n-1). Requires n >= 2.
Edm gen_unit_simplex(Index n, const Tolerances& tol = {});

/// 2r x 2r EDM of the regular r-crosspolytope: diagonal blocks 4(E2 - I2),
/// off-diagonal blocks 2 E2, pair i on rows 2i, 2i+1 (0-based).
Edm gen_crosspolytope(Index r, const Tolerances& tol = {});

struct SampledConfiguration {
  Edm edm;
  Eigen::MatrixXd points;  // n x r, unit rows
};

/// n independent uniform points on the unit (r-1)-sphere. Requires
/// r >= 1 and n > r.
SampledConfiguration gen_random_spherical(Index n, Index r, std::uint64_t seed,
                                          const Tolerances& tol = {});

/// Normalized standard-normal rows; the sampling step of gen_random_spherical.
Eigen::MatrixXd sample_unit_sphere(Index n, Index r, std::uint64_t seed);

/// Per-trial seed derived from a master seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial);

}  // namespace edmsphere
