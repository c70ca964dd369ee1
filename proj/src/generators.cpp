#include "edmsphere/generators.hpp"

#include <cmath>
#include <random>
#include <string>

#include "edmsphere/errors.hpp"
#include "edmsphere/kernels.hpp"

namespace edmsphere {

Edm gen_regular_simplex(Index n, double gamma, const Tolerances& tol) {
  if (n < 1) throw PreconditionError("regular simplex needs n >= 1");
  if (!(gamma > 0.0)) throw PreconditionError("regular simplex needs gamma > 0");
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, gamma);
  d.diagonal().setZero();
  return Edm::checked(SymMatrix::from_lower(d), tol);
}

Edm gen_unit_simplex(Index n, const Tolerances& tol) {
  if (n < 2) throw PreconditionError("unit simplex needs n >= 2");
  const auto nd = static_cast<double>(n);
  return gen_regular_simplex(n, 2.0 * nd / (nd - 1.0), tol);
}

Edm gen_crosspolytope(Index r, const Tolerances& tol) {
  if (r < 1) throw PreconditionError("crosspolytope needs r >= 1");
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(2 * r, 2 * r, 2.0);
  for (Index i = 0; i < r; ++i) {
    d(2 * i, 2 * i) = 0.0;
    d(2 * i + 1, 2 * i + 1) = 0.0;
    d(2 * i, 2 * i + 1) = 4.0;
    d(2 * i + 1, 2 * i) = 4.0;
  }
  return Edm::checked(SymMatrix::from_lower(d), tol);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Eigen::MatrixXd sample_unit_sphere(Index n, Index r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd p(n, r);
  for (Index i = 0; i < n; ++i) {
    double norm2 = 0.0;
    do {
      for (Index k = 0; k < r; ++k) p(i, k) = normal(rng);
      norm2 = p.row(i).squaredNorm();
    } while (norm2 == 0.0);
    p.row(i) /= std::sqrt(norm2);
  }
  return p;
}

SampledConfiguration gen_random_spherical(Index n, Index r, std::uint64_t seed,
                                          const Tolerances& tol) {
  if (r < 1) throw PreconditionError("random sphere needs r >= 1");
  if (n <= r) {
    throw PreconditionError("random sphere needs n > r (got n=" + std::to_string(n) +
                            ", r=" + std::to_string(r) + ")");
  }
  auto points = sample_unit_sphere(n, r, seed);
  auto d = SymMatrix::from_lower(kernels::squared_distances(points));
  return SampledConfiguration{Edm::checked(d, tol), std::move(points)};
}

}  // namespace edmsphere
