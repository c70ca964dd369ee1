#include <exception>
#include <limits>
#include <vector>

#include "edmsphere/decomposition.hpp"
#include "edmsphere/errors.hpp"
#include "edmsphere/generators.hpp"
#include "edmsphere/kernels.hpp"

namespace edmsphere {

namespace {

struct TrialOutcome {
  double min_d2 = std::numeric_limits<double>::infinity();
  bool certified = false;
};

TrialOutcome run_trial(Index r, std::uint64_t seed, const Tolerances& tol) {
  const Index n = r + 2;
  const auto points = sample_unit_sphere(n, r, seed);
  const Eigen::MatrixXd d = kernels::squared_distances(points);
  TrialOutcome out;
  try {
    const auto edm = Edm::checked(SymMatrix::from_lower(d), tol);
    const auto check = rankin_codimension2_check(edm);
    out.min_d2 = check.min_offdiag;
    out.certified = true;
    return out;
  } catch (const std::exception&) {
    // Numerically degenerate sample that cannot be certified; scan directly.
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) out.min_d2 = std::min(out.min_d2, d(i, j));
  }
  return out;
}

}  // namespace

RankinSampleSummary sample_rankin(Index r, Index trials, std::uint64_t seed, double margin,
                                  const Tolerances& tol) {
  if (r < 1) throw PreconditionError("sample_rankin: r must be >= 1");
  if (trials < 1) throw PreconditionError("sample_rankin: need at least one trial");

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic, 16)
  for (Index t = 0; t < trials; ++t) {
    outcomes[static_cast<std::size_t>(t)] =
        run_trial(r, derive_seed(seed, static_cast<std::uint64_t>(t)), tol);
  }

  RankinSampleSummary s;
  s.r = r;
  s.n = r + 2;
  s.trials = trials;
  s.seed = seed;
  s.margin = margin;
  s.worst_min_d2 = -std::numeric_limits<double>::infinity();
  s.best_min_d2 = std::numeric_limits<double>::infinity();
  for (Index t = 0; t < trials; ++t) {
    const auto& o = outcomes[static_cast<std::size_t>(t)];
    if (o.min_d2 > s.worst_min_d2) {
      s.worst_min_d2 = o.min_d2;
      s.worst_trial = t;
    }
    s.best_min_d2 = std::min(s.best_min_d2, o.min_d2);
    if (o.certified) ++s.certified;
    if (!(o.min_d2 <= 2.0 + margin)) ++s.violations;
  }
  s.passed = s.violations == 0;
  return s;
}

}  // namespace edmsphere
