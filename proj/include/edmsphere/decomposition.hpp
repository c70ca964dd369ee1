#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "edmsphere/edm.hpp"

namespace edmsphere {

enum class OriginPosition { relative_interior, relative_boundary };

/// How a simplex certificate was obtained.
enum class SimplexBasis {
  irreducible,  // Delta irreducible: simplex with w > 0
  zero_padded,  // one irreducible block plus zero rows: simplex, w zero there
  rank_only,    // several nonzero blocks: decided by Gram rank alone
};

const char* to_string(OriginPosition p);
const char* to_string(SimplexBasis b);

struct SimplexCertificate {
  Index order = 0;
  bool is_simplex = false;
  Eigen::VectorXd w;  // D w = e
  OriginPosition origin = OriginPosition::relative_boundary;
  SimplexBasis basis = SimplexBasis::rank_only;
  double lambda_max = 0.0;  // of the (cleaned) Delta
  Index gram_rank = 0;
  std::vector<Index> zero_rows;
};

/// Requires a unit spherical EDM with every off-diagonal >= 2 - tol.sign
/// (PreconditionError otherwise). Entries within tol.sign of 2 count as 2.
SimplexCertificate certify_simplex(const Edm& d);

struct DecompositionBlock {
  std::vector<Index> indices;  // original 0-based labels, in permuted order
  Edm edm;
  SimplexCertificate simplex;
  Index subspace_dim = 0;  // n_i - 1
};

struct Decomposition {
  std::vector<Index> permutation;  // concatenation of block indices
  std::vector<DecompositionBlock> blocks;
  /// Zero rows of Delta and the block that absorbed them (always the last).
  std::vector<Index> isolated;
  std::optional<Index> isolated_block;
  double cross_check = 0.0;  // max |d_ij - 2| across blocks
  double cross_gram = 0.0;   // max |<p_i, p_j>| across blocks
  Index embedding_dim = 0;
};

/// Splits a unit spherical EDM with 2 <= n - r <= r and all off-diagonals
/// >= 2 into n - r orthogonal simplex blocks. Blocks are ordered by smallest
/// original index; zero rows of Delta are appended to the last block.
/// Throws PreconditionError on unmet hypotheses and ConsistencyError when the
/// block structure contradicts them numerically.
Decomposition kuperberg_decompose(const Edm& d);

struct RankinCheck {
  bool holds = false;  // min off-diagonal <= 2 + tol.sign
  Index i = 0;         // witnessing pair (0-based)
  Index j = 0;
  double min_offdiag = 0.0;
  bool alarm = false;  // a counterexample can only be numerical trouble
};

/// Unit spherical EDM with n = r + 2 (PreconditionError otherwise).
RankinCheck rankin_codimension2_check(const Edm& d);

struct CrosspolytopeResult {
  bool recognized = false;
  std::vector<Index> permutation;  // P D P^T has the canonical block form
  std::optional<Index> failed_block;
  bool alarm = false;
  std::string detail;
};

/// Unit spherical EDM with n = 2r and all off-diagonals >= 2
/// (PreconditionError otherwise).
CrosspolytopeResult crosspolytope_recognize(const Edm& d);

struct RankinSampleSummary {
  Index r = 0;
  Index n = 0;
  Index trials = 0;
  std::uint64_t seed = 0;
  double margin = 0.0;
  double worst_min_d2 = 0.0;  // max over trials of the trial's min squared distance
  double best_min_d2 = 0.0;   // min over trials
  Index worst_trial = 0;
  Index certified = 0;  // trials that passed the unit spherical, n = r + 2 check
  Index violations = 0;
  bool passed = false;
};

/// Samples `trials` uniform (r+2)-point configurations on the unit
/// (r-1)-sphere and checks min d^2 <= 2 + margin in each. Trials run in
/// parallel with seeds derived from `seed`; the result does not depend on
/// the thread count.
RankinSampleSummary sample_rankin(Index r, Index trials, std::uint64_t seed, double margin,
                                  const Tolerances& tol = {});

}  // namespace edmsphere
