#include "edmsphere/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "edmsphere/errors.hpp"
#include "edmsphere/generators.hpp"
#include "edmsphere/spectral.hpp"
#include "fixtures.hpp"

namespace edmsphere {
namespace {

Edm edm_of(const Eigen::MatrixXd& d) {
  auto v = validate_edm(d);
  EXPECT_TRUE(v) << v.detail;
  return *v.edm;
}

Eigen::MatrixXd example_edm() {
  Eigen::MatrixXd d = 2.0 * (Eigen::MatrixXd::Ones(5, 5) - Eigen::MatrixXd::Identity(5, 5));
  d(0, 1) = d(1, 0) = 4.0;
  d(2, 3) = d(3, 2) = 4.0;
  return d;
}

Eigen::MatrixXd permuted(const Eigen::MatrixXd& d, const std::vector<Index>& p) {
  const Index n = d.rows();
  Eigen::MatrixXd out(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) out(a, b) = d(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
  return out;
}

TEST(CertifySimplex, AntipodalPair) {
  const auto c = certify_simplex(gen_crosspolytope(1));
  EXPECT_TRUE(c.is_simplex);
  EXPECT_EQ(c.origin, OriginPosition::relative_interior);
  EXPECT_NEAR(c.w(0), 0.25, 1e-14);
  EXPECT_NEAR(c.w(1), 0.25, 1e-14);
}

TEST(CertifySimplex, UnitTriangle) {
  const auto c = certify_simplex(gen_regular_simplex(3, 3.0));
  EXPECT_TRUE(c.is_simplex);
  EXPECT_EQ(c.basis, SimplexBasis::irreducible);
  EXPECT_EQ(c.origin, OriginPosition::relative_interior);
  EXPECT_LE((c.w - Eigen::VectorXd::Constant(3, 1.0 / 6.0)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(CertifySimplex, ZeroPaddedBlockFromExample) {
  const std::vector<Index> nodes{2, 3, 4};
  const auto c = certify_simplex(edm_of(example_edm()).principal(nodes));
  EXPECT_TRUE(c.is_simplex);
  EXPECT_EQ(c.basis, SimplexBasis::zero_padded);
  EXPECT_EQ(c.origin, OriginPosition::relative_boundary);
  EXPECT_NEAR(c.w(0), 0.25, 1e-12);
  EXPECT_NEAR(c.w(1), 0.25, 1e-12);
  EXPECT_EQ(c.w(2), 0.0);
  EXPECT_EQ(c.zero_rows, std::vector<Index>{2});
}

TEST(CertifySimplex, DisconnectedSupportIsRankOnly) {
  const auto c = certify_simplex(gen_crosspolytope(2));
  EXPECT_EQ(c.basis, SimplexBasis::rank_only);
  EXPECT_FALSE(c.is_simplex);
}

TEST(CertifySimplex, Preconditions) {
  EXPECT_THROW(certify_simplex(gen_regular_simplex(3, 2.0)), PreconditionError);
  EXPECT_THROW(certify_simplex(gen_random_spherical(5, 3, 3).edm), PreconditionError);
}

TEST(Rankin, Codimension2) {
  const auto sq = rankin_codimension2_check(gen_crosspolytope(2));
  EXPECT_TRUE(sq.holds);
  EXPECT_EQ(sq.min_offdiag, 2.0);
  EXPECT_EQ(gen_crosspolytope(2)(sq.i, sq.j), 2.0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_TRUE(rankin_codimension2_check(gen_random_spherical(5, 3, seed).edm).holds);
    EXPECT_TRUE(rankin_codimension2_check(gen_random_spherical(4, 2, seed).edm).holds);
  }
  EXPECT_THROW(rankin_codimension2_check(gen_unit_simplex(4)), PreconditionError);
}

TEST(Kuperberg, Crosspolytope) {
  for (Index r = 2; r <= 5; ++r) {
    const auto dec = kuperberg_decompose(gen_crosspolytope(r));
    ASSERT_EQ(static_cast<Index>(dec.blocks.size()), r);
    for (const auto& b : dec.blocks) {
      EXPECT_EQ(b.indices.size(), 2u);
      EXPECT_EQ(b.edm(0, 1), 4.0);
      EXPECT_EQ(b.subspace_dim, 1);
    }
    EXPECT_TRUE(dec.isolated.empty());
    EXPECT_EQ(dec.cross_check, 0.0);
  }
}

TEST(Kuperberg, WorkedExample) {
  const auto dec = kuperberg_decompose(edm_of(example_edm()));
  ASSERT_EQ(dec.blocks.size(), 2u);
  EXPECT_EQ(dec.blocks[0].indices, (std::vector<Index>{0, 1}));
  EXPECT_EQ(dec.blocks[1].indices, (std::vector<Index>{2, 3, 4}));
  EXPECT_EQ(dec.blocks[0].subspace_dim, 1);
  EXPECT_EQ(dec.blocks[1].subspace_dim, 2);
  EXPECT_EQ(dec.isolated, std::vector<Index>{4});
  EXPECT_EQ(dec.isolated_block, Index{1});
  EXPECT_EQ(dec.blocks[1].simplex.origin, OriginPosition::relative_boundary);
  EXPECT_EQ(dec.blocks[0].simplex.origin, OriginPosition::relative_interior);
  EXPECT_EQ(dec.embedding_dim, 3);
}

TEST(Kuperberg, ForwardBackwardTwoSimplices) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(5, 5, 2.0);
  d.block(0, 0, 2, 2) = gen_unit_simplex(2).dist2().dense();
  d.block(2, 2, 3, 3) = gen_unit_simplex(3).dist2().dense();
  const auto dec = kuperberg_decompose(edm_of(d));
  ASSERT_EQ(dec.blocks.size(), 2u);
  EXPECT_EQ(dec.blocks[0].indices, (std::vector<Index>{0, 1}));
  EXPECT_EQ(dec.blocks[1].indices, (std::vector<Index>{2, 3, 4}));
  EXPECT_LE(dec.cross_gram, 1e-8);
}

TEST(Kuperberg, RandomRoundTrip) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 80; ++trial) {
    const auto c = testing::random_composition(2, 4, 5, 14, true, rng);
    const auto d = edm_of(c.d);
    ASSERT_EQ(d.embedding_dim(), c.embedding_dim);
    const auto dec = kuperberg_decompose(d);
    const auto want = testing::expected_blocks(c);
    ASSERT_EQ(dec.blocks.size(), want.size());
    for (std::size_t b = 0; b < want.size(); ++b) EXPECT_EQ(dec.blocks[b].indices, want[b]);
    Index dims = 0;
    for (const auto& b : dec.blocks) dims += b.subspace_dim;
    EXPECT_EQ(dims, d.embedding_dim());
    EXPECT_LE(dec.cross_check, 1e-8);
    EXPECT_LE(dec.cross_gram, 1e-8);
  }
}

TEST(Kuperberg, Preconditions) {
  EXPECT_THROW(kuperberg_decompose(gen_unit_simplex(4)), PreconditionError);
  EXPECT_THROW(kuperberg_decompose(gen_crosspolytope(1)), PreconditionError);
  EXPECT_THROW(kuperberg_decompose(gen_regular_simplex(4, 2.0)), PreconditionError);
}

TEST(Kuperberg, AllDistancesAboveTwoMeansFullDimension) {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> weight(0.2, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 2 + trial % 9;
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) w(i, j) = w(j, i) = weight(rng);
    w /= testing::oracle_eigenvalues(w).maxCoeff();
    const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(n, n);
    const auto d = edm_of(2.0 * (ones - Eigen::MatrixXd::Identity(n, n)) + 2.0 * w);
    ASSERT_GT(d.min_offdiag(), 2.0 + 1e-7);
    EXPECT_EQ(d.embedding_dim(), n - 1);
    EXPECT_TRUE(certify_simplex(d).is_simplex);
  }
}

TEST(Crosspolytope, RecognizesShuffled) {
  std::mt19937_64 rng(53);
  const auto cp = gen_crosspolytope(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Index> p(6);
    std::iota(p.begin(), p.end(), Index{0});
    std::shuffle(p.begin(), p.end(), rng);
    const auto res = crosspolytope_recognize(edm_of(permuted(cp.dist2().dense(), p)));
    ASSERT_TRUE(res.recognized);
    EXPECT_TRUE(permuted(permuted(cp.dist2().dense(), p), res.permutation) == cp.dist2().dense());
  }
}

TEST(Crosspolytope, TrivialAndPrecondition) {
  const auto one = crosspolytope_recognize(gen_crosspolytope(1));
  EXPECT_TRUE(one.recognized);
  EXPECT_EQ(one.permutation, (std::vector<Index>{0, 1}));
  EXPECT_THROW(crosspolytope_recognize(gen_unit_simplex(4)), PreconditionError);
}

TEST(SampleRankin, SmallSuite) {
  const auto s = sample_rankin(3, 200, 7, 1e-7);
  EXPECT_EQ(s.n, 5);
  EXPECT_EQ(s.trials, 200);
  EXPECT_TRUE(s.passed);
  EXPECT_EQ(s.violations, 0);
  EXPECT_LE(s.worst_min_d2, 2.0 + 1e-7);
  EXPECT_LE(s.best_min_d2, s.worst_min_d2);
  const auto again = sample_rankin(3, 200, 7, 1e-7);
  EXPECT_EQ(again.worst_min_d2, s.worst_min_d2);
}

}  // namespace
}  // namespace edmsphere
