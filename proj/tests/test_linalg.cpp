#include <gtest/gtest.h>

#include <random>

#include "tyw/linalg.hpp"

using namespace tyw;

namespace {

Vec random_vec(std::mt19937_64& rng, int n, double density = 0.6) {
  std::normal_distribution<double> d;
  std::bernoulli_distribution keep(density);
  Vec v;
  for (int i = 0; i < n; ++i)
    if (keep(rng)) v.add(i, {d(rng), d(rng)});
  return v;
}

Vec combo(std::mt19937_64& rng, const std::vector<Vec>& vs) {
  std::normal_distribution<double> d;
  Vec out;
  for (const auto& v : vs) out.axpy({d(rng), d(rng)}, v);
  return out;
}

}  // namespace

TEST(SparseVector, ArithmeticAndPrune) {
  Vec a = Vec::unit(2, 3.0);
  Vec b = Vec::unit(2, 1.0) + Vec::unit(5, cplx(0, 1));
  Vec c = a - 3.0 * b;
  EXPECT_EQ(c[2], cplx(0));
  EXPECT_EQ(c.nnz(), 2u);
  c.prune({});
  EXPECT_EQ(c.nnz(), 1u);
  EXPECT_DOUBLE_EQ(c.max_abs(), 3.0);
  EXPECT_DOUBLE_EQ(max_abs_diff(a, a), 0.0);
  auto d = b.to_dense(6);
  EXPECT_EQ(Vec::from_dense(d, {}).nnz(), 2u);
}

TEST(SparseVector, TemporaryDataIsOwned) {
  auto make = [] { return Vec::unit(1, 2.0) + Vec::unit(4, 1.0); };
  int count = 0;
  for (const auto& [i, c] : make().data()) count += i + static_cast<int>(c.real());
  EXPECT_EQ(count, 1 + 2 + 4 + 1);
}

TEST(Subspace, RandomSpansHaveExpectedRank) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 12, r = 1 + trial % 8;
    std::vector<Vec> gens;
    for (int i = 0; i < r; ++i) gens.push_back(random_vec(rng, n, 0.9));
    std::vector<Vec> all = gens;
    for (int i = 0; i < 5; ++i) all.push_back(combo(rng, gens));
    Subspace S = Subspace::span(n, all);
    EXPECT_EQ(S.dim(), static_cast<std::size_t>(r));
    for (int i = 0; i < 5; ++i) EXPECT_TRUE(S.contains(combo(rng, gens)));
    Vec outside = random_vec(rng, n, 1.0);
    EXPECT_EQ(S.contains(outside), r == n);
    EXPECT_LT(S.residual(gens[0]), 1e-10);
  }
}

TEST(Subspace, IntersectAndSumDimensions) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 14;
    const int k = trial % 5, a = (trial / 5) % 4, b = 1 + trial % 3;
    std::vector<Vec> U, W1, W2;
    for (int i = 0; i < k; ++i) U.push_back(random_vec(rng, n, 1.0));
    for (int i = 0; i < a; ++i) W1.push_back(random_vec(rng, n, 1.0));
    for (int i = 0; i < b; ++i) W2.push_back(random_vec(rng, n, 1.0));
    auto S1 = U, S2 = U;
    S1.insert(S1.end(), W1.begin(), W1.end());
    S2.insert(S2.end(), W2.begin(), W2.end());
    Subspace S = Subspace::span(n, S1), T = Subspace::span(n, S2);
    Subspace I = intersect(S, T), P = sum(S, T);
    EXPECT_EQ(I.dim(), static_cast<std::size_t>(k));
    EXPECT_EQ(P.dim(), static_cast<std::size_t>(k + a + b));
    EXPECT_EQ(I.dim() + P.dim(), S.dim() + T.dim());
    EXPECT_TRUE(S.contains(I));
    EXPECT_TRUE(T.contains(I));
    EXPECT_TRUE(P.contains(S));
    if (!U.empty()) {
      EXPECT_TRUE(I.contains(combo(rng, U)));
    }
    EXPECT_TRUE(equal(S, Subspace::span(n, S.basis())));
  }
}

TEST(Subspace, InsertionOrderInvariance) {
  std::mt19937_64 rng(3);
  std::vector<Vec> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(random_vec(rng, 9));
  auto rev = gens;
  std::reverse(rev.begin(), rev.end());
  EXPECT_TRUE(equal(Subspace::span(9, gens), Subspace::span(9, rev)));
}

TEST(Subspace, NullspaceAnnihilates) {
  std::mt19937_64 rng(4);
  std::vector<Vec> rows;
  for (int i = 0; i < 4; ++i) rows.push_back(random_vec(rng, 10, 0.8));
  Subspace S = Subspace::span(10, rows);
  auto ns = S.nullspace();
  EXPECT_EQ(ns.size(), 10 - S.dim());
  for (const auto& x : ns) {
    for (const auto& r : rows) {
      cplx acc = 0;
      for (const auto& [i, c] : r.data()) acc += c * x[static_cast<std::size_t>(i)];
      EXPECT_LT(std::abs(acc), 1e-10);
    }
  }
}

TEST(KernelOfImages, RecoversKnownRelations) {
  std::mt19937_64 rng(5);
  std::vector<Vec> base;
  for (int i = 0; i < 3; ++i) {
    Vec v = random_vec(rng, 100, 0.05);
    v.add(30 * i + 7, 1.0);
    base.push_back(v);
  }
  // images: b0, b1, b2, b0 + 2 b1, i*b2
  std::vector<Vec> images = base;
  images.push_back(base[0] + 2.0 * base[1]);
  images.push_back(cplx(0, 1) * base[2]);
  auto ker = kernel_of_images(images, Tolerance{});
  ASSERT_EQ(ker.size(), 2u);
  for (const auto& c : ker) {
    Vec s;
    for (std::size_t i = 0; i < images.size(); ++i) s.axpy(c[i], images[i]);
    EXPECT_LT(s.max_abs(), 1e-10);
  }
}

TEST(SolveAffine, UniqueUnderdeterminedInconsistent) {
  std::mt19937_64 rng(6);
  const int n = 6;
  std::vector<cplx> x0(n);
  std::normal_distribution<double> d;
  for (auto& z : x0) z = {d(rng), d(rng)};
  std::vector<Vec> rows;
  std::vector<cplx> rhs;
  auto push = [&](const Vec& r) {
    rows.push_back(r);
    cplx acc = 0;
    for (const auto& [i, c] : r.data()) acc += c * x0[static_cast<std::size_t>(i)];
    rhs.push_back(acc);
  };
  for (int i = 0; i < n - 1; ++i) push(random_vec(rng, n, 1.0));
  auto under = solve_affine(n, rows, rhs, {});
  EXPECT_EQ(under.status, AffineSolution::Status::Underdetermined);
  push(random_vec(rng, n, 1.0));
  push(combo(rng, rows));
  auto uniq = solve_affine(n, rows, rhs, {});
  ASSERT_EQ(uniq.status, AffineSolution::Status::Unique);
  EXPECT_EQ(uniq.rank, static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) EXPECT_LT(std::abs(uniq.x[i] - x0[i]), 1e-9);
  rows.push_back(rows[0]);
  rhs.push_back(rhs[0] + 1.0);
  auto bad = solve_affine(n, rows, rhs, {});
  EXPECT_EQ(bad.status, AffineSolution::Status::Inconsistent);
}
