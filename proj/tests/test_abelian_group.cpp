#include <gtest/gtest.h>

#include <set>

#include "tyw/abelian_group.hpp"
#include "tyw/error.hpp"

using namespace tyw;

namespace {

// Every closed subset containing 0, by exhaustive search.
std::set<std::vector<int>> brute_subgroups(const FiniteAbelianGroup& G) {
  std::set<std::vector<int>> out;
  const int n = G.order();
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    bool closed = true;
    for (int a : s)
      for (int b : s)
        if (!(mask >> G.add(a, b) & 1u)) closed = false;
    if (closed) out.insert(s);
  }
  return out;
}

Bicharacter hyperbolic22(const FiniteAbelianGroup& G) {
  return Bicharacter(G, {{Phase(0, 1), Phase(1, 2)}, {Phase(1, 2), Phase(0, 1)}});
}

}  // namespace

TEST(Phase, ReductionAndArithmetic) {
  EXPECT_EQ(Phase::parse("-1/4"), Phase(3, 4));
  EXPECT_EQ(Phase::parse("5/4"), Phase(1, 4));
  EXPECT_EQ(Phase::parse("2/4"), Phase(1, 2));
  EXPECT_TRUE(Phase::parse("3").is_zero());
  EXPECT_EQ(Phase(1, 3) + Phase(2, 3), Phase());
  EXPECT_EQ(Phase(1, 6).times(4), Phase(2, 3));
  EXPECT_EQ(-Phase(1, 4), Phase(3, 4));
  EXPECT_NEAR(std::abs(Phase(1, 4).value() - std::complex<double>(0, 1)), 0, 1e-15);
  EXPECT_EQ(Phase(1, 4).str(), "1/4");
  EXPECT_THROW(Phase::parse("1/0"), Error);
  EXPECT_THROW(Phase::parse("x"), Error);
}

TEST(FiniteAbelianGroup, IndexingIsLexicographic) {
  FiniteAbelianGroup G({2, 3});
  EXPECT_EQ(G.order(), 6);
  EXPECT_EQ(G.element(1).coords, (std::vector<int>{0, 1}));
  EXPECT_EQ(G.element(3).coords, (std::vector<int>{1, 0}));
  for (int i = 0; i < 6; ++i) EXPECT_EQ(G.index(G.element(i)), i);
  EXPECT_EQ(G.add(G.parse_element("(1,2)"), G.parse_element("1,2")), G.parse_element("(0,1)"));
  EXPECT_EQ(G.neg(G.parse_element("(1,1)")), G.parse_element("(1,2)"));
  EXPECT_EQ(G.format(5), "(1,2)");
  EXPECT_EQ(FiniteAbelianGroup::parse("4").format(3), "3");
  EXPECT_EQ(G.parse_element("(3,7)"), G.parse_element("(1,1)"));
  EXPECT_THROW(G.parse_element("(1)"), Error);
  EXPECT_THROW(FiniteAbelianGroup::parse("0"), Error);
  EXPECT_THROW(FiniteAbelianGroup::parse("2,a"), Error);
}

TEST(Subgroups, MatchBruteForce) {
  for (auto spec : {"1", "2", "3", "4", "6", "8", "2,2", "2,4", "3,3", "2,2,2"}) {
    auto G = FiniteAbelianGroup::parse(spec);
    auto brute = brute_subgroups(G);
    auto subs = enumerate_subgroups(G);
    std::set<std::vector<int>> got;
    for (const auto& K : subs) got.insert(K.elements());
    EXPECT_EQ(got, brute) << spec;
    EXPECT_EQ(subs.size(), brute.size()) << spec;
    for (std::size_t i = 1; i < subs.size(); ++i) EXPECT_TRUE(subs[i - 1] < subs[i]);
  }
}

TEST(Subgroups, KnownCountsAndGuards) {
  EXPECT_EQ(enumerate_subgroups(FiniteAbelianGroup::parse("2,2")).size(), 5u);
  EXPECT_EQ(enumerate_subgroups(FiniteAbelianGroup::parse("12")).size(), 6u);
  EXPECT_THROW(enumerate_subgroups(FiniteAbelianGroup::parse("100"), 64), SizeError);
  auto G = FiniteAbelianGroup::parse("4");
  EXPECT_THROW(Subgroup(G, {0, 1}), InvariantError);
  EXPECT_EQ(Subgroup::generated_by(G, {2}).elements(), (std::vector<int>{0, 2}));
  EXPECT_EQ(Subgroup::generated_by(G, {3}).size(), 4);
}

TEST(Quotient, CosetsPartition) {
  for (auto spec : {"4", "6", "2,2", "2,4"}) {
    auto G = FiniteAbelianGroup::parse(spec);
    for (const auto& K : enumerate_subgroups(G)) {
      QuotientGroup q(G, K);
      EXPECT_EQ(q.size() * K.size(), G.order());
      std::vector<int> seen(G.order(), 0);
      for (int c = 0; c < q.size(); ++c) {
        EXPECT_EQ(q.members(c).front(), q.representative(c));
        for (int g : q.members(c)) {
          ++seen[g];
          EXPECT_EQ(q.coset_of(g), c);
        }
        for (int g = 0; g < G.order(); ++g) EXPECT_EQ(q.translate(g, c), q.coset_of(G.add(g, q.representative(c))));
      }
      for (int s : seen) EXPECT_EQ(s, 1);
      for (int c = 1; c < q.size(); ++c) EXPECT_LT(q.representative(c - 1), q.representative(c));
    }
  }
}

TEST(Bicharacter, StandardAndHyperbolicOrthogonals) {
  for (auto spec : {"1", "2", "3", "4", "6", "2,2", "2,4", "3,3"}) {
    auto G = FiniteAbelianGroup::parse(spec);
    auto chi = Bicharacter::standard(G);
    EXPECT_TRUE(chi.is_nondegenerate());
    for (const auto& K : enumerate_subgroups(G)) {
      auto Kp = orthogonal(chi, K);
      EXPECT_EQ(K.size() * Kp.size(), G.order());
      EXPECT_EQ(orthogonal(chi, Kp), K);
      for (int k : K.elements())
        for (int g : Kp.elements()) EXPECT_TRUE(chi.eval(k, g).is_zero());
    }
    for (int a = 0; a < G.order(); ++a)
      for (int b = 0; b < G.order(); ++b) {
        EXPECT_EQ(chi.eval(a, b), chi.eval(b, a));
        for (int c = 0; c < G.order(); ++c) EXPECT_EQ(chi.eval(G.add(a, b), c), chi.eval(a, c) + chi.eval(b, c));
      }
  }
  auto G = FiniteAbelianGroup::parse("4");
  auto K = Subgroup::generated_by(G, {2});
  EXPECT_EQ(orthogonal(Bicharacter::standard(G), K), K);
  auto H = FiniteAbelianGroup::parse("2,2");
  auto hyp = hyperbolic22(H);
  int self_dual = 0;
  for (const auto& L : enumerate_subgroups(H)) self_dual += orthogonal(hyp, L) == L;
  EXPECT_EQ(self_dual, 3);  // all three order-2 subgroups
}

TEST(Bicharacter, JsonAndValidation) {
  auto G = FiniteAbelianGroup::parse("2,2");
  auto chi = Bicharacter::from_json(G, R"({"matrix": [["0","1/2"],["1/2",0]]})");
  EXPECT_EQ(chi.eval(1, 2), Phase(1, 2));  // (0,1) with (1,0)
  EXPECT_EQ(Bicharacter::from_json(G, chi.to_json()).matrix(), chi.matrix());
  EXPECT_THROW(Bicharacter(G, {{Phase(1, 2), Phase(1, 4)}, {Phase(1, 4), Phase(0, 1)}}), InvariantError);
  EXPECT_THROW(Bicharacter(G, {{Phase(1, 2), Phase(1, 2)}, {Phase(0, 1), Phase(0, 1)}}), InvariantError);
  Bicharacter deg(G, {{Phase(1, 2), Phase(0, 1)}, {Phase(0, 1), Phase(0, 1)}});
  EXPECT_FALSE(deg.is_nondegenerate());
  EXPECT_EQ(deg.radical(), (std::vector<int>{0, 1}));
  EXPECT_THROW(orthogonal(deg, Subgroup::trivial(G)), InvariantError);
  EXPECT_THROW(Bicharacter::from_json(G, "{}"), Error);
}

TEST(CharacterOfK, AdditivityAndRhoCoset) {
  auto G = FiniteAbelianGroup::parse("4");
  auto chi = Bicharacter::standard(G);
  auto K = Subgroup::generated_by(G, {2});
  CharacterOfK rho(G, K, {{0, Phase()}, {2, Phase(1, 2)}});
  EXPECT_FALSE(rho.is_trivial());
  EXPECT_THROW(CharacterOfK(G, K, {{0, Phase(1, 2)}, {2, Phase(1, 2)}}), InvariantError);
  auto coset = orthogonal_rho(chi, K, rho);
  EXPECT_EQ(coset, (std::vector<int>{1, 3}));
  EXPECT_EQ(orthogonal_rho(chi, K, CharacterOfK::trivial(G, K)), (std::vector<int>{0, 2}));
}
