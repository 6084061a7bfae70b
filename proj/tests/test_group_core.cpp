// Group-core and permutation backend: element operations, closure, generation,
// conjugacy classes, stabilizer-chain orders and the conjugator search.
#include "bv/gallery.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace bv;

namespace {

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint16_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<std::uint16_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Parity by counting inversions, independent of the cycle decomposition.
bool odd_by_inversions(const Perm& p) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < p.degree(); ++i)
    for (std::size_t j = i + 1; j < p.degree(); ++j)
      if (p(i) > p(j)) ++inv;
  return inv % 2 == 1;
}

}  // namespace

TEST(ParseCycles, ThreeCycleMovesThreePoints) {
  SymGroup S(8);
  Perm p = S.parse("(1,2,3)");
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(2), 0);
  for (std::size_t i = 3; i < 8; ++i) EXPECT_EQ(p(i), i);
}

TEST(ParseCycles, PrintedElementAndIdentity) {
  SymGroup S(8);
  Perm a = S.parse("(5,4,1)(2,6)");
  EXPECT_EQ(a(4), 3);
  EXPECT_EQ(a(3), 0);
  EXPECT_EQ(a(0), 4);
  EXPECT_EQ(a(1), 5);
  EXPECT_EQ(a(5), 1);
  EXPECT_EQ(a.to_string(), "(1,5,4)(2,6)");
  EXPECT_TRUE(S.parse("()").is_identity());
  EXPECT_EQ(S.parse(a.to_string()), a);
}

TEST(ParseCycles, ZeroBasedAndErrors) {
  SymGroup S(4);
  EXPECT_EQ(S.parse("(0,1)", true), S.parse("(1,2)"));
  EXPECT_THROW(S.parse("(1,9)"), MalformedElement);
  EXPECT_THROW(S.parse("(1,2"), MalformedElement);
  EXPECT_THROW(S.parse("(1,1)"), MalformedElement);
  EXPECT_THROW(AltGroup(4).parse("(1,2)"), MalformedElement);
}

TEST(Parity, Examples) {
  SymGroup S(8);
  EXPECT_EQ(parity(S.parse("(1,2)")), Parity::odd);
  EXPECT_EQ(parity(S.parse("(1,2,3)")), Parity::even);
  EXPECT_EQ(parity(S.parse("(5,4,1)(2,6)")), Parity::odd);
}

TEST(Parity, AgreesWithInversionCount) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    Perm p = random_perm(9, rng);
    EXPECT_EQ(parity(p) == Parity::odd, odd_by_inversions(p));
  }
}

TEST(GroupAxioms, RandomPermutations) {
  std::mt19937_64 rng(3);
  SymGroup S(7);
  for (int k = 0; k < 100; ++k) {
    Perm x = random_perm(7, rng), y = random_perm(7, rng), z = random_perm(7, rng);
    EXPECT_EQ(S.mul(S.mul(x, y), z), S.mul(x, S.mul(y, z)));
    EXPECT_EQ(S.mul(x, S.inv(x)), S.identity());
    EXPECT_EQ(S.mul(S.identity(), x), x);
    // maps act from the left
    for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ((x * y)(i), x(y(i)));
  }
}

TEST(ElementOrder, Examples) {
  SymGroup S(8);
  EXPECT_EQ(element_order(S, S.parse("(1,2,3)")), 3u);
  SL2Group G(7);
  auto k = sl2_constants(7);
  EXPECT_EQ(element_order(G, k.B), 4u);
  EXPECT_EQ(element_order(G, k.T), 7u);
  EXPECT_THROW(element_order(G, Mat2::make(7, 2, 0, 0, 2)), MalformedElement);
}

TEST(ElementOrder, MatchesPowerIterationAndDividesGroupOrder) {
  std::mt19937_64 rng(5);
  SymGroup S(9);
  for (int k = 0; k < 100; ++k) {
    Perm x = random_perm(9, rng);
    std::uint64_t m = 1;
    Perm y = x;
    while (!y.is_identity()) {
      y = y * x;
      ++m;
    }
    EXPECT_EQ(element_order(S, x), m);
    EXPECT_EQ(362880 % m, 0u);
  }
}

TEST(Conjugate, Examples) {
  SymGroup S(8);
  EXPECT_EQ(conjugate(S, S.identity(), S.parse("(1,5,7)")), S.identity());
  EXPECT_EQ(conjugate(S, S.parse("(1,2)"), S.parse("(1,3)")), S.parse("(2,3)"));
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    Perm g = random_perm(8, rng), h = random_perm(8, rng);
    Perm x = conjugate(S, g, h);
    EXPECT_EQ(x.order(), g.order());
    EXPECT_EQ(x, h * g * h.inverse());
  }
}

TEST(Conjugate, LandsInConjugacyClass) {
  SymGroup S(6);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 30; ++k) {
    Perm g = random_perm(6, rng), h = random_perm(6, rng);
    auto cls = conjugacy_class(S, g, 1000);
    EXPECT_TRUE(cls.count(conjugate(S, g, h)));
  }
}

TEST(GeneratedSubgroup, AbelianExamples) {
  Ab2Group A(5);
  EXPECT_EQ(generated_subgroup(A, {A.make(1, 0)}, 100).size(), 5u);
  EXPECT_EQ(generated_subgroup(A, {A.make(1, 0), A.make(0, 1)}, 100).size(), 25u);
}

TEST(GeneratedSubgroup, FullSymmetricGroupAndOverflow) {
  SymGroup S(8);
  auto gens = S.generators();
  EXPECT_EQ(generated_subgroup(S, gens, 100'000).size(), 40320u);
  EXPECT_THROW(generated_subgroup(S, gens, 1000), CapacityExceeded);
}

TEST(Generates, Examples) {
  SymGroup S(8);
  EXPECT_TRUE(generates(S, S.parse("(5,4,1)(2,6)"), S.parse("(1,2,3)(4,5,6,7,8)")));
  Ab2Group A(5);
  EXPECT_FALSE(generates(A, A.make(1, 0), A.make(2, 0)));
  SL2Group G(7);
  auto k = sl2_constants(7);
  EXPECT_TRUE(generates(G, k.B, k.S));
}

TEST(Generates, FastStrategyMatchesClosure) {
  std::mt19937_64 rng(13);
  SymGroup S(6);
  AltGroup A(6);
  for (int k = 0; k < 100; ++k) {
    Perm a = random_perm(6, rng), c = random_perm(6, rng);
    bool by_closure = generated_subgroup(S, {a, c}, 1000).size() == 720;
    EXPECT_EQ(generates(S, a, c), by_closure);
    if (parity(a) == Parity::even && parity(c) == Parity::even) {
      bool alt_closure = generated_subgroup(A, {a, c}, 1000).size() == 360;
      EXPECT_EQ(generates(A, a, c), alt_closure);
    }
  }
  SL2Group G(5);
  std::vector<Mat2> elems;
  TableGroup::from_group(G, 1000, "", &elems);
  for (int k = 0; k < 100; ++k) {
    Mat2 a = elems[rng() % elems.size()], c = elems[rng() % elems.size()];
    EXPECT_EQ(generates(G, a, c), generated_subgroup(G, {a, c}, 1000).size() == 120);
  }
}

TEST(Generates, UndecidedPastCap) {
  H4Group<SL2Group> H{SL2Group(11)};
  Caps caps;
  caps.closure = 1000;
  auto x = H.make(sl2_constants(11).B, sl2_constants(11).S, 2);
  EXPECT_THROW(generates_with(H, x, x, caps), Undecided);
}

TEST(ConjugacyClass, Examples) {
  SymGroup S(8);
  EXPECT_EQ(conjugacy_class(S, S.identity(), 10).size(), 1u);
  auto cls = conjugacy_class(S, S.parse("(1,2)"), 1000);
  EXPECT_EQ(cls.size(), 28u);
  for (const auto& t : cls) EXPECT_EQ(t.cycle_type(), S.parse("(1,2)").cycle_type());
  SL2Group G(5);
  auto minus = G.identity().negated();
  auto c = conjugacy_class(G, minus, 1000);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_TRUE(c.count(minus));
  EXPECT_THROW(conjugacy_class(S, S.parse("(1,2,3,4,5,6,7,8)"), 100), CapacityExceeded);
}

TEST(BsgsOrder, Examples) {
  SymGroup S(8);
  EXPECT_EQ(bsgs_order(S.generators()), bigint(40320));
  EXPECT_EQ(bsgs_order({S.parse("(1,2,3)")}), bigint(3));
  EXPECT_EQ(bsgs_order({Perm(5)}), bigint(1));
}

TEST(BsgsOrder, AgreesWithClosureOnRandomSubgroupsOfS7) {
  std::mt19937_64 rng(17);
  SymGroup S(7);
  for (int k = 0; k < 50; ++k) {
    std::vector<Perm> gens;
    std::size_t count = 1 + rng() % 3;
    for (std::size_t i = 0; i < count; ++i) {
      Perm p = random_perm(7, rng);
      // bias toward proper subgroups by taking powers
      gens.push_back(power(S, p, static_cast<std::int64_t>(1 + rng() % 3)));
    }
    EXPECT_EQ(bsgs_order(gens), bigint(generated_subgroup(S, gens, 10'000).size()));
  }
}

TEST(BsgsOrder, CertifiesAlternatingSixteen) {
  auto w = an_alp2_1(16);
  EXPECT_EQ(bsgs_order({w.pair.a, w.pair.c}), factorial(16) / 2);
}

TEST(ConjugatorSearch, DegenerateInputIsFlagged) {
  Perm id(6);
  auto r = conjugator_search(id, id, id, id, Ambient::sym);
  EXPECT_EQ(r.status, ConjugatorResult::Status::degenerate);
  EXPECT_TRUE(r.solutions.empty());
}

TEST(ConjugatorSearch, NoInverterForSymmetricEight) {
  auto v = sn_thm_sym(8);
  auto r = conjugator_search(v.p1.a, v.p1.a.inverse(), v.p1.c, v.p1.c.inverse(), Ambient::sym);
  EXPECT_TRUE(r.solutions.empty());
  // brute force over all of S8
  std::size_t hits = 0;
  for (const auto& g : all_perms(8)) {
    Perm gi = g.inverse();
    if (g * v.p1.a * gi == v.p1.a.inverse() && g * v.p1.c * gi == v.p1.c.inverse()) ++hits;
  }
  EXPECT_EQ(hits, 0u);
}

TEST(ConjugatorSearch, OddInverterForSixteenPoints) {
  auto w = an_alp2_2_raw(5);
  const auto& a = w.pair.a;
  const auto& c = w.pair.c;
  auto r = conjugator_search(a, a.inverse(), c, c.inverse(), Ambient::sym);
  ASSERT_FALSE(r.solutions.empty());
  bool odd = false;
  for (const auto& g : r.solutions) {
    EXPECT_EQ(g * a * g.inverse(), a.inverse());
    EXPECT_EQ(g * c * g.inverse(), c.inverse());
    odd = odd || parity(g) == Parity::odd;
  }
  EXPECT_TRUE(odd);
  auto ra = conjugator_search(a, a.inverse(), c, c.inverse(), Ambient::alt);
  for (const auto& g : ra.solutions) EXPECT_EQ(parity(g), Parity::even);
}

TEST(ConjugatorSearch, MatchesBruteForceInS6) {
  auto everything = all_perms(6);
  std::mt19937_64 rng(21);
  for (int k = 0; k < 60; ++k) {
    Perm a = random_perm(6, rng), c = random_perm(6, rng);
    if (k % 3 == 0) a = power(SymGroup(6), a, 2);
    Perm h = random_perm(6, rng);
    Perm aT = h * a * h.inverse();
    Perm cT = (k % 2 == 0) ? h * c * h.inverse() : random_perm(6, rng);
    if (a.is_identity() && c.is_identity()) continue;
    for (Ambient amb : {Ambient::sym, Ambient::alt}) {
      std::vector<Perm> brute;
      for (const auto& g : everything) {
        if (amb == Ambient::alt && parity(g) == Parity::odd) continue;
        Perm gi = g.inverse();
        if (g * a * gi == aT && g * c * gi == cT) brute.push_back(g);
      }
      auto r = conjugator_search(a, aT, c, cT, amb);
      auto got = r.solutions;
      std::sort(brute.begin(), brute.end(), [](const Perm& x, const Perm& y) { return x.images() < y.images(); });
      std::sort(got.begin(), got.end(), [](const Perm& x, const Perm& y) { return x.images() < y.images(); });
      EXPECT_EQ(got, brute);
      for (std::size_t i = 1; i < got.size(); ++i) {
        Perm z = got[i] * got[0].inverse();
        EXPECT_EQ(z * aT, aT * z);
      }
    }
  }
}

TEST(ConjugatorSearch, CentralizerCapOverflows) {
  Perm a = SymGroup(12).parse("(1,2)");
  EXPECT_THROW(conjugator_search(a, a, a, a, Ambient::sym, 1000), CapacityExceeded);
}
