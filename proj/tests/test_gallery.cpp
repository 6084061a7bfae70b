// Explicit constructions: printed data, types, generation, conjugator identities and parameter checks.
#include "bv/gallery.hpp"
#include "bv/search.hpp"

#include <gtest/gtest.h>

using namespace bv;

namespace {

bool generates_alternating(const GeneratingPair<Perm>& pr) {
  return bsgs_order({pr.a, pr.c}) == AltGroup(static_cast<int>(pr.a.degree())).order();
}

bool inverts(const Perm& g, const Perm& x) { return g * x * g.inverse() == x.inverse(); }

}  // namespace

TEST(SymmetricConstruction, PrintedDataAndTypes) {
  auto v = sn_thm_sym(8);
  EXPECT_EQ(v.p1.a.to_string(), "(1,5,4)(2,6)");
  EXPECT_EQ(v.p1.c.to_string(), "(1,2,3)(4,5,6,7,8)");
  EXPECT_EQ(v.p2.a, cycles_to_perm({{1, 2, 3, 4, 5, 6, 7, 8}}, 8).inverse());
  EXPECT_EQ(bv::detail::perm_type(v.p1.a, v.p1.c), (TypeTriple{6, 15, 12}));
  EXPECT_EQ(bv::detail::perm_type(v.p2.a, v.p2.c).r, 8u);
  EXPECT_EQ(bv::detail::perm_type(v.p2.a, v.p2.c).t, 7u);
  for (int n : {8, 11, 14}) {
    auto w = sn_thm_sym(n);
    SymGroup S(n);
    EXPECT_EQ(bsgs_order({w.p1.a, w.p1.c}), S.order()) << n;
    EXPECT_EQ(bsgs_order({w.p2.a, w.p2.c}), S.order()) << n;
    EXPECT_EQ(check_unmixed(S, w, CheckOptions{SigmaStrategy::cycle_type}).verdict, Verdict::pass) << n;
  }
  EXPECT_THROW(sn_thm_sym(9), UsageError);
  EXPECT_THROW(sn_thm_sym(5), UsageError);
}

TEST(AlternatingFirstFamily, TypesAndParameterChecks) {
  auto pr = an_alp1(16, 3, 11);
  EXPECT_EQ(bv::detail::perm_type(pr.a, pr.c), (TypeTriple{11, 15, 15}));
  EXPECT_TRUE(generates_alternating(pr));
  auto pr2 = an_alp1(18, 5, 7);
  EXPECT_EQ(bv::detail::perm_type(pr2.a, pr2.c), (TypeTriple{7, 55, 15}));
  EXPECT_TRUE(generates_alternating(pr2));
  // the divisibility exclusion matters: at (16,5,11) the data has type (11,5,13), not (11,25,13)
  auto raw = an_alp1_raw(16, 5, 11);
  EXPECT_EQ(bv::detail::perm_type(raw.a, raw.c), (TypeTriple{11, 5, 13}));
  EXPECT_THROW(an_alp1(16, 5, 11), UsageError);
  EXPECT_THROW(an_alp1(17, 3, 11), UsageError);
  EXPECT_THROW(an_alp1(16, 4, 11), UsageError);
  EXPECT_THROW(an_alp1(16, 3, 15), UsageError);
  EXPECT_THROW(an_alp1_raw(16, 20, 11), UsageError);
}

TEST(AlternatingSecondFamily, OrderTwoThreeData) {
  for (int n : {16, 28}) {
    auto w = an_alp2_1(n);
    EXPECT_EQ(w.type, (TypeTriple{2, 3, 84})) << n;
    EXPECT_TRUE(generates_alternating(w.pair)) << n;
    EXPECT_TRUE(inverts(w.gamma, w.pair.a) && inverts(w.gamma, w.pair.c)) << n;
    EXPECT_EQ(parity(w.gamma), Parity::odd);
    EXPECT_EQ(parity(w.pair.a), Parity::even);
    EXPECT_EQ(parity(w.pair.c), Parity::even);
  }
  EXPECT_THROW(an_alp2_1(20), UsageError);
  EXPECT_THROW(an_alp2_1(4), UsageError);
}

TEST(AlternatingSecondFamily, PrimeSeries) {
  auto w = an_alp2_2(7);
  EXPECT_EQ(w.pair.a.degree(), 22u);
  EXPECT_EQ(w.type, (TypeTriple{7, 35, 17}));
  EXPECT_TRUE(generates_alternating(w.pair));
  EXPECT_TRUE(inverts(w.gamma, w.pair.a) && inverts(w.gamma, w.pair.c));
  // gamma is a product of 1 + (p-1)/2 + (p-1) transpositions: odd exactly when p = 1 mod 4
  EXPECT_EQ(parity(w.gamma), Parity::even);
  auto w13 = an_alp2_2(13);
  EXPECT_EQ(w13.type, (TypeTriple{13, 65, 29}));
  EXPECT_EQ(parity(w13.gamma), Parity::odd);
  EXPECT_TRUE(inverts(w13.gamma, w13.pair.a) && inverts(w13.gamma, w13.pair.c));
  // at p = 5 the data degenerates: type (5,5,13)
  auto raw = an_alp2_2_raw(5);
  EXPECT_EQ(raw.type, (TypeTriple{5, 5, 13}));
  EXPECT_TRUE(inverts(raw.gamma, raw.pair.a) && inverts(raw.gamma, raw.pair.c));
  EXPECT_THROW(an_alp2_2(5), UsageError);
  EXPECT_THROW(an_alp2_2_raw(9), UsageError);
}

TEST(AlternatingThirdFamily, GammaIdentities) {
  for (int k : {8, 9, 20}) {
    auto w = an_alp3(k);
    std::uint64_t K = static_cast<std::uint64_t>(k);
    EXPECT_EQ(w.type, (TypeTriple{2 * K - 3, 2 * K - 2, 2 * K - 2}));
    EXPECT_TRUE(inverts(w.gamma, w.pair.a));
    EXPECT_EQ(w.gamma * w.pair.c * w.gamma.inverse(), w.pair.a * w.pair.c);
    EXPECT_EQ(parity(w.gamma) == Parity::odd, k % 2 == 0);
    EXPECT_TRUE(generates_alternating(w.pair)) << k;
  }
  EXPECT_THROW(an_alp3(7), UsageError);
}

TEST(AlternatingStructure, DegreeForty) {
  auto v = an_intro3(13);
  AltGroup A(40);
  EXPECT_EQ(type_of(A, v.p1.a, v.p1.c), (TypeTriple{37, 38, 38}));
  EXPECT_EQ(type_of(A, v.p2.a, v.p2.c), (TypeTriple{13, 65, 29}));
  EXPECT_TRUE(generates_alternating(v.p1));
  EXPECT_TRUE(generates_alternating(v.p2));
  EXPECT_EQ(check_unmixed(A, v).verdict, Verdict::pass);
  EXPECT_THROW(an_intro3(11), UsageError);
  EXPECT_THROW(an_intro3(5), UsageError);
  EXPECT_THROW(an_intro3(17), UsageError);  // 17 = 2 mod 5
}

TEST(Sl2Constructions, NamedPairs) {
  SL2Group G(13);
  auto p = sl2_type46p(13);
  EXPECT_EQ(type_of(G, p.a, p.c), (TypeTriple{4, 6, 13}));
  EXPECT_TRUE(generates(G, p.a, p.c));
  auto s = sl2_qqq_split(11, 5);
  EXPECT_EQ(type_of(SL2Group(11), s.a, s.c), (TypeTriple{5, 5, 5}));
  EXPECT_TRUE(generates(SL2Group(11), s.a, s.c));
  auto ns = sl2_qqq_nonsplit(13, 7);
  EXPECT_EQ(type_of(G, ns.a, ns.c), (TypeTriple{7, 7, 7}));
  EXPECT_TRUE(generates(G, ns.a, ns.c));
  EXPECT_EQ(check_unmixed(G, UnmixedStructure<Mat2>{p, ns}).verdict, Verdict::pass);
  EXPECT_THROW(sl2_qqq_split(11, 7), UsageError);
  EXPECT_THROW(sl2_qqq_split(11, 3), UsageError);
  EXPECT_THROW(sl2_qqq_nonsplit(11, 5), UsageError);
  EXPECT_THROW(sl2_type46p(15), UsageError);
}

TEST(Sl2Constructions, CompanionTrace) {
  for (auto [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{{13, 7}, {29, 5}, {19, 5}}) {
    auto k = companion_trace_of_order(p, q);
    EXPECT_EQ(SL2Group(p).order_of(companion_mat(p, k)), static_cast<std::uint64_t>(q));
    for (std::int64_t j = 0; j < k; ++j) EXPECT_NE(SL2Group(p).order_of(companion_mat(p, j)), static_cast<std::uint64_t>(q));
  }
  EXPECT_THROW(companion_trace_of_order(13, 11), NotFound);
}

TEST(Sl2Constructions, CosetChoiceForFiveFiveFive) {
  const std::int64_t p = 11;
  for (Sl2Coset want : {Sl2Coset::SL, Sl2Coset::SLW}) {
    auto pr = sl2_555_coset(p, want);
    EXPECT_EQ(type_of(SL2Group(p), pr.a, pr.c), (TypeTriple{5, 5, 5}));
    EXPECT_TRUE(solve_conjugation_sl2(p, pr.a, pr.a.inverse(), pr.c, pr.c.inverse(), want).has_value());
    Sl2Coset other = want == Sl2Coset::SL ? Sl2Coset::SLW : Sl2Coset::SL;
    EXPECT_FALSE(solve_conjugation_sl2(p, pr.a, pr.a.inverse(), pr.c, pr.c.inverse(), other).has_value());
  }
  EXPECT_THROW(sl2_555_coset(13, Sl2Coset::SL), UsageError);
}

TEST(Sl2Constructions, ProductOfTwoPrimeOrders) {
  auto s = sl2_q1q2(31, 3, 5, TorusCase::split);
  EXPECT_EQ(type_of(SL2Group(31), s.a, s.c), (TypeTriple{3, 5, 15}));
  EXPECT_TRUE(generates(SL2Group(31), s.a, s.c));
  auto n = sl2_q1q2(29, 3, 5, TorusCase::nonsplit);
  EXPECT_EQ(type_of(SL2Group(29), n.a, n.c), (TypeTriple{3, 5, 15}));
  EXPECT_TRUE(generates(SL2Group(29), n.a, n.c));
  EXPECT_THROW(sl2_q1q2(31, 3, 3, TorusCase::split), UsageError);
  EXPECT_THROW(sl2_q1q2(29, 3, 5, TorusCase::split), UsageError);
}

TEST(MixedConstruction, Orders) {
  auto m = mixed_intro2(11);
  H4Group<SL2Group> G{SL2Group(11)};
  EXPECT_EQ(type_of(G, m.a, m.c), (TypeTriple{20, 30, 55}));
  EXPECT_EQ(m.a.t, 2);
  EXPECT_EQ(m.c.t, 2);
  EXPECT_FALSE(G.in_h2(m.g));
  auto k = sl2_constants(11);
  EXPECT_EQ(m.a.x, k.B);
  EXPECT_EQ(m.c.x, k.S);
  auto m31 = mixed_intro2(31);
  EXPECT_EQ(type_of(H4Group<SL2Group>{SL2Group(31)}, m31.a, m31.c), (TypeTriple{20, 30, 155}));
  EXPECT_THROW(mixed_intro2(13), UsageError);
  EXPECT_THROW(mixed_intro2(19), UsageError);
}

TEST(SearchCertificates, ReproduceFromSeed) {
  for (const auto& c : intro1_certificates()) {
    std::string g = c.group;
    auto run = [&](const auto& grp) {
      auto tab = tabulate(grp, 10'000);
      auto r = random_unmixed_table(tab.table, c.seed, 1'000'000);
      ASSERT_TRUE(r.found.has_value()) << g << " " << c.p;
      EXPECT_EQ(r.samples, c.samples) << g << " " << c.p;
      EXPECT_EQ(tab.lift(*r.found), intro1_from_certificate(grp, c)) << g << " " << c.p;
      EXPECT_EQ(check_unmixed(grp, tab.lift(*r.found), CheckOptions{SigmaStrategy::exact}).verdict, Verdict::pass);
    };
    if (g == "sl2") run(SL2Group(c.p));
    else run(PSL2Group(c.p));
  }
  EXPECT_EQ(sl2_intro1(7), intro1_from_certificate(SL2Group(7), intro1_certificate("sl2", 7)));
  EXPECT_NO_THROW(psl2_intro1(17));
  EXPECT_THROW(intro1_certificate("sl2", 11), NotFound);
  EXPECT_THROW(intro1_certificate("alt", 7), NotFound);
}
