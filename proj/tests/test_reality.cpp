// Sigma operations, the inverse map, automorphism backends and the reality decision procedures.
#include "bv/gallery.hpp"
#include "bv/reality.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bv;

namespace {

std::vector<Perm> elements_of(const SymGroup& S) {
  auto all = generated_subgroup(S, S.generators(), 10'000);
  std::vector<Perm> v(all.begin(), all.end());
  std::sort(v.begin(), v.end());
  return v;
}

bool is_inner(const TableGroup& T, const std::vector<std::uint32_t>& phi) {
  for (std::size_t h = 0; h < T.size(); ++h) {
    bool ok = true;
    for (auto g : T.generators())
      if (T.conj(g, T.id(h)).v != phi[g.v]) ok = false;
    if (ok) return true;
  }
  return false;
}

std::vector<std::uint32_t> compose(const std::vector<std::uint32_t>& f, const std::vector<std::uint32_t>& g) {
  std::vector<std::uint32_t> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

std::vector<std::uint32_t> invert(const std::vector<std::uint32_t>& f) {
  std::vector<std::uint32_t> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[f[i]] = static_cast<std::uint32_t>(i);
  return out;
}

}  // namespace

TEST(SigmaOperations, Relations) {
  SymGroup S(7);
  auto el = elements_of(S);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    GeneratingPair<Perm> pr{el[rng() % el.size()], el[rng() % el.size()]};
    EXPECT_EQ(apply_sigma(S, 3, pr), (GeneratingPair<Perm>{pr.c, pr.a}));
    EXPECT_EQ(apply_sigma(S, 1, pr), (GeneratingPair<Perm>{pr.a.inverse() * pr.c.inverse(), pr.a}));
    EXPECT_EQ(apply_sigma(S, 0, pr), pr);
    auto s1 = apply_sigma(S, 1, apply_sigma(S, 1, apply_sigma(S, 1, pr)));
    EXPECT_EQ(s1, pr);
    EXPECT_EQ(apply_sigma(S, 3, apply_sigma(S, 3, pr)), pr);
    for (int i = 0; i < 6; ++i) {
      EXPECT_EQ(apply_sigma_inverse(S, i, apply_sigma(S, i, pr)), pr) << i;
      EXPECT_EQ(apply_sigma(S, i, apply_sigma_inverse(S, i, pr)), pr) << i;
      // sigma_i permutes the orders of a, c and ac
      EXPECT_EQ(bv::detail::perm_type(apply_sigma(S, i, pr).a, apply_sigma(S, i, pr).c).sorted(),
                bv::detail::perm_type(pr.a, pr.c).sorted());
    }
  }
  GeneratingPair<Perm> pr{Perm(3), Perm(3)};
  EXPECT_THROW(apply_sigma(S, 6, pr), UsageError);
  EXPECT_THROW(apply_sigma_inverse(S, -1, pr), UsageError);
}

TEST(Iota, InvolutionPreservingTypeSigmaAndVerdict) {
  SymGroup S8(8);
  auto v = sn_thm_sym(8);
  auto w = iota(S8, v);
  EXPECT_EQ(iota(S8, w), v);
  EXPECT_EQ(type_of(S8, w.p1.a, w.p1.c), type_of(S8, v.p1.a, v.p1.c));
  EXPECT_EQ(sigma_exact(S8, w.p1.a, w.p1.c), sigma_exact(S8, v.p1.a, v.p1.c));
  EXPECT_EQ(check_unmixed(S8, w).verdict, Verdict::pass);
  H4Group<SL2Group> G{SL2Group(11)};
  auto m = mixed_intro2(11);
  auto mi = iota(G, m);
  EXPECT_EQ(mi.g, m.g);
  EXPECT_EQ(G.mul(mi.a, m.a), G.identity());
  EXPECT_EQ(type_of(G, mi.a, mi.c), type_of(G, m.a, m.c));
}

TEST(ItOrbit, AbelianBasisHasSixElements) {
  Ab2Group A(5);
  GeneratingPair<Vec2> pr{A.make(1, 0), A.make(0, 1)};
  auto orbit = it_orbit(A, pr, 1000);
  EXPECT_EQ(orbit.size(), 6u);
  for (const auto& q : orbit)
    for (int i = 0; i < 6; ++i) EXPECT_TRUE(orbit.count(apply_sigma(A, i, q)));
  for (int i = 0; i < 6; ++i) EXPECT_TRUE(orbit.count(apply_sigma(A, i, pr)));
  EXPECT_THROW(it_orbit(SymGroup(6), {cycles_to_perm({{1, 2}}, 6), cycles_to_perm({{1, 2, 3, 4, 5, 6}}, 6)}, 100),
               CapacityExceeded);
}

TEST(LemmaPattern, EqualsInverseSigmaOfInversePair) {
  SymGroup S(7);
  auto el = elements_of(S);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k) {
    GeneratingPair<Perm> pr{el[rng() % el.size()], el[rng() % el.size()]};
    for (int i = 0; i < 6; ++i) {
      auto pattern = lemma_rea_pattern(S, i, pr);
      EXPECT_EQ(pattern, apply_sigma_inverse(S, i, iota(S, pr))) << i;
      // a map sending pr to the pattern, followed by sigma_i, lands on the inverse pair
      EXPECT_EQ(apply_sigma(S, i, pattern), iota(S, pr)) << i;
    }
  }
  EXPECT_THROW(lemma_rea_pattern(S, 7, GeneratingPair<Perm>{el[0], el[1]}), UsageError);
}

TEST(LemmaCases, SymmetricEightCaseZeroUnsolvable) {
  SymGroup S8(8);
  auto v = sn_thm_sym(8);
  auto cases = lemma_rea_cases(S8, v.p1, SymAut(S8));
  EXPECT_FALSE(cases[0].solvable);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(cases[i].i, i);
}

TEST(LemmaCases, AlternatingSixteenCasesZeroAndThree) {
  AltGroup A16(16);
  auto w = an_alp3(8);
  auto cases = lemma_rea_cases(A16, w.pair, AltAut(A16));
  EXPECT_FALSE(cases[0].solvable);
  EXPECT_FALSE(cases[3].solvable);
  // gamma realizes case 5 with an odd conjugator
  ASSERT_TRUE(cases[5].solvable);
  EXPECT_EQ(cases[5].labels, (std::vector<std::string>{"odd"}));
}

TEST(LemmaCases, AbelianCaseZeroSolvedByMinusIdentity) {
  Ab2Group A(5);
  Ab2Aut aut(A);
  GeneratingPair<Vec2> pr{A.make(1, 0), A.make(0, 1)};
  auto cases = lemma_rea_cases(A, pr, aut);
  for (const auto& c : cases) EXPECT_TRUE(c.solvable);
  EXPECT_EQ(cases[0].labels, (std::vector<std::string>{"[[4,0],[0,4]]"}));
}

TEST(AutBackends, Restrictions) {
  SymGroup S6(6);
  AltGroup A6(6);
  EXPECT_THROW(SymAut{S6}, UsageError);
  EXPECT_THROW(AltAut{A6}, UsageError);
  Ab2Group A(5);
  Ab2Aut aut(A);
  EXPECT_THROW(aut.solve({A.make(1, 0), A.make(2, 0)}, {A.make(1, 0), A.make(0, 1)}), UsageError);
  EXPECT_TRUE(aut.solve({A.make(1, 0), A.make(0, 1)}, {A.make(1, 0), A.make(2, 0)}).empty());
}

TEST(AutBackends, Sl2MatchesTableAutomorphisms) {
  // Aut(SL(2,5)) = PGL(2,5), order 120; inner classes have det-square conjugators
  SL2Group G(5);
  std::vector<Mat2> elems;
  auto T = TableGroup::from_group(G, 1000, "", &elems);
  auto auts = table_automorphisms(T);
  ASSERT_EQ(auts.size(), 120u);
  SL2Aut sl2(G);
  TableAut tab(T);
  Tid a = T.generators()[0], c = T.generators()[1];
  std::map<std::string, std::vector<std::vector<std::uint32_t>>> by_label;
  for (const auto& phi : auts) {
    GeneratingPair<Mat2> src{elems[a.v], elems[c.v]}, dst{elems[phi[a.v]], elems[phi[c.v]]};
    auto sols = sl2.solve(src, dst);
    ASSERT_EQ(sols.size(), 1u);
    for (std::size_t x = 0; x < T.size(); ++x) ASSERT_EQ(sols[0].apply(elems[x]), elems[phi[x]]);
    EXPECT_EQ(sols[0].label == "det-square", is_inner(T, phi));
    auto tsols = tab.solve({a, c}, {Tid{phi[a.v]}, Tid{phi[c.v]}});
    ASSERT_EQ(tsols.size(), 1u);
    by_label[tsols[0].label].push_back(phi);
  }
  // table labels are exactly the outer classes
  EXPECT_EQ(by_label.size(), 2u);
  for (const auto& [label, group] : by_label)
    for (const auto& phi : group) EXPECT_TRUE(is_inner(T, compose(invert(group.front()), phi))) << label;
}

TEST(AutBackends, AltAndSymMatchTableAutomorphisms) {
  AltGroup A5(5);
  std::vector<Perm> elems;
  auto T = TableGroup::from_group(A5, 100, "", &elems);
  auto auts = table_automorphisms(T);
  ASSERT_EQ(auts.size(), 120u);
  AltAut aut(A5);
  Tid a = T.generators()[0], c = T.generators()[1];
  for (const auto& phi : auts) {
    auto sols = aut.solve({elems[a.v], elems[c.v]}, {elems[phi[a.v]], elems[phi[c.v]]});
    ASSERT_EQ(sols.size(), 1u);
    EXPECT_EQ(sols[0].label == "even", is_inner(T, phi));
    for (std::size_t x = 0; x < T.size(); ++x) ASSERT_EQ(sols[0].apply(elems[x]), elems[phi[x]]);
  }
  SymGroup S4(4);
  auto ST = TableGroup::from_group(S4, 100);
  auto sauts = table_automorphisms(ST);
  EXPECT_EQ(sauts.size(), 24u);
  for (const auto& phi : sauts) EXPECT_TRUE(is_inner(ST, phi));
}

TEST(RealityUnmixed, AbelianExampleIsStronglyReal) {
  Ab2Group A(5);
  UnmixedStructure<Vec2> v{{A.make(1, 0), A.make(0, 1)}, {A.make(1, 2), A.make(3, 4)}};
  auto r = reality_unmixed(A, v, Ab2Aut(A));
  EXPECT_EQ(r.path, "case-table");
  EXPECT_EQ(r.biholo_conjugate, true);
  EXPECT_EQ(r.real, true);
  EXPECT_EQ(r.strongly_real, true);
  EXPECT_TRUE(r.implications_hold());
}

TEST(RealityUnmixed, SymmetricEightNotBiholomorphicToConjugate) {
  SymGroup S8(8);
  auto r = reality_unmixed(S8, sn_thm_sym(8), SymAut(S8));
  EXPECT_EQ(r.biholo_conjugate, false);
  EXPECT_EQ(r.real, false);
  EXPECT_EQ(r.strongly_real, false);
  EXPECT_TRUE(r.notes.empty());
}

TEST(RealityUnmixed, MatchesTableOracleOnRandomStructures) {
  // oracle: automorphisms psi_1, psi_2 in one outer class and sigma_i, sigma_j, possibly exchanging
  // the pairs, taking the structure to its inverse slot by slot
  auto T = build_catalogue_group("psl2:7");
  auto auts = table_automorphisms(T);
  ASSERT_EQ(auts.size(), 336u);
  TableAut aut(T);
  std::vector<int> outer(auts.size());
  for (std::size_t f = 0; f < auts.size(); ++f) outer[f] = is_inner(T, compose(invert(auts[0]), auts[f])) ? 0 : 1;
  std::mt19937_64 rng(6);
  int found = 0;
  for (int attempt = 0; attempt < 20000 && found < 25; ++attempt) {
    UnmixedStructure<Tid> v{{T.id(rng() % T.size()), T.id(rng() % T.size())},
                            {T.id(rng() % T.size()), T.id(rng() % T.size())}};
    if (check_unmixed(T, v).verdict != Verdict::pass) continue;
    ++found;
    auto inv = iota(T, v);
    // cases solved per slot and automorphism: bit i for slot 1, bit 6 + j for slot 2
    std::vector<std::array<std::uint32_t, 2>> hits(auts.size(), {0u, 0u});
    for (std::size_t f = 0; f < auts.size(); ++f) {
      const auto& phi = auts[f];
      auto ap = [&](const GeneratingPair<Tid>& q) { return GeneratingPair<Tid>{Tid{phi[q.a.v]}, Tid{phi[q.c.v]}}; };
      for (int e = 0; e < 2; ++e)
        for (int i = 0; i < 6; ++i) {
          if (apply_sigma(T, i, ap(e == 0 ? v.p1 : v.p2)) == inv.p1) hits[f][e] |= 1u << i;
          if (apply_sigma(T, i, ap(e == 0 ? v.p2 : v.p1)) == inv.p2) hits[f][e] |= 1u << (6 + i);
        }
    }
    bool biholo = false, strong = false;
    for (std::size_t f1 = 0; f1 < auts.size(); ++f1)
      for (std::size_t f2 = 0; f2 < auts.size(); ++f2)
        for (int e = 0; e < 2; ++e) {
          std::uint32_t s1 = hits[f1][e] & 63u, s2 = hits[f2][e] >> 6;
          if (!s1 || !s2 || outer[f1] != outer[f2]) continue;
          biholo = true;
          if (e == 0 && (s1 & 1u) && (s2 & 1u)) strong = true;
        }
    auto r = reality_unmixed(T, v, aut);
    EXPECT_EQ(r.biholo_conjugate, biholo);
    EXPECT_EQ(r.strongly_real, strong);
    EXPECT_TRUE(r.implications_hold());
  }
  EXPECT_EQ(found, 25);
}

TEST(RealityMixed, IntroductionExampleNotBiholomorphic) {
  H4Group<SL2Group> G{SL2Group(11)};
  auto r = reality_mixed(G, mixed_intro2(11), SL2Aut(G.inner()));
  EXPECT_EQ(r.path, "h4-reduction");
  EXPECT_EQ(r.biholo_conjugate, false);
  EXPECT_EQ(r.real, false);
  EXPECT_EQ(r.strongly_real, false);
  EXPECT_TRUE(r.implications_hold());
}

TEST(RealityMixed, RejectsQuadruplesOutsideTheLayout) {
  H4Group<SL2Group> G{SL2Group(11)};
  auto m = mixed_intro2(11);
  std::swap(m.a, m.g);
  EXPECT_THROW(reality_mixed(G, m, SL2Aut(G.inner())), UsageError);
}

TEST(RealityMixed, AgreesWithTableOracleOnSmallGroups) {
  // H x H x C2 must be 2-generated, so H has cyclic abelianization of odd order
  int positive = 0;
  int negative = 0;
  for (const char* id : {"alt:4", "metacyclic:7:3", "sl2:3"}) {
    auto H = build_catalogue_group(id);
    H4Group<TableGroup> G{H};
    std::vector<H4Elem<Tid>> elems;
    auto T = TableGroup::from_group(G, 100'000, "", &elems);
    std::map<H4Elem<Tid>, std::uint32_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<std::uint32_t>(i);
    Bits h2(T.words(), 0), hxh(T.words(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i].t % 2 == 0) bits_set(h2, i);
      if (elems[i].t == 0) bits_set(hxh, i);
    }
    std::vector<std::pair<Tid, Tid>> gens;
    for (std::size_t i = 0; i < H.size(); ++i)
      for (std::size_t j = 0; j < H.size(); ++j)
        if (H.generates_fast(H.id(i), H.id(j))) gens.push_back({H.id(i), H.id(j)});
    TableAut aut(H);
    std::mt19937_64 rng(8);
    int checked = 0;
    for (int k = 0; k < 5000 && checked < 60; ++k) {
      auto [a1, c1] = gens[rng() % gens.size()];
      auto [a2, c2] = gens[rng() % gens.size()];
      int ta = 2 * static_cast<int>(rng() % 2), tc = 2 * static_cast<int>(rng() % 2);
      MixedQuadruple<H4Elem<Tid>> m{G.make(a1, a2, ta), G.make(c1, c2, tc), G.coset_rep()};
      // <a, c> must be the whole index-2 subgroup
      if (2 * bits_count(T.closure_bits({Tid{index.at(m.a)}, Tid{index.at(m.c)}})) != T.size()) continue;
      ++checked;
      auto r = reality_mixed(G, m, aut);
      bool oracle = table_mixed_biholo(T, h2, Tid{index.at(m.a)}, Tid{index.at(m.c)}, Tid{index.at(m.g)}, &hxh);
      EXPECT_EQ(r.biholo_conjugate, oracle) << id << " sample " << k;
      EXPECT_TRUE(r.implications_hold());
      positive += oracle;
      negative += !oracle;
    }
    EXPECT_EQ(checked, 60) << id;
  }
  EXPECT_GT(positive, 0);
  EXPECT_GT(negative, 0);
}
