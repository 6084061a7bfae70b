// Group constructions: (Z/n)^2, H_[4], wallpaper quotients, Cayley tables, the catalogue
// and index-2 subgroups, each checked against a brute-force oracle.
#include "bv/search.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bv;

namespace {

bool associative(const TableGroup& T) {
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T.size(); ++j)
      for (std::size_t k = 0; k < T.size(); ++k) {
        Tid x = T.id(i), y = T.id(j), z = T.id(k);
        if (!(T.mul(T.mul(x, y), z) == T.mul(x, T.mul(y, z)))) return false;
      }
  return true;
}

// Kernels of all nonzero homomorphisms to Z/2, by checking every sign assignment on the
// whole table (elements are assigned through words in the generators).
std::set<std::vector<std::size_t>> index_two_by_brute_force(const TableGroup& T) {
  auto gens = T.generators();
  std::set<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << gens.size()); ++mask) {
    std::vector<int> f(T.size(), -1);
    f[0] = 0;
    std::vector<std::size_t> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        std::size_t y = T.mul(T.id(queue[q]), gens[g]).v;
        if (f[y] < 0) {
          f[y] = f[queue[q]] ^ static_cast<int>((mask >> g) & 1);
          queue.push_back(y);
        }
      }
    bool hom = true;
    for (std::size_t i = 0; i < T.size() && hom; ++i)
      for (std::size_t j = 0; j < T.size() && hom; ++j)
        if (f[T.mul(T.id(i), T.id(j)).v] != (f[i] ^ f[j])) hom = false;
    if (!hom) continue;
    std::vector<std::size_t> kernel;
    for (std::size_t i = 0; i < T.size(); ++i)
      if (f[i] == 0) kernel.push_back(i);
    if (kernel.size() * 2 == T.size()) out.insert(kernel);
  }
  return out;
}

std::size_t involutions(const TableGroup& T) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < T.size(); ++i) n += T.order_of(T.id(i)) == 2;
  return n;
}

}  // namespace

TEST(Ab2, OrdersAndGeneration) {
  EXPECT_EQ(Ab2Group(5).order(), bigint(25));
  EXPECT_EQ(Ab2Group(2).order(), bigint(4));
  for (std::int64_t n : {2, 5, 7, 12}) {
    Ab2Group A(n);
    EXPECT_EQ(element_order(A, A.make(1, 0)), static_cast<std::uint64_t>(n));
    EXPECT_EQ(generated_subgroup(A, A.generators(), 1000).size(), static_cast<std::size_t>(n * n));
  }
  Ab2Group A(6);
  EXPECT_EQ(element_order(A, A.make(2, 3)), 6u);
  EXPECT_EQ(element_order(A, A.make(2, 4)), 3u);
  EXPECT_TRUE(generates(A, A.make(1, 2), A.make(1, 3)));
  EXPECT_FALSE(generates(A, A.make(2, 0), A.make(0, 1)));
}

TEST(H4, OrderAndIndexTwoSubgroup) {
  H4Group<TableGroup> H{cyclic_table(2)};
  EXPECT_EQ(H.order(), bigint(16));
  auto all = generated_subgroup(H, H.generators(), 100);
  EXPECT_EQ(all.size(), 16u);
  for (const char* id : {"cyclic:3", "dihedral:3", "dicyclic:2"}) {
    H4Group<TableGroup> G{build_catalogue_group(id)};
    auto elems = generated_subgroup(G, G.generators(), 100'000);
    std::size_t h = G.inner().size();
    EXPECT_EQ(elems.size(), 4 * h * h) << id;
    std::size_t in_h2 = 0;
    for (const auto& u : elems) in_h2 += G.in_h2(u);
    EXPECT_EQ(2 * in_h2, elems.size()) << id;
    // H_[2] is closed and normal
    for (const auto& u : elems)
      for (const auto& v : G.generators())
        if (G.in_h2(u)) EXPECT_TRUE(G.in_h2(conjugate(G, u, v)));
  }
}

TEST(H4, CosetRepresentativeSwapsComponents) {
  H4Group<SL2Group> G{SL2Group(7)};
  auto k = sl2_constants(7);
  auto g = G.coset_rep();
  auto u = G.make(k.B, k.S, 0);
  EXPECT_EQ(conjugate(G, u, g), G.make(k.S, k.B, 0));
  EXPECT_EQ(G.mul(g, g), G.make(G.inner().identity(), G.inner().identity(), 2));
  EXPECT_FALSE(G.in_h2(g));
}

TEST(H4, NoInvolutionOutsideIndexTwoSubgroup) {
  // exhaustive over every element t in {1,3}, for |H| up to 60
  for (const char* id : {"cyclic:2", "cyclic:3", "cyclic:4", "dihedral:3", "dihedral:4", "dicyclic:2", "alt:4",
                         "dihedral:5", "sl2:3", "alt:5"}) {
    auto Hin = build_catalogue_group(id);
    H4Group<TableGroup> G{Hin};
    std::size_t outside = 0;
    for (std::size_t i = 0; i < Hin.size(); ++i)
      for (std::size_t j = 0; j < Hin.size(); ++j)
        for (int t : {1, 3}) {
          auto u = G.make(Hin.id(i), Hin.id(j), t);
          ++outside;
          EXPECT_FALSE(G.mul(u, u) == G.identity()) << id;
        }
    EXPECT_EQ(outside, 2 * Hin.size() * Hin.size());
  }
}

TEST(H4, ClosedFormOrderMatchesIteration) {
  H4Group<TableGroup> G{build_catalogue_group("dihedral:5")};
  const auto& H = G.inner();
  std::mt19937_64 rng(4);
  for (int k = 0; k < 300; ++k) {
    auto u = G.make(H.id(rng() % H.size()), H.id(rng() % H.size()), static_cast<int>(rng() % 4));
    std::uint64_t m = 1;
    auto y = u;
    while (!(y == G.identity())) {
      y = G.mul(y, u);
      ++m;
    }
    EXPECT_EQ(G.order_of(u), m);
  }
}

TEST(H4, ParseFormatRoundTrip) {
  H4Group<SymGroup> G{SymGroup(4)};
  auto u = G.parse("((1,2) ; (2,3,4) ; 3)");
  EXPECT_EQ(u.t, 3);
  EXPECT_EQ(G.parse(G.format(u)), u);
  EXPECT_THROW(G.parse("((1,2) ; (2,3,4))"), MalformedElement);
}

TEST(Wallpaper, Orders) {
  EXPECT_EQ(WallpaperGroup(3, 3).order(), bigint(27));
  EXPECT_EQ(WallpaperGroup(6, 2).order(), bigint(24));
  EXPECT_EQ(WallpaperGroup(4, 4).order(), bigint(64));
  EXPECT_EQ(generated_subgroup(WallpaperGroup(3, 3), WallpaperGroup(3, 3).generators(), 1000).size(), 27u);
  EXPECT_EQ(generated_subgroup(WallpaperGroup(6, 2), WallpaperGroup(6, 2).generators(), 1000).size(), 24u);
  EXPECT_THROW(WallpaperGroup(5, 3), UsageError);
  EXPECT_THROW(WallpaperGroup(4, 3, true), UsageError);
}

TEST(Wallpaper, RotationRelations) {
  struct Case {
    int d;
    WpElem x_image, y_image;  // r x r^-1 and r y r^-1 as translations
  };
  const std::int64_t m = 5;
  auto t = [m](std::int64_t a, std::int64_t b) { return WpElem{mod(a, m), mod(b, m), 0}; };
  for (const auto& c : {Case{3, t(0, 1), t(-1, -1)}, Case{4, t(0, 1), t(-1, 0)}, Case{6, t(1, -1), t(1, 0)}}) {
    WallpaperGroup W(c.d, m);
    WpElem r{0, 0, 1}, x{1, 0, 0}, y{0, 1, 0};
    EXPECT_EQ(power(W, r, c.d), W.identity()) << c.d;
    EXPECT_EQ(element_order(W, r), static_cast<std::uint64_t>(c.d));
    EXPECT_EQ(conjugate(W, x, r), c.x_image) << c.d;
    EXPECT_EQ(conjugate(W, y, r), c.y_image) << c.d;
    // translations commute
    EXPECT_EQ(W.mul(x, y), W.mul(y, x));
  }
}

TEST(TableGroup, FromGroupMatchesBackend) {
  SymGroup S(4);
  std::vector<Perm> elems;
  auto T = TableGroup::from_group(S, 100, "", &elems);
  ASSERT_EQ(T.size(), 24u);
  EXPECT_TRUE(associative(T));
  for (std::size_t i = 0; i < T.size(); ++i) {
    EXPECT_EQ(T.order_of(T.id(i)), elems[i].order());
    for (std::size_t j = 0; j < T.size(); ++j) EXPECT_EQ(elems[T.mul(T.id(i), T.id(j)).v], elems[i] * elems[j]);
  }
  EXPECT_THROW(TableGroup::from_group(SymGroup(6), 100), CapacityExceeded);
}

TEST(TableGroup, ConjugacyClassesMatchBruteForce) {
  for (const char* id : {"sym:4", "dicyclic:3", "alt:5", "affine:5:3", "dihedral:6xC2"}) {
    auto T = build_catalogue_group(id);
    std::size_t total = 0;
    for (std::size_t k = 0; k < T.class_count(); ++k) total += T.class_size(k);
    EXPECT_EQ(total, T.size()) << id;
    for (std::size_t x = 0; x < T.size(); ++x) {
      std::set<std::size_t> brute;
      for (std::size_t h = 0; h < T.size(); ++h) brute.insert(T.conj(T.id(x), T.id(h)).v);
      auto listed = bits_list(T.class_bits(T.class_of(T.id(x))));
      EXPECT_EQ(std::set<std::size_t>(listed.begin(), listed.end()), brute) << id << " element " << x;
    }
  }
}

TEST(TableGroup, CyclicClosureIsClassesOfPowers) {
  auto T = build_catalogue_group("sl2:5");
  for (std::size_t x = 0; x < T.size(); x += 7) {
    std::set<std::size_t> brute;
    Tid y = T.identity();
    do {
      for (std::size_t h = 0; h < T.size(); ++h) brute.insert(T.conj(y, T.id(h)).v);
      y = T.mul(y, T.id(x));
    } while (!(y == T.identity()));
    auto listed = bits_list(T.cyclic_closure(T.id(x)));
    EXPECT_EQ(std::set<std::size_t>(listed.begin(), listed.end()), brute);
  }
}

TEST(TableGroup, SubgroupTable) {
  auto T = build_catalogue_group("sym:4");
  auto subs = index_two_subgroups(T);
  ASSERT_EQ(subs.size(), 1u);
  std::vector<Tid> gens;
  Bits span(T.words(), 0);
  bits_set(span, 0);
  for (auto x : bits_list(subs[0]))
    if (!bits_test(span, x)) {
      gens.push_back(T.id(x));
      span = T.closure_bits(gens);
    }
  std::vector<std::uint32_t> to_parent;
  auto A = T.subgroup(subs[0], gens, "A4", &to_parent);
  EXPECT_EQ(A.size(), 12u);
  EXPECT_TRUE(associative(A));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j)
      EXPECT_EQ(to_parent[A.mul(A.id(i), A.id(j)).v], T.mul(T.id(to_parent[i]), T.id(to_parent[j])).v);
  EXPECT_EQ(bits_count(A.closure_bits(A.generators())), 12u);
}

TEST(Catalogue, SmallOrderExamples) {
  auto ids = [](std::size_t max) {
    std::set<std::string> s;
    for (const auto& e : catalogue(max)) s.insert(e.id);
    return s;
  };
  EXPECT_TRUE(ids(8).count("dihedral:4"));
  EXPECT_TRUE(ids(8).count("dicyclic:2"));
  EXPECT_TRUE(ids(12).count("alt:4"));
  EXPECT_TRUE(ids(60).count("alt:5"));
  EXPECT_TRUE(ids(120).count("sl2:5"));
  EXPECT_TRUE(ids(24).count("sym:4"));
  EXPECT_TRUE(ids(24).count("sl2:3"));
  auto D4 = build_catalogue_group("dihedral:4");
  auto Q8 = build_catalogue_group("dicyclic:2");
  EXPECT_EQ(involutions(D4), 5u);
  EXPECT_EQ(involutions(Q8), 1u);
}

TEST(Catalogue, EntriesAreNonabelianGroupsOfTheListedOrder) {
  auto entries = catalogue(128);
  std::set<std::string> seen;
  std::size_t prev = 0;
  for (const auto& e : entries) {
    EXPECT_TRUE(seen.insert(e.id).second) << e.id;
    EXPECT_GE(e.order, prev);
    prev = e.order;
    auto T = build_catalogue_group(e.id);
    EXPECT_EQ(T.size(), e.order) << e.id;
    EXPECT_FALSE(T.is_abelian()) << e.id;
    EXPECT_EQ(bits_count(T.closure_bits(T.generators())), T.size()) << e.id;
    if (T.size() <= 48) EXPECT_TRUE(associative(T)) << e.id;
  }
  EXPECT_EQ(catalogue(128).size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) EXPECT_EQ(catalogue(128)[i].id, entries[i].id);
}

TEST(Catalogue, UnknownIdsAreUsageErrors) {
  EXPECT_THROW(build_catalogue_group("frobnitz:3"), UsageError);
  EXPECT_THROW(build_catalogue_group("nothing"), UsageError);
  EXPECT_THROW(build_catalogue_group("sym:7", 100), CapacityExceeded);
}

TEST(IndexTwoSubgroups, MatchBruteForce) {
  for (const char* id : {"dihedral:4", "dicyclic:2", "dihedral:6", "dihedral:5", "alt:4", "sym:4", "dicyclic:3xC2",
                         "dihedral:4xC2", "h4:cyclic:2", "h4:cyclic:3", "affine:3:2"}) {
    auto T = build_catalogue_group(id);
    std::set<std::vector<std::size_t>> got;
    for (const auto& b : index_two_subgroups(T)) got.insert(bits_list(b));
    EXPECT_EQ(got, index_two_by_brute_force(T)) << id;
  }
}
