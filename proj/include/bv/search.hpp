#pragma once

#include "bv/reality.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <thread>

namespace bv {

// ---------------------------------------------------------------- tabulation

// A group materialized as a Cayley table, with the id -> element map.
template <FiniteGroup G>
struct Tabulated {
  using E = typename G::element_type;
  TableGroup table;
  std::vector<E> elems;
  E at(Tid x) const { return elems[x.v]; }
  UnmixedStructure<E> lift(const UnmixedStructure<Tid>& v) const {
    return {{at(v.p1.a), at(v.p1.c)}, {at(v.p2.a), at(v.p2.c)}};
  }
};

template <FiniteGroup G>
Tabulated<G> tabulate(const G& grp, std::size_t cap = 20'000) {
  Tabulated<G> t;
  if constexpr (std::is_same_v<G, TableGroup>) {
    t.table = grp;
    for (std::size_t i = 0; i < grp.size(); ++i) t.elems.push_back(grp.id(i));
  } else {
    t.table = TableGroup::from_group(grp, cap, grp.name(), &t.elems);
  }
  return t;
}

// ---------------------------------------------------------------- generating pairs grouped by Sigma

struct SigmaClass {
  Bits sigma;
  std::vector<GeneratingPair<Tid>> pairs;
};

struct PairScan {
  std::vector<SigmaClass> classes;
  std::uint64_t generating_pairs = 0;
};

inline bool mu_below_one(std::uint64_t r, std::uint64_t s, std::uint64_t t) { return s * t + r * t + r * s < r * s * t; }

namespace detail {

struct RowClasses {
  std::vector<Bits> sigma;
  std::vector<std::vector<GeneratingPair<Tid>>> pairs;
  std::uint64_t generating = 0;
};

inline std::size_t bits_hash(const Bits& s) {
  std::size_t h = 0;
  for (auto w : s) h = hash_mix(h, static_cast<std::size_t>(w));
  return h;
}

inline RowClasses scan_row(const TableGroup& T, std::size_t i, bool mu_prune) {
  RowClasses row;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  Tid a = T.id(i);
  for (std::size_t j = 1; j < T.size(); ++j) {
    Tid c = T.id(j);
    if (mu_prune && !mu_below_one(T.order_of(a), T.order_of(c), T.order_of(T.mul(a, c)))) continue;
    if (!T.generates_fast(a, c)) continue;
    ++row.generating;
    Bits s = sigma_bits(T, a, c);
    auto& bucket = by_hash[bits_hash(s)];
    std::size_t idx = row.sigma.size();
    for (auto k : bucket)
      if (row.sigma[k] == s) idx = k;
    if (idx == row.sigma.size()) {
      bucket.push_back(idx);
      row.sigma.push_back(std::move(s));
      row.pairs.emplace_back();
    }
    row.pairs[idx].push_back({a, c});
  }
  return row;
}

// Row of x = h r h^-1 from the row of its class representative r: generation and Sigma are
// invariant under simultaneous conjugation.
inline RowClasses conjugate_row(const TableGroup& T, const RowClasses& rep, Tid h) {
  RowClasses row;
  row.generating = rep.generating;
  row.sigma = rep.sigma;
  row.pairs.resize(rep.pairs.size());
  for (std::size_t k = 0; k < rep.pairs.size(); ++k) {
    row.pairs[k].reserve(rep.pairs[k].size());
    for (const auto& p : rep.pairs[k]) row.pairs[k].push_back({T.conj(p.a, h), T.conj(p.c, h)});
  }
  return row;
}

}  // namespace detail

// All ordered generating pairs of T, grouped by Sigma in order of first appearance.
// Only one row per conjugacy class is scanned directly, by up to `threads` workers; the output does
// not depend on the worker count.
inline PairScan scan_generating_pairs(const TableGroup& T, bool mu_prune, unsigned threads = 1) {
  const std::size_t n = T.size();
  // class representative and a conjugator for every element
  std::vector<std::uint32_t> rep_of(n, std::uint32_t(-1)), conjugator(n, 0);
  std::vector<std::size_t> reps;
  for (std::size_t i = 1; i < n; ++i) {
    if (rep_of[i] != std::uint32_t(-1)) continue;
    reps.push_back(i);
    for (std::size_t h = 0; h < n; ++h) {
      auto x = T.conj(T.id(i), T.id(h)).v;
      if (rep_of[x] == std::uint32_t(-1)) {
        rep_of[x] = static_cast<std::uint32_t>(i);
        conjugator[x] = static_cast<std::uint32_t>(h);
      }
    }
  }
  std::vector<detail::RowClasses> rows(n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(reps.size(), 1))));
  if (threads == 1) {
    for (auto i : reps) rows[i] = detail::scan_row(T, i, mu_prune);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < reps.size(); k = next++) rows[reps[k]] = detail::scan_row(T, reps[k], mu_prune);
      });
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 1; i < n; ++i)
    if (rep_of[i] != i) rows[i] = detail::conjugate_row(T, rows[rep_of[i]], T.id(conjugator[i]));
  PairScan out;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  for (std::size_t i = 1; i < n; ++i) {
    auto& row = rows[i];
    out.generating_pairs += row.generating;
    for (std::size_t k = 0; k < row.sigma.size(); ++k) {
      auto& bucket = by_hash[detail::bits_hash(row.sigma[k])];
      std::size_t idx = out.classes.size();
      for (auto q : bucket)
        if (out.classes[q].sigma == row.sigma[k]) idx = q;
      if (idx == out.classes.size()) {
        bucket.push_back(idx);
        out.classes.push_back({row.sigma[k], {}});
      }
      auto& dst = out.classes[idx].pairs;
      dst.insert(dst.end(), row.pairs[k].begin(), row.pairs[k].end());
    }
    if (rep_of[i] != i) row = {};
  }
  return out;
}

// ---------------------------------------------------------------- orbit reduction

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::size_t count() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (find(static_cast<std::uint32_t>(i)) == i) ++c;
    return c;
  }
};

// A generating subset of the automorphisms listed (greedy, by closure under composition).
inline std::vector<std::vector<std::uint32_t>> automorphism_generators(const std::vector<std::vector<std::uint32_t>>& all) {
  std::vector<std::vector<std::uint32_t>> gens;
  if (all.empty()) return gens;
  std::set<std::vector<std::uint32_t>> span;
  std::vector<std::uint32_t> id(all[0].size());
  std::iota(id.begin(), id.end(), 0);
  span.insert(id);
  for (const auto& phi : all) {
    if (span.count(phi)) continue;
    gens.push_back(phi);
    std::vector<std::vector<std::uint32_t>> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<std::vector<std::uint32_t>> next;
      for (const auto& x : frontier)
        for (const auto& g : gens) {
          std::vector<std::uint32_t> y(x.size());
          for (std::size_t k = 0; k < x.size(); ++k) y[k] = g[x[k]];
          if (span.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
    if (span.size() == all.size()) break;
  }
  return gens;
}

struct OrbitCounts {
  std::size_t structures = 0;
  std::size_t bu_orbits = 0;  // without exchanging the two pairs
  std::size_t au_orbits = 0;  // with the exchange
  std::vector<UnmixedStructure<Tid>> au_representatives;  // canonical minimum per orbit
};

// Orbits of an explicit, invariant set of structures under the sigma operations per slot,
// inner automorphisms per slot, diagonal automorphisms and (for A_U) the slot exchange.
inline OrbitCounts unmixed_orbits(const TableGroup& T, const std::vector<UnmixedStructure<Tid>>& all,
                                  const std::vector<std::vector<std::uint32_t>>& aut_gens) {
  const std::uint64_t n = T.size();
  auto pkey = [n](const GeneratingPair<Tid>& p) { return std::uint64_t(p.a.v) * n + p.c.v; };
  auto skey = [&](const UnmixedStructure<Tid>& v) { return pkey(v.p1) * n * n + pkey(v.p2); };
  std::vector<std::uint64_t> keys;
  keys.reserve(all.size());
  for (const auto& v : all) keys.push_back(skey(v));
  std::vector<std::uint32_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return keys[x] < keys[y]; });
  std::vector<UnmixedStructure<Tid>> sorted;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  for (auto k : order) {
    index.emplace(keys[k], static_cast<std::uint32_t>(sorted.size()));
    sorted.push_back(all[k]);
  }
  auto lookup = [&](const UnmixedStructure<Tid>& v) {
    auto it = index.find(skey(v));
    if (it == index.end()) throw Error("structure set is not invariant under the action");
    return it->second;
  };
  UnionFind uf(sorted.size());
  auto gens = T.generators();
  for (std::uint32_t i = 0; i < sorted.size(); ++i) {
    const auto& v = sorted[i];
    for (int s : {1, 3}) {
      uf.unite(i, lookup({apply_sigma(T, s, v.p1), v.p2}));
      uf.unite(i, lookup({v.p1, apply_sigma(T, s, v.p2)}));
    }
    for (auto g : gens) {
      auto cj = [&](const GeneratingPair<Tid>& p) { return GeneratingPair<Tid>{T.conj(p.a, g), T.conj(p.c, g)}; };
      uf.unite(i, lookup({cj(v.p1), v.p2}));
      uf.unite(i, lookup({v.p1, cj(v.p2)}));
    }
    for (const auto& phi : aut_gens) {
      auto ap = [&](const GeneratingPair<Tid>& p) { return GeneratingPair<Tid>{Tid{phi[p.a.v]}, Tid{phi[p.c.v]}}; };
      uf.unite(i, lookup({ap(v.p1), ap(v.p2)}));
    }
  }
  OrbitCounts out;
  out.structures = sorted.size();
  out.bu_orbits = uf.count();
  for (std::uint32_t i = 0; i < sorted.size(); ++i) uf.unite(i, lookup({sorted[i].p2, sorted[i].p1}));
  out.au_orbits = uf.count();
  for (std::uint32_t i = 0; i < sorted.size(); ++i)
    if (uf.find(i) == i) out.au_representatives.push_back(sorted[i]);
  return out;
}

// ---------------------------------------------------------------- enumerate_unmixed

struct SearchOptions {
  std::optional<TypeTriple> type1;  // exact (ordered) type of the first pair
  std::optional<TypeTriple> type2;
  bool mu_prune = true;
  bool up_to_orbit = false;
  std::size_t limit = 0;  // 0: no limit on stored structures
  std::size_t orbit_cap = 2'000'000;
  unsigned threads = 1;  // pair-scan workers; output is independent of this
};

struct TableEnumeration {
  std::vector<UnmixedStructure<Tid>> found;
  std::uint64_t total = 0;  // all matching ordered structures
  bool complete = true;     // found holds every structure (or every orbit representative)
  std::uint64_t generating_pairs = 0;
  std::size_t distinct_sigma = 0;
  std::optional<OrbitCounts> orbits;
};

inline TableEnumeration enumerate_unmixed_table(const TableGroup& T, const SearchOptions& opt) {
  if (opt.up_to_orbit && (opt.type1 || opt.type2))
    throw UsageError("up-to-orbit enumeration does not combine with type filters (the action moves types)");
  TableEnumeration out;
  auto scan = scan_generating_pairs(T, opt.mu_prune, opt.threads);
  out.generating_pairs = scan.generating_pairs;
  out.distinct_sigma = scan.classes.size();
  auto matches = [&](const std::optional<TypeTriple>& want, const GeneratingPair<Tid>& p) {
    return !want || type_of(T, p.a, p.c) == *want;
  };
  const auto& K = scan.classes;
  auto filtered = [&](const std::optional<TypeTriple>& want) {
    std::vector<std::vector<GeneratingPair<Tid>>> out_lists(K.size());
    for (std::size_t i = 0; i < K.size(); ++i)
      for (const auto& p : K[i].pairs)
        if (matches(want, p)) out_lists[i].push_back(p);
    return out_lists;
  };
  auto first = filtered(opt.type1), second = filtered(opt.type2);
  std::vector<std::pair<std::size_t, std::size_t>> compatible;
  for (std::size_t i = 0; i < K.size(); ++i)
    for (std::size_t j = 0; j < K.size(); ++j)
      if (bits_and_count(K[i].sigma, K[j].sigma) == 1) {
        compatible.push_back({i, j});
        out.total += std::uint64_t(first[i].size()) * second[j].size();
      }
  std::size_t store_limit = opt.up_to_orbit ? opt.orbit_cap : opt.limit;
  if (opt.up_to_orbit && out.total > opt.orbit_cap)
    throw CapacityExceeded("orbit reduction: too many structures", opt.orbit_cap);
  for (auto [i, j] : compatible) {
    for (const auto& p1 : first[i]) {
      for (const auto& p2 : second[j]) {
        if (store_limit && out.found.size() >= store_limit) {
          out.complete = false;
          break;
        }
        out.found.push_back({p1, p2});
      }
      if (!out.complete) break;
    }
    if (!out.complete) break;
  }
  if (opt.up_to_orbit) {
    auto autos = table_automorphisms(T);
    auto oc = unmixed_orbits(T, out.found, automorphism_generators(autos));
    out.found = oc.au_representatives;
    if (opt.limit && out.found.size() > opt.limit) {
      out.found.resize(opt.limit);
      out.complete = false;
    }
    out.orbits = std::move(oc);
  }
  return out;
}

template <FiniteGroup G>
struct Enumeration {
  std::vector<UnmixedOf<G>> found;
  std::uint64_t total = 0;
  bool complete = true;
  std::uint64_t generating_pairs = 0;
  std::size_t distinct_sigma = 0;
  std::optional<OrbitCounts> orbits;
};

template <FiniteGroup G>
Enumeration<G> enumerate_unmixed(const G& grp, const SearchOptions& opt = {}, std::size_t table_cap = 20'000) {
  auto tab = tabulate(grp, table_cap);
  auto r = enumerate_unmixed_table(tab.table, opt);
  Enumeration<G> out;
  for (const auto& v : r.found) out.found.push_back(tab.lift(v));
  out.total = r.total;
  out.complete = r.complete;
  out.generating_pairs = r.generating_pairs;
  out.distinct_sigma = r.distinct_sigma;
  out.orbits = std::move(r.orbits);
  return out;
}

// ---------------------------------------------------------------- abelian groups

struct AbelianCount {
  std::uint64_t solutions = 0;   // normalized second pairs with first pair (e1, e2)
  std::uint64_t structures = 0;  // solutions times |GL(2, Z/n)|
  std::uint64_t au_orbits = 0;
  std::uint64_t bu_orbits = 0;
  std::string note;
};

inline std::uint64_t gl2_order(std::int64_t n) {
  std::uint64_t out = 1;
  std::int64_t m = n;
  for (auto p : prime_factors(n)) {
    std::uint64_t pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= static_cast<std::uint64_t>(p);
    }
    std::uint64_t P = static_cast<std::uint64_t>(p);
    out *= (pk * pk / (P * P)) * (pk * pk / (P * P)) * (P * P - 1) * (P * P - P);
  }
  return out;
}

// Second pairs (a2, c2) = ((x,y), (z,t)) with x,y,z,t, x-y, x+z, z-t, y+t, x+z-y-t, xt-yz all units mod n.
inline AbelianCount count_abelian(std::int64_t n) {
  AbelianCount out;
  if (n < 2) throw UsageError("count_abelian: n must be >= 2");
  if (std::gcd(n, std::int64_t(6)) != 1) {
    out.note = "no structures: n must be coprime to 6";
    return out;
  }
  auto unit = [n](std::int64_t v) { return std::gcd(mod(v, n), n) == 1; };
  std::vector<std::array<std::int64_t, 4>> sols;
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y)
      for (std::int64_t z = 0; z < n; ++z)
        for (std::int64_t t = 0; t < n; ++t)
          if (unit(x) && unit(y) && unit(z) && unit(t) && unit(x - y) && unit(x + z) && unit(z - t) &&
              unit(y + t) && unit(x + z - y - t) && unit(x * t - y * z))
            sols.push_back({x, y, z, t});
  out.solutions = sols.size();
  out.structures = out.solutions * gl2_order(n);
  auto key = [n](std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t t) {
    return ((mod(x, n) * n + mod(y, n)) * n + mod(z, n)) * n + mod(t, n);
  };
  std::unordered_map<std::int64_t, std::uint32_t> index;
  for (std::uint32_t i = 0; i < sols.size(); ++i) index[key(sols[i][0], sols[i][1], sols[i][2], sols[i][3])] = i;
  using V = std::array<std::int64_t, 2>;
  auto sigma = [n](int s, V a, V c) -> std::pair<V, V> {
    V b{mod(-a[0] - c[0], n), mod(-a[1] - c[1], n)};
    if (s == 1) return {b, a};
    return {c, a};  // s == 3
  };
  // M with M p = e1, M q = e2, applied to u
  auto renorm = [n](V p, V q, V u) -> V {
    std::int64_t det = mod(p[0] * q[1] - q[0] * p[1], n);
    std::int64_t di = invmod(det, n);
    return {mod((q[1] * u[0] - q[0] * u[1]) * di, n), mod((-p[1] * u[0] + p[0] * u[1]) * di, n)};
  };
  auto find = [&](V a, V c) {
    auto it = index.find(key(a[0], a[1], c[0], c[1]));
    if (it == index.end()) throw Error("count_abelian: normalized set is not invariant");
    return it->second;
  };
  UnionFind uf(sols.size());
  const V e1{1, 0}, e2{0, 1};
  for (std::uint32_t i = 0; i < sols.size(); ++i) {
    V a{sols[i][0], sols[i][1]}, c{sols[i][2], sols[i][3]};
    for (int s : {1, 3}) {
      auto [a2, c2] = sigma(s, a, c);
      uf.unite(i, find(a2, c2));
      auto [p, q] = sigma(s, e1, e2);
      uf.unite(i, find(renorm(p, q, a), renorm(p, q, c)));
    }
  }
  out.bu_orbits = uf.count();
  for (std::uint32_t i = 0; i < sols.size(); ++i) {
    V a{sols[i][0], sols[i][1]}, c{sols[i][2], sols[i][3]};
    uf.unite(i, find(renorm(a, c, e1), renorm(a, c, e2)));
  }
  out.au_orbits = uf.count();
  return out;
}

// The stated count (p-1)(p-2)^2(p-4).
inline std::int64_t lower_bound_abelian(std::int64_t p) {
  if (!is_prime(p) || p < 5) throw UsageError("lower_bound_abelian: p must be a prime >= 5");
  return (p - 1) * (p - 2) * (p - 2) * (p - 4);
}

// The bound with the determinant condition on the last coordinate included: (p-1)(p-2)^2(p-5).
inline std::int64_t corrected_lower_bound_abelian(std::int64_t p) {
  if (!is_prime(p) || p < 5) throw UsageError("corrected_lower_bound_abelian: p must be a prime >= 5");
  return (p - 1) * (p - 2) * (p - 2) * (p - 5);
}

// ---------------------------------------------------------------- mixed search on tables

struct MixedFinding {
  std::size_t subgroup_index = 0;
  GeneratingPair<Tid> pair;  // ids in the parent group
  Tid g;
};

struct MixedTableResult {
  std::size_t index_two_subgroups = 0;
  std::size_t abelian_skipped = 0;
  std::size_t involution_rejected = 0;
  std::vector<MixedFinding> found;
};

// Mixed quadruples (G0; a, c; g) over every index-2 subgroup G0 of T; stops after limit findings (0: all).
inline MixedTableResult search_mixed_table(const TableGroup& T, std::size_t limit = 1) {
  MixedTableResult out;
  auto subs = index_two_subgroups(T);
  out.index_two_subgroups = subs.size();
  for (std::size_t si = 0; si < subs.size(); ++si) {
    const Bits& g0 = subs[si];
    auto members = bits_list(g0);
    // involution outside G0 violates condition 3 with (g gamma)^2 = 1
    bool involution = false;
    Tid g{0};
    bool have_g = false;
    for (std::size_t x = 0; x < T.size(); ++x) {
      if (bits_test(g0, x)) continue;
      if (!have_g) {
        g = T.id(x);
        have_g = true;
      }
      if (T.order_of(T.id(x)) == 2) involution = true;
    }
    if (involution) {
      ++out.involution_rejected;
      continue;
    }
    std::vector<Tid> pgens;
    Bits span(T.words(), 0);
    bits_set(span, 0);
    for (auto x : members) {
      if (bits_test(span, x)) continue;
      pgens.push_back(T.id(x));
      span = T.closure_bits(pgens);
    }
    std::vector<std::uint32_t> to_parent;
    auto G0 = T.subgroup(g0, pgens, "G0", &to_parent);
    if (G0.is_abelian()) {
      ++out.abelian_skipped;
      continue;
    }
    std::vector<std::int32_t> local(T.size(), -1);
    for (std::size_t k = 0; k < to_parent.size(); ++k) local[to_parent[k]] = static_cast<std::int32_t>(k);
    // squares of elements outside G0, and conjugation by g, in local ids
    Bits squares(G0.words(), 0);
    for (std::size_t x = 0; x < T.size(); ++x)
      if (!bits_test(g0, x)) bits_set(squares, static_cast<std::size_t>(local[T.mul(T.id(x), T.id(x)).v]));
    std::vector<std::uint32_t> phi(G0.size());
    for (std::size_t k = 0; k < G0.size(); ++k) phi[k] = static_cast<std::uint32_t>(local[T.conj(T.id(to_parent[k]), g).v]);
    std::unordered_map<std::size_t, std::vector<std::pair<Bits, bool>>> verdicts;
    for (std::size_t i = 1; i < G0.size(); ++i)
      for (std::size_t j = 1; j < G0.size(); ++j) {
        Tid a = G0.id(i), c = G0.id(j);
        Bits s = sigma_bits(G0, a, c);
        std::size_t h = 0;
        for (auto w : s) h = hash_mix(h, static_cast<std::size_t>(w));
        auto& bucket = verdicts[h];
        std::optional<bool> ok;
        for (auto& [bits, v] : bucket)
          if (bits == s) ok = v;
        if (!ok) {
          bool good = bits_and_count(s, squares) == 0;
          if (good) {
            Bits image(G0.words(), 0);
            for (auto x : bits_list(s)) bits_set(image, phi[x]);
            good = bits_and_count(s, image) == 1;
          }
          bucket.push_back({s, good});
          ok = good;
        }
        if (!*ok || !G0.generates_fast(a, c)) continue;
        out.found.push_back({si, {T.id(to_parent[i]), T.id(to_parent[j])}, g});
        if (limit && out.found.size() >= limit) return out;
      }
  }
  return out;
}

// ---------------------------------------------------------------- catalogue scans

enum class ScanMode { unmixed, mixed };

inline const char* catalogue_disclaimer() {
  return "partial catalogue of constructible nonabelian groups; not complete for any order range, so a zero "
         "count is evidence, not a classification";
}

struct ScanEntry {
  std::string id;
  std::size_t order = 0;
  std::uint64_t found = 0;
  std::string note;
};

struct ScanReport {
  ScanMode mode = ScanMode::unmixed;
  std::size_t max_order = 0;
  std::vector<ScanEntry> entries;
  std::uint64_t total_found = 0;
  bool complete = false;  // never complete: the catalogue is partial
  std::string disclaimer = catalogue_disclaimer();
  double elapsed_ms = 0;
};

inline ScanReport scan_catalogue(std::size_t max_order, ScanMode mode, std::size_t min_order = 1) {
  auto t0 = std::chrono::steady_clock::now();
  ScanReport rep;
  rep.mode = mode;
  rep.max_order = max_order;
  for (const auto& ce : catalogue(max_order)) {
    if (ce.order < min_order) continue;
    ScanEntry e{ce.id, ce.order, 0, ""};
    auto T = build_catalogue_group(ce.id, std::max<std::size_t>(max_order, 2500));
    if (mode == ScanMode::unmixed) {
      SearchOptions opt;
      opt.mu_prune = false;
      opt.limit = 1;
      auto r = enumerate_unmixed_table(T, opt);
      e.found = r.total;
      e.note = std::to_string(r.distinct_sigma) + " distinct Sigma sets";
    } else {
      auto r = search_mixed_table(T, 1);
      e.found = r.found.size();
      e.note = std::to_string(r.index_two_subgroups) + " index-2 subgroups, " + std::to_string(r.abelian_skipped) +
               " abelian, " + std::to_string(r.involution_rejected) + " with an involution outside";
    }
    rep.total_found += e.found;
    rep.entries.push_back(std::move(e));
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ---------------------------------------------------------------- wallpaper quotients

struct WallpaperScan {
  std::size_t minimum = 0;
  UnmixedStructure<Tid> witness;
  std::uint64_t generating_pairs = 0;
  std::size_t distinct_sigma = 0;
};

// Minimum of |Sigma(a1,c1) n Sigma(a2,c2)| over all pairs of generating pairs.
inline WallpaperScan wallpaper_scan_table(const TableGroup& T) {
  auto scan = scan_generating_pairs(T, false);
  if (scan.classes.empty()) throw NotFound("no generating pairs in " + T.name());
  WallpaperScan out;
  out.generating_pairs = scan.generating_pairs;
  out.distinct_sigma = scan.classes.size();
  out.minimum = SIZE_MAX;
  const auto& K = scan.classes;
  for (std::size_t i = 0; i < K.size(); ++i)
    for (std::size_t j = i; j < K.size(); ++j) {
      std::size_t c = bits_and_count(K[i].sigma, K[j].sigma);
      if (c < out.minimum) {
        out.minimum = c;
        out.witness = {K[i].pairs.front(), K[j].pairs.front()};
      }
    }
  return out;
}

inline WallpaperScan wallpaper_scan(int d, std::int64_t m, bool printed_d4_relation = false) {
  WallpaperGroup W(d, m, printed_d4_relation);
  return wallpaper_scan_table(TableGroup::from_group(W, 100'000));
}

// ---------------------------------------------------------------- reality hunt

enum class RealityWant { biholo_not_real, not_biholo, real };

inline bool reality_matches(const RealityVerdict& v, RealityWant want) {
  switch (want) {
    case RealityWant::biholo_not_real: return v.biholo_conjugate == true && v.real == false;
    case RealityWant::not_biholo: return v.biholo_conjugate == false;
    default: return v.real == true;
  }
}

template <FiniteGroup G>
struct HuntResult {
  std::vector<UnmixedOf<G>> found;
  std::uint64_t examined = 0;
  bool exhausted = false;  // every candidate was examined
};

// Structures whose reality verdict matches want, examined in canonical order up to budget.
template <FiniteGroup G, class Backend>
HuntResult<G> hunt_reality(const G& grp, const Backend& aut, RealityWant want, const SearchOptions& opt,
                           std::uint64_t budget, std::size_t table_cap = 20'000) {
  auto tab = tabulate(grp, table_cap);
  SearchOptions o = opt;
  o.up_to_orbit = false;
  o.limit = static_cast<std::size_t>(budget);
  auto r = enumerate_unmixed_table(tab.table, o);
  HuntResult<G> out;
  for (const auto& v : r.found) {
    ++out.examined;
    auto lifted = tab.lift(v);
    auto verdict = reality_unmixed(grp, lifted, aut);
    if (reality_matches(verdict, want)) {
      out.found.push_back(lifted);
      if (opt.limit && out.found.size() >= opt.limit) return out;
    }
  }
  out.exhausted = r.complete;
  return out;
}

// ---------------------------------------------------------------- seeded random search

struct RandomSearchResult {
  std::optional<UnmixedStructure<Tid>> found;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
};

// Samples pairs with mu < 1 that generate, keeps their Sigma sets, and stops at the first
// two with trivial intersection.
inline RandomSearchResult random_unmixed_table(const TableGroup& T, std::uint64_t seed, std::uint64_t budget) {
  RandomSearchResult out;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  const std::uint64_t n = T.size();
  std::vector<std::pair<Bits, GeneratingPair<Tid>>> kept;
  for (; out.samples < budget; ++out.samples) {
    Tid a = T.id(rng() % n), c = T.id(rng() % n);
    if (!mu_below_one(T.order_of(a), T.order_of(c), T.order_of(T.mul(a, c)))) continue;
    if (!T.generates_fast(a, c)) continue;
    Bits s = sigma_bits(T, a, c);
    for (const auto& [bits, pr] : kept)
      if (bits_and_count(bits, s) == 1) {
        out.found = UnmixedStructure<Tid>{pr, {a, c}};
        ++out.samples;
        return out;
      }
    bool dup = false;
    for (const auto& kb : kept)
      if (kb.first == s) dup = true;
    if (!dup) kept.push_back({std::move(s), {a, c}});
  }
  return out;
}

}  // namespace bv
