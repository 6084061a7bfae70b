#pragma once

#include "bv/reality.hpp"

namespace bv {

// A generating pair together with a conjugating witness gamma.
struct PermPairWitness {
  GeneratingPair<Perm> pair;
  Perm gamma;
  TypeTriple type;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw UsageError(what);
}

inline void self_check(bool cond, const std::string& what) {
  if (!cond) throw Error("gallery self-check failed: " + what);
}

inline TypeTriple perm_type(const Perm& a, const Perm& c) { return {a.order(), c.order(), (a * c).order()}; }

inline std::vector<int> range_inclusive(int from, int to) {
  std::vector<int> v;
  if (from <= to)
    for (int k = from; k <= to; ++k) v.push_back(k);
  else
    for (int k = from; k >= to; --k) v.push_back(k);
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------- symmetric groups

// a = (5,4,1)(2,6), c = (1,2,3)(4,...,n); a' = s^-1, c' = t s^2 with s = (1,...,n), t = (1,2).
inline UnmixedStructure<Perm> sn_thm_sym(int n) {
  detail::require(n >= 8, "sn_thm_sym: n must be >= 8");
  detail::require(n % 3 == 2, "sn_thm_sym: n must be 2 mod 3");
  std::size_t N = static_cast<std::size_t>(n);
  Perm a = cycles_to_perm({{5, 4, 1}, {2, 6}}, N);
  Perm c = cycles_to_perm({{1, 2, 3}, detail::range_inclusive(4, n)}, N);
  Perm s = cycles_to_perm({detail::range_inclusive(1, n)}, N);
  Perm t = cycles_to_perm({{1, 2}}, N);
  UnmixedStructure<Perm> v{{a, c}, {s.inverse(), t * s * s}};
  auto t1 = detail::perm_type(a, c);
  detail::self_check(t1.r == 6 && t1.s == std::uint64_t(3 * (n - 3)) && t1.t == lcm_u(3, n - 4), "sn_thm_sym type 1");
  auto t2 = detail::perm_type(v.p2.a, v.p2.c);
  detail::self_check(t2.r == std::uint64_t(n) && t2.t == std::uint64_t(n - 1), "sn_thm_sym type 2");
  return v;
}

// ---------------------------------------------------------------- alternating groups

// Printed data without hypothesis checks: a = (1..q), c = (q+1,...,q+k-1,1)(q+k,p,p-1,...,2), k = n - q.
inline GeneratingPair<Perm> an_alp1_raw(int n, int p, int q) {
  int k = n - q;
  detail::require(k >= 2 && p >= 2 && q >= 2 && q + k <= n && p < q + k, "an_alp1_raw: parameters out of range");
  std::size_t N = static_cast<std::size_t>(n);
  Perm a = cycles_to_perm({detail::range_inclusive(1, q)}, N);
  std::vector<int> first = detail::range_inclusive(q + 1, q + k - 1);
  first.push_back(1);
  std::vector<int> second{q + k};
  for (int x = p; x >= 2; --x) second.push_back(x);
  Perm c = cycles_to_perm({first, second}, N);
  return {a, c};
}

inline GeneratingPair<Perm> an_alp1(int n, int p, int q) {
  detail::require(n % 2 == 0 && n >= 16, "an_alp1: n must be even and >= 16");
  detail::require(is_prime(p), "an_alp1: p must be prime");
  detail::require(is_prime(q), "an_alp1: q must be prime");
  detail::require(3 <= p && p <= q && q <= n - 3, "an_alp1: need 3 <= p <= q <= n-3");
  detail::require((n - q) % p != 0, "an_alp1: need n - q not divisible by p");
  auto pr = an_alp1_raw(n, p, q);
  auto t = detail::perm_type(pr.a, pr.c);
  detail::self_check(t == TypeTriple{std::uint64_t(q), std::uint64_t(p * (n - q)), std::uint64_t(n - p + 2)},
                     "an_alp1 type " + t.to_string());
  return pr;
}

// Printed 0-based data, n >= 16, n = 0 mod 4, n = 1 mod 3.
inline PermPairWitness an_alp2_1(int n) {
  detail::require(n >= 16 && n % 4 == 0 && n % 3 == 1, "an_alp2_1: need n >= 16, n = 0 mod 4, n = 1 mod 3");
  std::size_t N = static_cast<std::size_t>(n);
  int m = (n - 4) / 6;
  std::vector<std::vector<int>> gamma_cycles;
  for (int i = 1; i <= m; ++i) gamma_cycles.push_back({6 * i - 2, 6 * i + 1});
  gamma_cycles.push_back({2, 3});
  for (int i = 1; i <= m; ++i) {
    gamma_cycles.push_back({6 * i - 1, 6 * i + 3});
    gamma_cycles.push_back({6 * i, 6 * i + 2});
  }
  Perm gamma = cycles_to_perm(gamma_cycles, N, true);
  std::vector<std::vector<int>> a_cycles{{0, 1}};
  for (int i = 1; i <= m; ++i) a_cycles.push_back({6 * i - 2, 6 * i + 1});
  for (int i = 1; i <= m; ++i) a_cycles.push_back({6 * i - 4, 6 * i - 1});
  for (int i = 1; i <= m; ++i) a_cycles.push_back({gamma(6 * i - 4), gamma(6 * i - 1)});  // t_i^gamma
  a_cycles.push_back({n - 2, n - 4});
  Perm a = cycles_to_perm(a_cycles, N, true);
  std::vector<std::vector<int>> c_cycles;
  for (int i = 1; i <= (n - 1) / 3; ++i) c_cycles.push_back({3 * i - 2, 3 * i - 1, 3 * i});
  Perm c = cycles_to_perm(c_cycles, N, true);
  auto t = detail::perm_type(a, c);
  detail::self_check(t == TypeTriple{2, 3, 84}, "an_alp2_1 type " + t.to_string());
  Perm gi = gamma.inverse();
  detail::self_check(gamma * a * gi == a.inverse() && gamma * c * gi == c.inverse(), "an_alp2_1 gamma inverts");
  detail::self_check(parity(gamma) == Parity::odd, "an_alp2_1 gamma odd");
  return {{a, c}, gamma, t};
}

// Printed 0-based data for n = 3p+1 without the p > 5 hypothesis.
inline PermPairWitness an_alp2_2_raw(int p) {
  detail::require(is_prime(p) && p >= 5, "an_alp2_2_raw: p must be a prime >= 5");
  int n = 3 * p + 1;
  std::size_t N = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> g_cycles{{p + 1, 2 * p + 1}};
  for (int i = 1; i <= (p - 1) / 2; ++i) g_cycles.push_back({1 + i, p + 1 - i});
  for (int i = 1; i <= p - 1; ++i) g_cycles.push_back({p + 1 + i, 3 * p + 1 - i});
  Perm gamma = cycles_to_perm(g_cycles, N, true);
  Perm a = cycles_to_perm({detail::range_inclusive(1, p), detail::range_inclusive(p + 1, 2 * p),
                           detail::range_inclusive(2 * p + 1, 3 * p)},
                          N, true);
  std::vector<int> c1{0};
  for (int x = p; x >= 2; --x) c1.push_back(x);
  Perm c = cycles_to_perm({c1, {1, p + 1, 3 * p, p + 2, 2 * p + 1}}, N, true);
  Perm gi = gamma.inverse();
  detail::self_check(gamma * a * gi == a.inverse() && gamma * c * gi == c.inverse(), "an_alp2_2 gamma inverts");
  bool want_odd = p % 4 == 1;
  detail::self_check((parity(gamma) == Parity::odd) == want_odd, "an_alp2_2 gamma parity");
  return {{a, c}, gamma, detail::perm_type(a, c)};
}

inline PermPairWitness an_alp2_2(int p) {
  detail::require(is_prime(p) && p > 5, "an_alp2_2: p must be a prime > 5");
  auto r = an_alp2_2_raw(p);
  std::uint64_t P = static_cast<std::uint64_t>(p);
  detail::self_check(r.type == TypeTriple{P, 5 * P, 2 * P + 3}, "an_alp2_2 type " + r.type.to_string());
  return r;
}

// 1-based, n = 2k: a = (1..2k-3), c = d a^(k-2), gamma = a alpha with gamma a gamma^-1 = a^-1, gamma c gamma^-1 = ac.
inline PermPairWitness an_alp3(int k) {
  detail::require(2 * k >= 16, "an_alp3: need n = 2k >= 16");
  int n = 2 * k;
  std::size_t N = static_cast<std::size_t>(n);
  Perm a = cycles_to_perm({detail::range_inclusive(1, 2 * k - 3)}, N);
  Perm d = cycles_to_perm({{1, 2, 3}, {2 * k - 3, 2 * k - 4, 2 * k - 5}, {k - 1, 2 * k - 1}, {2 * k - 2, k - 2, 2 * k, k}}, N);
  std::vector<std::vector<int>> alpha_cycles;
  for (int i = 1; i <= k - 2; ++i)
    if (i != 2 * k - 2 - i) alpha_cycles.push_back({i, 2 * k - 2 - i});
  alpha_cycles.push_back({2 * k - 2, 2 * k});
  Perm alpha = cycles_to_perm(alpha_cycles, N);
  Perm c = d * power(SymGroup(N), a, k - 2);
  Perm gamma = a * alpha;
  auto t = detail::perm_type(a, c);
  std::uint64_t K = static_cast<std::uint64_t>(k);
  detail::self_check(t == TypeTriple{2 * K - 3, 2 * K - 2, 2 * K - 2}, "an_alp3 type " + t.to_string());
  Perm gi = gamma.inverse();
  detail::self_check(gamma * a * gi == a.inverse() && gamma * c * gi == a * c, "an_alp3 gamma identities");
  detail::self_check((parity(gamma) == Parity::odd) == (k % 2 == 0), "an_alp3 gamma parity");
  return {{a, c}, gamma, t};
}

// Structure on A_{3p+1} from an_alp3((3p+1)/2) and an_alp2_2(p).
inline UnmixedStructure<Perm> an_intro3(int p) {
  detail::require(is_prime(p) && p > 5, "an_intro3: p must be a prime > 5");
  detail::require(p % 4 == 1, "an_intro3: need p = 1 mod 4");
  detail::require(p % 5 != 2 && p % 5 != 4, "an_intro3: need p != 2, 4 mod 5");
  detail::require(p % 13 != 5, "an_intro3: need p != 5 mod 13");
  detail::require(p % 11 != 4, "an_intro3: need p != 4 mod 11");
  auto first = an_alp3((3 * p + 1) / 2);
  auto second = an_alp2_2(p);
  detail::self_check(std::gcd(first.type.nu(), second.type.nu()) == 1, "an_intro3 coprime nu");
  return {first.pair, second.pair};
}

// ---------------------------------------------------------------- SL(2,p)

namespace detail {

inline bool sl2_generates(const SL2Group& G, const Mat2& a, const Mat2& c) {
  return generates(G, a, c);
}

inline std::uint64_t mat_order(const Mat2& x) { return SL2Group(x.p).order_of(x); }

}  // namespace detail

inline GeneratingPair<Mat2> sl2_type46p(std::int64_t p) {
  auto k = sl2_constants(p);
  std::uint64_t P = static_cast<std::uint64_t>(p);
  detail::self_check(type_of(SL2Group(p), k.B, k.S) == TypeTriple{4, 6, P}, "sl2_type46p type");
  return {k.B, k.S};
}

// D(l) and g D(l) g^-1 with the closed-form g; type (q,q,q) for l of order q.
inline GeneratingPair<Mat2> sl2_split_pair(std::int64_t p, std::int64_t l) {
  Mat2 D = diag_mat(p, l);
  Mat2 g = split_conjugator(p, l);
  return {D, g * D * g.inverse()};
}

inline GeneratingPair<Mat2> sl2_qqq_split(std::int64_t p, std::int64_t q) {
  require_odd_prime(p);
  detail::require(is_prime(q) && q >= 5, "sl2_qqq_split: q must be a prime >= 5");
  detail::require((p - 1) % q == 0, "sl2_qqq_split: q must divide p - 1");
  std::int64_t l = mult_order_element(p, q);
  auto pr = sl2_split_pair(p, l);
  SL2Group G(p);
  std::uint64_t Q = static_cast<std::uint64_t>(q);
  detail::self_check(type_of(G, pr.a, pr.c) == TypeTriple{Q, Q, Q}, "sl2_qqq_split type");
  detail::self_check((pr.a * pr.c).trace() == mod(l + invmod(l, p), p), "sl2_qqq_split trace");
  detail::self_check(detail::sl2_generates(G, pr.a, pr.c), "sl2_qqq_split generation");
  return pr;
}

// Curve relating (s, t) to trace(x g x g^-1) = r for x = M(r), g = [[1,s],[t,1+st]].
inline std::int64_t nonsplit_curve(std::int64_t p, std::int64_t r, std::int64_t s, std::int64_t t) {
  std::int64_t s2 = s * s % p, t2 = t * t % p, st = s * t % p;
  std::int64_t v = -s2 * t2 % p + s2 * t % p * r % p - s2 - st * t % p * r % p + st * r % p * r % p - 2 * st - t2 +
                   r * r % p - r - 2;
  return mod(v, p);
}

// Smallest trace k whose companion matrix has order q.
inline std::int64_t companion_trace_of_order(std::int64_t p, std::int64_t q) {
  SL2Group G(p);
  for (std::int64_t k = 0; k < p; ++k)
    if (G.order_of(companion_mat(p, k)) == static_cast<std::uint64_t>(q)) return k;
  throw NotFound("no companion matrix of order " + std::to_string(q) + " mod " + std::to_string(p));
}

inline GeneratingPair<Mat2> sl2_qqq_nonsplit(std::int64_t p, std::int64_t q) {
  require_odd_prime(p);
  detail::require(is_prime(q) && q >= 5, "sl2_qqq_nonsplit: q must be a prime >= 5");
  detail::require((p + 1) % q == 0, "sl2_qqq_nonsplit: q must divide p + 1");
  SL2Group G(p);
  std::int64_t k = companion_trace_of_order(p, q);
  Mat2 x = companion_mat(p, k);
  Mat2 xi = x.inverse();
  for (std::int64_t s = 0; s < p; ++s)
    for (std::int64_t t = 0; t < p; ++t) {
      if (nonsplit_curve(p, k, s, t) != 0) continue;
      Mat2 g = Mat2::make(p, 1, s, t, 1 + s * t);
      Mat2 y = g * x * g.inverse();
      detail::self_check((x * y).trace() == k, "nonsplit curve point has the wrong trace");
      if (y == x || y == x.negated() || y == xi || y == xi.negated()) continue;
      if (!detail::sl2_generates(G, x, y)) continue;
      std::uint64_t Q = static_cast<std::uint64_t>(q);
      detail::self_check(type_of(G, x, y) == TypeTriple{Q, Q, Q}, "sl2_qqq_nonsplit type");
      return {x, y};
    }
  throw NotFound("sl2_qqq_nonsplit: no valid point on the curve for p = " + std::to_string(p));
}

// Split (q,q,q) pair with q = 5 whose inverting conjugator lies in the requested coset of SL in SL+-.
inline GeneratingPair<Mat2> sl2_555_coset(std::int64_t p, Sl2Coset want) {
  require_odd_prime(p);
  detail::require(p % 4 == 3, "sl2_555_coset: need p = 3 mod 4");
  detail::require(p % 5 == 1, "sl2_555_coset: need p = 1 mod 5");
  std::int64_t l = mult_order_element(p, 5);
  for (std::int64_t cand : {l, l * l % p}) {
    auto pr = sl2_split_pair(p, cand);
    if (solve_conjugation_sl2(p, pr.a, pr.a.inverse(), pr.c, pr.c.inverse(), want)) {
      SL2Group G(p);
      detail::self_check(type_of(G, pr.a, pr.c) == TypeTriple{5, 5, 5}, "sl2_555_coset type");
      detail::self_check(detail::sl2_generates(G, pr.a, pr.c), "sl2_555_coset generation");
      return pr;
    }
  }
  throw NotFound("sl2_555_coset: neither lambda nor lambda^2 lands in the requested coset");
}

enum class TorusCase { split, nonsplit };

// Type (q1, q2, q1 q2): a of order q1, c = g x2 g^-1 of order q2, g = [[1,s],[t,1+st]] enumerated.
inline GeneratingPair<Mat2> sl2_q1q2(std::int64_t p, std::int64_t q1, std::int64_t q2, TorusCase tc) {
  require_odd_prime(p);
  detail::require(is_prime(q1) && is_prime(q2) && q1 != q2, "sl2_q1q2: q1, q2 must be distinct primes");
  std::int64_t m = tc == TorusCase::split ? p - 1 : p + 1;
  detail::require(m % (q1 * q2) == 0, tc == TorusCase::split ? "sl2_q1q2: q1 q2 must divide p - 1"
                                                             : "sl2_q1q2: q1 q2 must divide p + 1");
  SL2Group G(p);
  Mat2 x1, x2;
  if (tc == TorusCase::split) {
    x1 = diag_mat(p, mult_order_element(p, q1));
    x2 = diag_mat(p, mult_order_element(p, q2));
  } else {
    x1 = companion_mat(p, companion_trace_of_order(p, q1));
    x2 = companion_mat(p, companion_trace_of_order(p, q2));
  }
  std::uint64_t Q1 = static_cast<std::uint64_t>(q1), Q2 = static_cast<std::uint64_t>(q2);
  for (std::int64_t s = 0; s < p; ++s)
    for (std::int64_t t = 0; t < p; ++t) {
      Mat2 g = Mat2::make(p, 1, s, t, 1 + s * t);
      Mat2 c = g * x2 * g.inverse();
      if (G.order_of(x1 * c) != Q1 * Q2) continue;
      if (!detail::sl2_generates(G, x1, c)) continue;
      detail::self_check(type_of(G, x1, c) == TypeTriple{Q1, Q2, Q1 * Q2}, "sl2_q1q2 type");
      return {x1, c};
    }
  throw NotFound("sl2_q1q2: no conjugator found");
}

// ---------------------------------------------------------------- mixed

// a = (B, a2, 2), c = (S, c2, 2) in H_[4], H = SL(2,p), with (a2, c2) = sl2_555_coset(p, SL).
inline MixedQuadruple<H4Elem<Mat2>> mixed_intro2(std::int64_t p) {
  require_odd_prime(p);
  detail::require(p % 4 == 3, "mixed_intro2: need p = 3 mod 4");
  detail::require(p % 5 == 1, "mixed_intro2: need p = 1 mod 5");
  auto k = sl2_constants(p);
  auto second = sl2_555_coset(p, Sl2Coset::SL);
  H4Group<SL2Group> G{SL2Group(p)};
  MixedQuadruple<H4Elem<Mat2>> m{G.make(k.B, second.a, 2), G.make(k.S, second.c, 2), G.coset_rep()};
  std::uint64_t P = static_cast<std::uint64_t>(p);
  detail::self_check(type_of(G, m.a, m.c) == TypeTriple{20, 30, 5 * P}, "mixed_intro2 orders");
  return m;
}

// ---------------------------------------------------------------- cached search certificates

// Structures on SL(2,p) and PSL(2,p), p = 7, 17, found by random_unmixed_table with the
// recorded seed on the table built by TableGroup::from_group; tests reproduce them.
struct SearchCertificate {
  const char* group;  // "sl2" or "psl2"
  std::int64_t p;
  std::uint64_t seed;
  std::uint64_t samples;
  const char* a1;
  const char* c1;
  const char* a2;
  const char* c2;
};

inline const std::vector<SearchCertificate>& intro1_certificates() {
  static const std::vector<SearchCertificate> table = {
      {"sl2", 7, 1, 160, "[[1,1],[1,2]]", "[[3,3],[3,1]]", "[[1,-1],[3,-2]]", "[[2,3],[2,0]]"},
      {"psl2", 7, 1, 54, "[[3,1],[3,-1]]", "[[2,1],[0,-3]]", "[[2,-2],[2,2]]", "[[0,2],[3,3]]"},
      {"sl2", 17, 1, 22, "[[-6,-4],[-3,-5]]", "[[7,7],[-7,-2]]", "[[-5,-6],[6,7]]", "[[5,-7],[6,2]]"},
      {"psl2", 17, 1, 2, "[[5,2],[-1,-7]]", "[[5,-6],[-8,3]]", "[[6,-8],[-5,4]]", "[[2,-7],[1,-3]]"},
  };
  return table;
}

inline const SearchCertificate& intro1_certificate(const std::string& group, std::int64_t p) {
  for (const auto& c : intro1_certificates())
    if (group == c.group && p == c.p) return c;
  throw NotFound("no cached certificate for " + group + " at p = " + std::to_string(p) + " (cached: 7, 17)");
}

template <class G>
UnmixedStructure<typename G::element_type> intro1_from_certificate(const G& grp, const SearchCertificate& c) {
  UnmixedStructure<typename G::element_type> v{{grp.parse(c.a1), grp.parse(c.c1)}, {grp.parse(c.a2), grp.parse(c.c2)}};
  detail::self_check(check_unmixed(grp, v).verdict == Verdict::pass, "cached certificate no longer verifies");
  return v;
}

inline UnmixedStructure<Mat2> sl2_intro1(std::int64_t p) {
  return intro1_from_certificate(SL2Group(p), intro1_certificate("sl2", p));
}

inline UnmixedStructure<PMat2> psl2_intro1(std::int64_t p) {
  return intro1_from_certificate(PSL2Group(p), intro1_certificate("psl2", p));
}

}  // namespace bv
