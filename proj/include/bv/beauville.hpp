#pragma once

#include "bv/constructions.hpp"

#include <optional>
#include <set>

namespace bv {

// ---------------------------------------------------------------- types

struct TypeTriple {
  std::uint64_t r = 1, s = 1, t = 1;
  // mu = mu_num / mu_den with mu_num = st + rt + rs, mu_den = rst
  std::uint64_t mu_num() const { return s * t + r * t + r * s; }
  std::uint64_t mu_den() const { return r * s * t; }
  double mu() const { return static_cast<double>(mu_num()) / static_cast<double>(mu_den()); }
  std::uint64_t nu() const { return r * s * t; }
  bool hyperbolic() const { return mu_num() < mu_den(); }
  std::array<std::uint64_t, 3> sorted() const {
    std::array<std::uint64_t, 3> v{r, s, t};
    std::sort(v.begin(), v.end());
    return v;
  }
  std::set<std::uint64_t> order_set() const { return {r, s, t}; }
  bool operator==(const TypeTriple&) const = default;
  std::string to_string() const {
    return "(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
  }
};

enum class PairClass { strict, critical, subcritical };

inline std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::strict: return "strict";
    case PairClass::critical: return "critical";
    default: return "subcritical";
  }
}

struct PairMetrics {
  TypeTriple type;
  bool normalized = false;  // ord(a) <= ord(b) <= ord(c)
  PairClass pair_class = PairClass::subcritical;
  bool hyperbolic = false;
};

inline PairClass classify(const TypeTriple& t) {
  if (t.r != t.s && t.s != t.t && t.r != t.t) return PairClass::strict;
  if (t.r == t.s && t.s == t.t) return PairClass::critical;
  return PairClass::subcritical;
}

template <FiniteGroup G>
TypeTriple type_of(const G& grp, const typename G::element_type& a, const typename G::element_type& c) {
  return {element_order(grp, a), element_order(grp, c), element_order(grp, grp.mul(a, c))};
}

template <FiniteGroup G>
PairMetrics pair_metrics(const G& grp, const typename G::element_type& a, const typename G::element_type& c) {
  PairMetrics m;
  m.type = type_of(grp, a, c);
  // ord(b) = ord(a^-1 c^-1) = ord(ca) = ord(ac)
  m.normalized = m.type.r <= m.type.t && m.type.t <= m.type.s;
  m.pair_class = classify(m.type);
  m.hyperbolic = m.type.hyperbolic();
  return m;
}

// 1 + (1 - mu)|G|/2; throws when the value is not an integer.
inline bigint genus_from_type(const TypeTriple& t, const bigint& group_order) {
  bigint num = (bigint(t.mu_den()) - bigint(t.mu_num())) * group_order;
  bigint den = 2 * bigint(t.mu_den());
  if (num % den != 0) throw Error("genus formula is not integral for type " + t.to_string());
  return 1 + num / den;
}

template <FiniteGroup G>
bigint genus(const G& grp, const typename G::element_type& a, const typename G::element_type& c) {
  return genus_from_type(type_of(grp, a, c), grp.order());
}

// ---------------------------------------------------------------- Sigma

enum class SigmaStrategy { exact, cycle_type, order_divisor };

// Conjugacy class of x under conjugation by the listed elements.
template <FiniteGroup G>
ElemSet<typename G::element_type> class_under(const G& grp, const typename G::element_type& x,
                                              const std::vector<typename G::element_type>& conj_gens,
                                              std::size_t cap) {
  using E = typename G::element_type;
  std::vector<E> inv;
  for (const auto& g : conj_gens) inv.push_back(grp.inv(g));
  ElemSet<E> seen{x};
  std::deque<E> queue{x};
  while (!queue.empty()) {
    E y = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < conj_gens.size(); ++i) {
      E z = grp.mul(grp.mul(conj_gens[i], y), inv[i]);
      if (seen.insert(z).second) {
        if (seen.size() > cap) throw CapacityExceeded("conjugacy class overflow in " + grp.name(), cap);
        queue.push_back(z);
      }
    }
  }
  return seen;
}

// Union of the classes of all powers of a, c and ac; conjugation by conj_gens
// (the generators of G by default, or of a subgroup for the mixed case).
template <FiniteGroup G>
ElemSet<typename G::element_type> sigma_exact(const G& grp, const typename G::element_type& a,
                                              const typename G::element_type& c,
                                              const std::vector<typename G::element_type>& conj_gens,
                                              const Caps& caps = default_caps()) {
  using E = typename G::element_type;
  ElemSet<E> out;
  for (const E& x : {a, c, grp.mul(a, c)}) {
    E y = grp.identity();
    std::uint64_t ord = element_order(grp, x);
    for (std::uint64_t k = 0; k < ord; ++k) {
      if (!out.count(y)) {
        auto cls = class_under(grp, y, conj_gens, caps.class_size);
        out.insert(cls.begin(), cls.end());
        if (out.size() > caps.class_size) throw CapacityExceeded("sigma set overflow in " + grp.name(), caps.class_size);
      }
      y = grp.mul(y, x);
    }
  }
  return out;
}

template <FiniteGroup G>
ElemSet<typename G::element_type> sigma_exact(const G& grp, const typename G::element_type& a,
                                              const typename G::element_type& c, const Caps& caps = default_caps()) {
  return sigma_exact(grp, a, c, grp.generators(), caps);
}

// Orders of all powers of a, c, ac.
template <FiniteGroup G>
std::set<std::uint64_t> sigma_orders(const G& grp, const typename G::element_type& a,
                                     const typename G::element_type& c) {
  std::set<std::uint64_t> out;
  for (const auto& x : {a, c, grp.mul(a, c)}) {
    std::uint64_t m = element_order(grp, x);
    for (std::uint64_t d = 1; d <= m; ++d)
      if (m % d == 0) out.insert(d);
  }
  return out;
}

// Cycle types of all powers of a, c, ac (permutation backends).
inline std::map<std::vector<std::uint16_t>, Perm> sigma_cycle_types(const Perm& a, const Perm& c) {
  std::map<std::vector<std::uint16_t>, Perm> out;
  for (const Perm& x : {a, c, a * c}) {
    Perm y(x.degree());
    std::uint64_t ord = x.order();
    for (std::uint64_t k = 0; k < ord; ++k) {
      out.emplace(y.cycle_type(), y);
      y = y * x;
    }
  }
  return out;
}

// Table backend: Sigma as a bitset.
inline Bits sigma_bits(const TableGroup& T, Tid a, Tid c) {
  Bits b = T.cyclic_closure(a);
  bits_or(b, T.cyclic_closure(c));
  bits_or(b, T.cyclic_closure(T.mul(a, c)));
  return b;
}

// ---------------------------------------------------------------- reports

enum class Verdict { pass, fail, undecided };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "undecided";
  }
}

struct ConditionResult {
  std::string id;
  std::optional<bool> ok;  // nullopt: undecided
  std::string strategy;
  std::string detail;
};

struct CheckReport {
  Verdict verdict = Verdict::undecided;
  std::vector<ConditionResult> conditions;
  std::optional<std::string> witness;
  std::vector<std::string> notes;

  const ConditionResult* find(const std::string& id) const {
    for (const auto& c : conditions)
      if (c.id == id) return &c;
    return nullptr;
  }
  void finalize() {
    bool any_fail = false, any_undecided = false;
    for (const auto& c : conditions) {
      if (!c.ok.has_value()) any_undecided = true;
      else if (!*c.ok) any_fail = true;
    }
    verdict = any_fail ? Verdict::fail : (any_undecided ? Verdict::undecided : Verdict::pass);
  }
};

template <class E>
struct UnmixedStructure {
  GeneratingPair<E> p1;
  GeneratingPair<E> p2;
  bool operator==(const UnmixedStructure&) const = default;
};

template <FiniteGroup G>
using UnmixedOf = UnmixedStructure<typename G::element_type>;

template <class E>
struct MixedQuadruple {
  E a;
  E c;
  E g;
};

struct CheckOptions {
  std::optional<SigmaStrategy> force;  // run exactly this Sigma strategy
  Caps caps = default_caps();
};

template <class G>
constexpr bool is_perm_backend = std::is_same_v<G, SymGroup> || std::is_same_v<G, AltGroup>;

namespace detail {

template <FiniteGroup G>
ConditionResult generation_condition(const G& grp, const typename G::element_type& a,
                                     const typename G::element_type& c, const std::string& id, const Caps& caps) {
  ConditionResult r{id, std::nullopt, "", ""};
  try {
    auto g = generates_with(grp, a, c, caps);
    r.ok = g.value;
    r.strategy = g.strategy;
  } catch (const Undecided& e) {
    r.strategy = "closure";
    r.detail = e.what();
  } catch (const CapacityExceeded& e) {
    r.strategy = "closure";
    r.detail = e.what();
  }
  return r;
}

template <class E>
std::optional<E> min_nonidentity(const ElemSet<E>& s1, const ElemSet<E>& s2, const E& id) {
  std::optional<E> best;
  const auto& small = s1.size() <= s2.size() ? s1 : s2;
  const auto& large = s1.size() <= s2.size() ? s2 : s1;
  for (const auto& x : small)
    if (!(x == id) && large.count(x) && (!best || x < *best)) best = x;
  return best;
}

}  // namespace detail

// Sigma(a1,c1) n Sigma(a2,c2) = {1}: returns ok/undecided, strategy, and a witness on failure.
template <FiniteGroup G>
ConditionResult sigma_disjoint(const G& grp, const GeneratingPair<typename G::element_type>& p1,
                               const GeneratingPair<typename G::element_type>& p2, const CheckOptions& opts,
                               std::optional<std::string>* witness) {
  using E = typename G::element_type;
  ConditionResult r{"sigma-disjoint", std::nullopt, "", ""};
  auto want = [&](SigmaStrategy s) { return !opts.force || *opts.force == s; };

  if (want(SigmaStrategy::order_divisor)) {
    auto t1 = type_of(grp, p1.a, p1.c), t2 = type_of(grp, p2.a, p2.c);
    if (std::gcd(t1.nu(), t2.nu()) == 1) {
      r.ok = true;
      r.strategy = "coprime-nu";
      r.detail = "gcd(" + std::to_string(t1.nu()) + "," + std::to_string(t2.nu()) + ") = 1";
      return r;
    }
    auto o1 = sigma_orders(grp, p1.a, p1.c), o2 = sigma_orders(grp, p2.a, p2.c);
    std::vector<std::uint64_t> common;
    std::set_intersection(o1.begin(), o1.end(), o2.begin(), o2.end(), std::back_inserter(common));
    if (common.size() == 1) {
      r.ok = true;
      r.strategy = "order-divisor";
      r.detail = "only order 1 is shared";
      return r;
    }
    if (opts.force) {
      r.strategy = "order-divisor";
      r.detail = "inconclusive: shared orders";
      return r;
    }
  }

  if constexpr (is_perm_backend<G>) {
    if (want(SigmaStrategy::cycle_type)) {
      auto c1 = sigma_cycle_types(p1.a, p1.c), c2 = sigma_cycle_types(p2.a, p2.c);
      std::optional<Perm> hit;
      for (const auto& [ct, rep] : c1) {
        if (ct.size() == grp.degree()) continue;  // identity
        if (c2.count(ct)) {
          hit = rep;
          break;
        }
      }
      if (!hit) {
        r.ok = true;
        r.strategy = "cycle-type";
        r.detail = "no shared nontrivial cycle type";
        return r;
      }
      if (!grp.is_alternating()) {
        r.ok = false;
        r.strategy = "cycle-type";
        r.detail = "shared cycle type";
        if (witness) *witness = grp.format(*hit, false);
        return r;
      }
      if (opts.force) {
        r.strategy = "cycle-type";
        r.detail = "inconclusive: alternating classes may split";
        return r;
      }
    }
  }

  if (want(SigmaStrategy::exact)) {
    r.strategy = "exact";
    try {
      if constexpr (std::is_same_v<G, TableGroup>) {
        Bits s1 = sigma_bits(grp, p1.a, p1.c), s2 = sigma_bits(grp, p2.a, p2.c);
        for (std::size_t k = 0; k < s1.size(); ++k) s1[k] &= s2[k];
        auto common = bits_list(s1);
        r.ok = common.size() == 1;
        if (!*r.ok && witness) *witness = grp.format(grp.id(common[1]));
      } else {
        auto s1 = sigma_exact(grp, p1.a, p1.c, opts.caps);
        auto s2 = sigma_exact(grp, p2.a, p2.c, opts.caps);
        auto w = detail::min_nonidentity<E>(s1, s2, grp.identity());
        r.ok = !w.has_value();
        r.detail = "|Sigma1| = " + std::to_string(s1.size()) + ", |Sigma2| = " + std::to_string(s2.size());
        if (w && witness) *witness = grp.format(*w, false);
      }
    } catch (const CapacityExceeded& e) {
      r.ok.reset();
      r.detail = e.what();
    }
    return r;
  }
  r.detail = "no strategy was conclusive";
  return r;
}

template <FiniteGroup G>
CheckReport check_unmixed(const G& grp, const UnmixedOf<G>& v, const CheckOptions& opts = {}) {
  for (const auto& x : {v.p1.a, v.p1.c, v.p2.a, v.p2.c}) require_element(grp, x);
  CheckReport rep;
  rep.conditions.push_back(detail::generation_condition(grp, v.p1.a, v.p1.c, "generates-1", opts.caps));
  rep.conditions.push_back(detail::generation_condition(grp, v.p2.a, v.p2.c, "generates-2", opts.caps));
  std::optional<std::string> witness;
  rep.conditions.push_back(sigma_disjoint(grp, v.p1, v.p2, opts, &witness));
  rep.witness = witness;
  rep.finalize();
  auto m1 = pair_metrics(grp, v.p1.a, v.p1.c), m2 = pair_metrics(grp, v.p2.a, v.p2.c);
  rep.notes.push_back("type-1 " + m1.type.to_string() + " " + to_string(m1.pair_class));
  rep.notes.push_back("type-2 " + m2.type.to_string() + " " + to_string(m2.pair_class));
  if (rep.verdict == Verdict::pass && (!m1.hyperbolic || !m2.hyperbolic))
    rep.notes.push_back("inconsistent: a passing structure must have mu < 1 for both pairs");
  return rep;
}

// ---------------------------------------------------------------- mixed

template <class G>
struct is_h4 : std::false_type {};
template <class H>
struct is_h4<H4Group<H>> : std::true_type {};

template <class H>
bool is_perfect_group(const H& h) {
  if constexpr (std::is_same_v<H, SL2Group>) return h.p() >= 5;
  else if constexpr (std::is_same_v<H, AltGroup>) return h.degree() >= 5;
  else return false;
}

// Hypotheses 1-4 of the H_[4] criterion, checked inside H.
template <FiniteGroup H>
CheckReport check_mixed_vz3(const H& h, const typename H::element_type& a1, const typename H::element_type& c1,
                            const typename H::element_type& a2, const typename H::element_type& c2, bool perfect,
                            const Caps& caps = default_caps()) {
  for (const auto& x : {a1, c1, a2, c2}) require_element(h, x);
  CheckReport rep;
  auto t1 = type_of(h, a1, c1), t2 = type_of(h, a2, c2);
  rep.conditions.push_back({"even-orders", t1.r % 2 == 0 && t1.s % 2 == 0, "orders",
                            "ord(a1) = " + std::to_string(t1.r) + ", ord(c1) = " + std::to_string(t1.s)});
  if (perfect) {
    if (!is_perfect_group(h)) throw UsageError("vz3: perfect variant requested for a group not known to be perfect");
    auto r = detail::generation_condition(h, a1, c1, "generates-first", caps);
    rep.conditions.push_back(r);
  } else {
    ConditionResult r{"squares-generate", std::nullopt, "closure", ""};
    try {
      if (h.order() > bigint(caps.closure)) throw Undecided("|H| exceeds closure cap");
      auto sub = generated_subgroup(h, {h.mul(a1, a1), h.mul(a1, c1), h.mul(c1, c1)}, caps.closure);
      r.ok = bigint(sub.size()) == h.order();
    } catch (const Error& e) {
      r.detail = e.what();
    }
    rep.conditions.push_back(r);
  }
  rep.conditions.push_back(detail::generation_condition(h, a2, c2, "generates-second", caps));
  rep.conditions.push_back({"coprime-nu", std::gcd(t1.nu(), t2.nu()) == 1, "gcd",
                            "nu1 = " + std::to_string(t1.nu()) + ", nu2 = " + std::to_string(t2.nu())});
  rep.finalize();
  return rep;
}

struct MixedOptions {
  bool allow_vz3 = true;
  Caps caps = default_caps();
};

// Conditions 1-4 for (G0; a, c; g), G0 given by a membership predicate.
// Sigma is taken under G0-conjugation.
template <FiniteGroup G, class InG0>
CheckReport check_mixed(const G& grp, InG0&& in_g0, const MixedQuadruple<typename G::element_type>& m,
                        const MixedOptions& opts = {}) {
  using E = typename G::element_type;
  for (const auto& x : {m.a, m.c, m.g}) require_element(grp, x);
  if (in_g0(m.g)) throw UsageError("mixed quadruple: g must lie outside G0");
  if (!in_g0(m.a) || !in_g0(m.c)) throw UsageError("mixed quadruple: a and c must lie in G0");
  CheckReport rep;

  if (grp.mul(m.a, m.c) == grp.mul(m.c, m.a)) {
    rep.conditions.push_back({"nonabelian-G0", false, "theorem",
                              "a and c commute, so G0 = <a,c> is abelian; abelian G0 admits no mixed structure"});
    rep.finalize();
    return rep;
  }

  if constexpr (is_h4<G>::value) {
    if (opts.allow_vz3 && m.a.t == 2 && m.c.t == 2) {
      const auto& h = grp.inner();
      auto vz = check_mixed_vz3(h, m.a.x, m.c.x, m.a.y, m.c.y, is_perfect_group(h), opts.caps);
      if (vz.verdict == Verdict::pass) {
        for (auto c : vz.conditions) {
          c.id = "vz3-" + c.id;
          rep.conditions.push_back(c);
        }
        rep.notes.push_back("conditions 1-4 certified by the H_[4] criterion on components");
        rep.finalize();
        return rep;
      }
      rep.notes.push_back("H_[4] criterion inconclusive; falling back to direct checks");
    }
  }

  bigint half = grp.order() / 2;
  ConditionResult c1{"generates-G0", std::nullopt, "closure", ""};
  ConditionResult c3{"squares-avoid-sigma", std::nullopt, "brute-force", ""};
  ConditionResult c4{"sigma-disjoint-conjugate", std::nullopt, "exact", ""};
  c1.detail = "";
  rep.conditions.push_back({"g-outside-G0", true, "membership", ""});
  try {
    if (half > bigint(opts.caps.cond3)) throw Undecided("|G0| exceeds the condition-3 cap");
    auto g0 = generated_subgroup(grp, {m.a, m.c}, opts.caps.cond3);
    c1.ok = bigint(g0.size()) == half;
    if (!*c1.ok) c1.detail = "|<a,c>| = " + std::to_string(g0.size());
    std::vector<E> conj{m.a, m.c};
    auto sig = sigma_exact(grp, m.a, m.c, conj, opts.caps);
    std::optional<E> bad;
    for (const auto& gam : g0) {
      E x = grp.mul(m.g, gam);
      E sq = grp.mul(x, x);
      if (sig.count(sq) && (!bad || gam < *bad)) bad = gam;
    }
    c3.ok = !bad.has_value();
    if (bad) {
      c3.detail = "(g gamma)^2 lies in Sigma for gamma = " + grp.format(*bad, false);
      if (!rep.witness) rep.witness = grp.format(*bad, false);
    }
    auto sig2 = sigma_exact(grp, conjugate(grp, m.a, m.g), conjugate(grp, m.c, m.g), conj, opts.caps);
    auto w = detail::min_nonidentity<E>(sig, sig2, grp.identity());
    c4.ok = !w.has_value();
    if (w) {
      c4.detail = "common element";
      if (!rep.witness) rep.witness = grp.format(*w, false);
    }
  } catch (const Undecided& e) {
    c3.detail = e.what();
  } catch (const CapacityExceeded& e) {
    c3.detail = e.what();
  }
  rep.conditions.push_back(c1);
  rep.conditions.push_back(c3);
  rep.conditions.push_back(c4);
  rep.finalize();
  return rep;
}

template <FiniteGroup H>
CheckReport check_mixed(const H4Group<H>& grp, const MixedQuadruple<typename H4Group<H>::element_type>& m,
                        const MixedOptions& opts = {}) {
  return check_mixed(grp, [&](const auto& x) { return grp.in_h2(x); }, m, opts);
}

}  // namespace bv
