#pragma once

#include "bv/core.hpp"

#include <concepts>
#include <deque>
#include <optional>
#include <unordered_set>

namespace bv {

// Elements expose hash_value(e) through ADL.
template <class E>
struct ElemHash {
  std::size_t operator()(const E& e) const { return hash_value(e); }
};

template <class E>
using ElemSet = std::unordered_set<E, ElemHash<E>>;

template <class G>
concept FiniteGroup = requires(const G& g, const typename G::element_type& x) {
  typename G::element_type;
  { g.identity() } -> std::convertible_to<typename G::element_type>;
  { g.mul(x, x) } -> std::convertible_to<typename G::element_type>;
  { g.inv(x) } -> std::convertible_to<typename G::element_type>;
  { g.generators() } -> std::convertible_to<std::vector<typename G::element_type>>;
  { g.order() } -> std::convertible_to<bigint>;
  { g.contains(x) } -> std::convertible_to<bool>;
  { g.name() } -> std::convertible_to<std::string>;
  { hash_value(x) } -> std::convertible_to<std::size_t>;
};

template <class E>
struct GeneratingPair {
  E a;
  E c;
  bool operator==(const GeneratingPair&) const = default;
};

template <FiniteGroup G>
using PairOf = GeneratingPair<typename G::element_type>;

template <FiniteGroup G>
void require_element(const G& grp, const typename G::element_type& x) {
  if (!grp.contains(x)) throw MalformedElement("element not valid in " + grp.name());
}

template <FiniteGroup G>
typename G::element_type power(const G& grp, const typename G::element_type& x, std::int64_t k) {
  using E = typename G::element_type;
  E base = k < 0 ? grp.inv(x) : x;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  E result = grp.identity();
  while (e > 0) {
    if (e & 1) result = grp.mul(result, base);
    base = grp.mul(base, base);
    e >>= 1;
  }
  return result;
}

template <class G>
concept HasOrderOf = FiniteGroup<G> && requires(const G& g, const typename G::element_type& x) {
  { g.order_of(x) } -> std::convertible_to<std::uint64_t>;
};

// Smallest k >= 1 with x^k = 1. Backends with a closed form provide order_of().
template <FiniteGroup G>
std::uint64_t element_order(const G& grp, const typename G::element_type& x) {
  require_element(grp, x);
  if constexpr (HasOrderOf<G>) {
    return grp.order_of(x);
  } else {
    bigint n = grp.order();
    std::uint64_t bound = n > bigint(100'000'000) ? 100'000'000ULL : static_cast<std::uint64_t>(n);
    auto id = grp.identity();
    auto y = x;
    for (std::uint64_t k = 1; k <= bound; ++k) {
      if (y == id) return k;
      y = grp.mul(y, x);
    }
    throw Undecided("element_order: iteration bound exceeded in " + grp.name());
  }
}

template <FiniteGroup G>
typename G::element_type conjugate(const G& grp, const typename G::element_type& g,
                                   const typename G::element_type& h) {
  require_element(grp, g);
  require_element(grp, h);
  return grp.mul(grp.mul(h, g), grp.inv(h));
}

template <FiniteGroup G>
typename G::element_type pair_b(const G& grp, const PairOf<G>& pr) {
  return grp.mul(grp.inv(pr.a), grp.inv(pr.c));
}

// BFS closure; throws CapacityExceeded past cap.
template <FiniteGroup G>
ElemSet<typename G::element_type> generated_subgroup(const G& grp,
                                                     const std::vector<typename G::element_type>& gens,
                                                     std::size_t cap) {
  using E = typename G::element_type;
  for (const auto& g : gens) require_element(grp, g);
  ElemSet<E> seen;
  std::deque<E> queue;
  E id = grp.identity();
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    E x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      E y = grp.mul(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw CapacityExceeded("generated_subgroup overflow in " + grp.name(), cap);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

template <class G>
concept HasFastGenerates = FiniteGroup<G> && requires(const G& g, const typename G::element_type& x) {
  { g.generates_fast(x, x) } -> std::convertible_to<bool>;
};

struct GenerationResult {
  bool value;
  std::string strategy;
};

// true iff <a,c> = G. Never guesses: closure beyond cap is reported as Undecided.
template <FiniteGroup G>
GenerationResult generates_with(const G& grp, const typename G::element_type& a,
                                const typename G::element_type& c, const Caps& caps = default_caps()) {
  require_element(grp, a);
  require_element(grp, c);
  if constexpr (HasFastGenerates<G>) {
    return {grp.generates_fast(a, c), grp.generation_strategy()};
  } else {
    bigint n = grp.order();
    if (n > bigint(caps.closure)) throw Undecided("generates: |" + grp.name() + "| exceeds closure cap");
    auto closure = generated_subgroup(grp, {a, c}, caps.closure);
    return {bigint(closure.size()) == n, "closure"};
  }
}

template <FiniteGroup G>
bool generates(const G& grp, const typename G::element_type& a, const typename G::element_type& c,
               const Caps& caps = default_caps()) {
  return generates_with(grp, a, c, caps).value;
}

// Orbit of x under conjugation by the generators.
template <FiniteGroup G>
ElemSet<typename G::element_type> conjugacy_class(const G& grp, const typename G::element_type& x,
                                                  std::size_t cap) {
  using E = typename G::element_type;
  require_element(grp, x);
  auto gens = grp.generators();
  std::vector<E> gen_inv;
  for (const auto& g : gens) gen_inv.push_back(grp.inv(g));
  ElemSet<E> seen{x};
  std::deque<E> queue{x};
  while (!queue.empty()) {
    E y = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      E z = grp.mul(grp.mul(gens[i], y), gen_inv[i]);
      if (seen.insert(z).second) {
        if (seen.size() > cap) throw CapacityExceeded("conjugacy_class overflow in " + grp.name(), cap);
        queue.push_back(z);
      }
    }
  }
  return seen;
}

template <FiniteGroup G>
std::vector<typename G::element_type> powers(const G& grp, const typename G::element_type& x) {
  std::vector<typename G::element_type> out;
  auto id = grp.identity();
  auto y = x;
  out.push_back(id);
  while (!(y == id)) {
    out.push_back(y);
    y = grp.mul(y, x);
  }
  return out;
}

}  // namespace bv
