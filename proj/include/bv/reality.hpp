#pragma once

#include "bv/beauville.hpp"

#include <functional>
#include <numeric>

namespace bv {

// ---------------------------------------------------------------- sigma operations

template <class E>
struct PairHash {
  std::size_t operator()(const GeneratingPair<E>& p) const { return hash_mix(hash_value(p.a), hash_value(p.c)); }
};

template <class E>
using PairSet = std::unordered_set<GeneratingPair<E>, PairHash<E>>;

// sigma_0 .. sigma_5 on (a, c).
template <FiniteGroup G>
PairOf<G> apply_sigma(const G& grp, int i, const PairOf<G>& pr) {
  const auto& a = pr.a;
  const auto& c = pr.c;
  switch (i) {
    case 0: return {a, c};
    case 1: return {grp.mul(grp.inv(a), grp.inv(c)), a};
    case 2: return {c, grp.mul(grp.inv(a), grp.inv(c))};
    case 3: return {c, a};
    case 4: return {grp.mul(grp.inv(c), grp.inv(a)), c};
    case 5: return {a, grp.mul(grp.inv(c), grp.inv(a))};
    default: throw UsageError("sigma index must be in 0..5");
  }
}

// Inverse of sigma_i as a map on pairs.
template <FiniteGroup G>
PairOf<G> apply_sigma_inverse(const G& grp, int i, const PairOf<G>& pr) {
  const auto& x = pr.a;
  const auto& y = pr.c;
  auto w = grp.mul(grp.inv(x), grp.inv(y));
  switch (i) {
    case 0: return {x, y};
    case 1: return {y, w};
    case 2: return {w, x};
    case 3: return {y, x};
    case 4: return {w, y};
    case 5: return {x, w};
    default: throw UsageError("sigma index must be in 0..5");
  }
}

template <FiniteGroup G>
PairOf<G> iota(const G& grp, const PairOf<G>& pr) {
  return {grp.inv(pr.a), grp.inv(pr.c)};
}

template <FiniteGroup G>
UnmixedOf<G> iota(const G& grp, const UnmixedOf<G>& v) {
  return {iota(grp, v.p1), iota(grp, v.p2)};
}

template <FiniteGroup G>
MixedQuadruple<typename G::element_type> iota(const G& grp, const MixedQuadruple<typename G::element_type>& m) {
  return {grp.inv(m.a), grp.inv(m.c), m.g};
}

// Orbit of a pair under inner automorphisms and the sigma operations.
template <FiniteGroup G>
PairSet<typename G::element_type> it_orbit(const G& grp, const PairOf<G>& pr, std::size_t cap) {
  using E = typename G::element_type;
  auto gens = grp.generators();
  std::vector<E> gens_inv;
  for (const auto& g : gens) gens_inv.push_back(grp.inv(g));
  PairSet<E> seen{pr};
  std::deque<PairOf<G>> queue{pr};
  auto push = [&](const PairOf<G>& q) {
    if (seen.insert(q).second) {
      if (seen.size() > cap) throw CapacityExceeded("it_orbit overflow in " + grp.name(), cap);
      queue.push_back(q);
    }
  };
  while (!queue.empty()) {
    auto q = queue.front();
    queue.pop_front();
    push(apply_sigma(grp, 1, q));
    push(apply_sigma(grp, 3, q));
    for (std::size_t k = 0; k < gens.size(); ++k)
      push({grp.mul(grp.mul(gens[k], q.a), gens_inv[k]), grp.mul(grp.mul(gens[k], q.c), gens_inv[k])});
  }
  return seen;
}

// ---------------------------------------------------------------- automorphism backends

// An automorphism psi with psi(src) = dst. label identifies its class in Out(G);
// two solutions differ by an inner automorphism iff their labels agree.
template <class E>
struct AutMap {
  std::string label;
  std::string witness;
  std::function<E(const E&)> apply;
};

// Symmetric groups with n != 6: every automorphism is inner.
struct SymAut {
  using group_type = SymGroup;
  const SymGroup& grp;
  std::uint64_t cap = default_caps().centralizer;
  explicit SymAut(const SymGroup& g) : grp(g) {
    if (g.degree() == 6) throw UsageError("S6 has outer automorphisms; the sym backend does not cover n = 6");
  }
  std::string kind() const { return "inner-only"; }
  std::vector<AutMap<Perm>> solve(const GeneratingPair<Perm>& src, const GeneratingPair<Perm>& dst) const {
    auto r = conjugator_search(src.a, dst.a, src.c, dst.c, Ambient::sym, cap);
    if (r.solutions.empty()) return {};
    Perm g = r.solutions.front();
    Perm gi = g.inverse();
    return {{"inner", g.to_string(), [g, gi](const Perm& x) { return g * x * gi; }}};
  }
};

// Alternating groups with n >= 7: automorphisms are conjugations by S_n; the outer class is the parity.
struct AltAut {
  using group_type = AltGroup;
  const AltGroup& grp;
  std::uint64_t cap = default_caps().centralizer;
  explicit AltAut(const AltGroup& g) : grp(g) {
    if (g.degree() == 6) throw UsageError("A6 has exotic automorphisms; the alt backend does not cover n = 6");
  }
  std::string kind() const { return "sym-conjugation"; }
  std::vector<AutMap<Perm>> solve(const GeneratingPair<Perm>& src, const GeneratingPair<Perm>& dst) const {
    auto r = conjugator_search(src.a, dst.a, src.c, dst.c, Ambient::sym, cap);
    std::vector<AutMap<Perm>> out;
    bool have_even = false, have_odd = false;
    for (const auto& g : r.solutions) {
      bool even = parity(g) == Parity::even;
      if ((even && have_even) || (!even && have_odd)) continue;
      (even ? have_even : have_odd) = true;
      Perm gi = g.inverse();
      out.push_back({even ? "even" : "odd", g.to_string(), [g, gi](const Perm& x) { return g * x * gi; }});
    }
    return out;
  }
};

// SL(2,p): automorphisms are conjugations by GL(2,p); the outer class is the square class of det.
struct SL2Aut {
  using group_type = SL2Group;
  const SL2Group& grp;
  explicit SL2Aut(const SL2Group& g) : grp(g) {}
  std::string kind() const { return "slpm-conjugation"; }
  std::vector<AutMap<Mat2>> solve_lifted(const Mat2& a, const Mat2& aT, const Mat2& c, const Mat2& cT) const {
    std::int64_t p = grp.p();
    std::vector<AutMap<Mat2>> out;
    const std::pair<std::int64_t, const char*> classes[] = {{1, "det-square"}, {smallest_nonsquare(p), "det-nonsquare"}};
    for (auto [det, label] : classes) {
      if (auto X = solve_conjugation_det(p, a, aT, c, cT, det)) {
        Mat2 g = *X, gi = X->inverse();
        out.push_back({label, g.to_string(), [g, gi](const Mat2& x) { return g * x * gi; }});
      }
    }
    return out;
  }
  std::vector<AutMap<Mat2>> solve(const GeneratingPair<Mat2>& src, const GeneratingPair<Mat2>& dst) const {
    return solve_lifted(src.a, dst.a, src.c, dst.c);
  }
};

struct PSL2Aut {
  using group_type = PSL2Group;
  const PSL2Group& grp;
  explicit PSL2Aut(const PSL2Group& g) : grp(g) {}
  std::string kind() const { return "slpm-conjugation"; }
  std::vector<AutMap<PMat2>> solve(const GeneratingPair<PMat2>& src, const GeneratingPair<PMat2>& dst) const {
    SL2Group sl(grp.p());
    SL2Aut lift(sl);
    std::vector<AutMap<PMat2>> out;
    std::set<std::string> labels;
    for (int sa = 0; sa < 2; ++sa)
      for (int sc = 0; sc < 2; ++sc) {
        Mat2 aT = sa ? dst.a.m.negated() : dst.a.m;
        Mat2 cT = sc ? dst.c.m.negated() : dst.c.m;
        for (auto& m : lift.solve_lifted(src.a.m, aT, src.c.m, cT)) {
          if (!labels.insert(m.label).second) continue;
          auto f = m.apply;
          out.push_back({m.label, m.witness, [f](const PMat2& x) { return PMat2::from(f(x.m)); }});
        }
      }
    return out;
  }
};

// (Z/n)^2: Aut = GL(2, Z/n); no inner automorphisms, so the label is the matrix itself.
struct Ab2Aut {
  using group_type = Ab2Group;
  const Ab2Group& grp;
  explicit Ab2Aut(const Ab2Group& g) : grp(g) {}
  std::string kind() const { return "gl2-action"; }
  std::vector<AutMap<Vec2>> solve(const GeneratingPair<Vec2>& src, const GeneratingPair<Vec2>& dst) const {
    std::int64_t n = grp.n();
    std::int64_t det = mod(src.a.x * src.c.y - src.c.x * src.a.y, n);
    if (std::gcd(det, n) != 1) throw UsageError("ab2 automorphism solve needs a generating source pair");
    std::int64_t di = invmod(det, n);
    // inverse of the column matrix [a c]
    std::int64_t i00 = mod(src.c.y * di, n), i01 = mod(-src.c.x * di, n);
    std::int64_t i10 = mod(-src.a.y * di, n), i11 = mod(src.a.x * di, n);
    std::int64_t m00 = mod(dst.a.x * i00 + dst.c.x * i10, n), m01 = mod(dst.a.x * i01 + dst.c.x * i11, n);
    std::int64_t m10 = mod(dst.a.y * i00 + dst.c.y * i10, n), m11 = mod(dst.a.y * i01 + dst.c.y * i11, n);
    if (std::gcd(mod(m00 * m11 - m01 * m10, n), n) != 1) return {};
    std::string label = "[[" + std::to_string(m00) + "," + std::to_string(m01) + "],[" + std::to_string(m10) + "," +
                        std::to_string(m11) + "]]";
    return {{label, label, [n, m00, m01, m10, m11](const Vec2& u) {
               return Vec2{mod(m00 * u.x + m01 * u.y, n), mod(m10 * u.x + m11 * u.y, n)};
             }}};
  }
};

// Homomorphism from <src> extended along a spanning tree of the Cayley graph; nullopt unless it is
// a well-defined bijection of the whole table.
inline std::optional<std::vector<std::uint32_t>> table_extend(const TableGroup& T, const std::vector<Tid>& src,
                                                              const std::vector<Tid>& images) {
  const std::size_t n = T.size();
  std::vector<std::int64_t> phi(n, -1);
  phi[0] = 0;
  std::vector<std::uint32_t> order{0};
  for (std::size_t k = 0; k < order.size(); ++k) {
    Tid x{order[k]};
    for (std::size_t s = 0; s < src.size(); ++s) {
      Tid y = T.mul(x, src[s]);
      Tid img = T.mul(Tid{static_cast<std::uint32_t>(phi[x.v])}, images[s]);
      if (phi[y.v] < 0) {
        phi[y.v] = img.v;
        order.push_back(y.v);
      } else if (static_cast<std::uint32_t>(phi[y.v]) != img.v) {
        return std::nullopt;
      }
    }
  }
  if (order.size() != n) return std::nullopt;  // src does not generate
  std::vector<char> hit(n, 0);
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::uint32_t>(phi[i]);
    if (hit[out[i]]) return std::nullopt;
    hit[out[i]] = 1;
  }
  return out;
}

// Generic table backend: the label is the lexicographically least image of the group generators
// over all inner twists, which is constant on Out(G) classes.
struct TableAut {
  using group_type = TableGroup;
  const TableGroup& grp;
  explicit TableAut(const TableGroup& g) : grp(g) {}
  std::string kind() const { return "table-extension"; }

  std::string outer_label(const std::vector<std::uint32_t>& phi) const {
    auto gens = grp.generators();
    std::vector<std::uint32_t> best;
    for (std::size_t k = 0; k < grp.size(); ++k) {
      std::vector<std::uint32_t> cur;
      for (auto g : gens) cur.push_back(grp.conj(Tid{phi[g.v]}, grp.id(k)).v);
      if (best.empty() || cur < best) best = cur;
    }
    std::string s;
    for (auto v : best) s += (s.empty() ? "#" : ",#") + std::to_string(v);
    return s;
  }
  AutMap<Tid> to_map(std::vector<std::uint32_t> phi) const {
    std::string label = outer_label(phi);
    auto shared = std::make_shared<std::vector<std::uint32_t>>(std::move(phi));
    return {label, label, [shared](const Tid& x) { return Tid{(*shared)[x.v]}; }};
  }
  std::vector<AutMap<Tid>> solve(const GeneratingPair<Tid>& src, const GeneratingPair<Tid>& dst) const {
    auto phi = table_extend(grp, {src.a, src.c}, {dst.a, dst.c});
    if (!phi) return {};
    return {to_map(std::move(*phi))};
  }
};

// All automorphisms of a table group, as image vectors. Feasible for small orders only.
inline std::vector<std::vector<std::uint32_t>> table_automorphisms(const TableGroup& T, std::size_t cap = 200'000) {
  // a fixed generating pair, else fall back to the full generator list
  std::vector<Tid> src;
  for (std::size_t i = 0; i < T.size() && src.empty(); ++i)
    for (std::size_t j = i; j < T.size(); ++j)
      if (T.generates_fast(T.id(i), T.id(j))) {
        src = {T.id(i), T.id(j)};
        break;
      }
  if (src.empty()) src = T.generators();
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<Tid> img(src.size(), Tid{0});
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == src.size()) {
      if (auto phi = table_extend(T, src, img)) {
        out.push_back(std::move(*phi));
        if (out.size() > cap) throw CapacityExceeded("table automorphism enumeration", cap);
      }
      return;
    }
    for (std::size_t x = 0; x < T.size(); ++x) {
      if (T.order_of(T.id(x)) != T.order_of(src[k])) continue;
      img[k] = T.id(x);
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- case table

struct RealityCase {
  int i = 0;
  bool solvable = false;
  std::vector<std::string> labels;
  std::string witness;
};

// Images of (a, c) required of psi in case i, so that psi o sigma_i maps (a,c) to its inverse pair.
template <FiniteGroup G>
PairOf<G> lemma_rea_pattern(const G& grp, int i, const PairOf<G>& pr) {
  const auto& a = pr.a;
  const auto& c = pr.c;
  auto ai = grp.inv(a), ci = grp.inv(c), ac = grp.mul(a, c);
  switch (i) {
    case 0: return {ai, ci};
    case 1: return {ci, ac};
    case 2: return {ac, ai};
    case 3: return {ci, ai};
    case 4: return {ac, ci};
    case 5: return {ai, ac};
    default: throw UsageError("case index must be in 0..5");
  }
}

template <FiniteGroup G, class Backend>
std::array<RealityCase, 6> lemma_rea_cases(const G& grp, const PairOf<G>& pr, const Backend& aut) {
  std::array<RealityCase, 6> out;
  for (int i = 0; i < 6; ++i) {
    out[i].i = i;
    auto sols = aut.solve(pr, lemma_rea_pattern(grp, i, pr));
    out[i].solvable = !sols.empty();
    for (auto& s : sols) out[i].labels.push_back(s.label);
    if (!sols.empty()) out[i].witness = sols.front().witness;
  }
  return out;
}

// ---------------------------------------------------------------- verdicts

struct RealityVerdict {
  std::optional<bool> biholo_conjugate;
  std::optional<bool> real;
  std::optional<bool> strongly_real;
  std::string path;
  std::array<RealityCase, 6> cases1{};
  std::array<RealityCase, 6> cases2{};
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  // strongly_real => real => biholo_conjugate, for the decided fields.
  bool implications_hold() const {
    if (strongly_real == true && real == false) return false;
    if (real == true && biholo_conjugate == false) return false;
    return true;
  }
};

// psi_1 sigma_i and psi_2 sigma_j per slot, with tau^e exchanging the slots first, and psi_1, psi_2
// in the same outer class. Each psi_k is unique because its source pair generates G.
template <FiniteGroup G, class Backend>
RealityVerdict reality_unmixed(const G& grp, const UnmixedOf<G>& v, const Backend& aut) {
  RealityVerdict out;
  auto t1 = type_of(grp, v.p1.a, v.p1.c), t2 = type_of(grp, v.p2.a, v.p2.c);
  bool both_strict = classify(t1) == PairClass::strict && classify(t2) == PairClass::strict;
  bool distinct_sets = t1.order_set() != t2.order_set();
  out.path = both_strict && distinct_sets ? "cor-rea13" : "case-table";
  out.cases1 = lemma_rea_cases(grp, v.p1, aut);
  out.cases2 = lemma_rea_cases(grp, v.p2, aut);
  auto target1 = iota(grp, v.p1), target2 = iota(grp, v.p2);
  auto inv_v = iota(grp, v);

  bool biholo = false, real = false, strong = false;
  for (int e = 0; e < 2; ++e) {
    if (e == 1 && t1.sorted() != t2.sorted()) continue;
    const auto& src1 = e == 0 ? v.p1 : v.p2;
    const auto& src2 = e == 0 ? v.p2 : v.p1;
    std::vector<std::vector<AutMap<typename G::element_type>>> s1(6), s2(6);
    // psi(sigma_i(src)) = target  <=>  psi(src) = sigma_i^-1(target); solving on src keeps centralizers small
    for (int i = 0; i < 6; ++i) {
      s1[i] = aut.solve(src1, apply_sigma_inverse(grp, i, target1));
      s2[i] = aut.solve(src2, apply_sigma_inverse(grp, i, target2));
    }
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (const auto& f1 : s1[i])
          for (const auto& f2 : s2[j]) {
            if (f1.label != f2.label) continue;
            if (!biholo) out.witnesses.push_back("e=" + std::to_string(e) + " i=" + std::to_string(i) + " j=" +
                                                 std::to_string(j) + " psi1=" + f1.witness + " psi2=" + f2.witness);
            biholo = true;
            if (e == 0 && i == 0 && j == 0) strong = true;
            // rho applied to iota(v)
            const auto& x1 = e == 0 ? inv_v.p1 : inv_v.p2;
            const auto& x2 = e == 0 ? inv_v.p2 : inv_v.p1;
            auto y1 = apply_sigma(grp, i, x1);
            auto y2 = apply_sigma(grp, j, x2);
            PairOf<G> r1{f1.apply(y1.a), f1.apply(y1.c)}, r2{f2.apply(y2.a), f2.apply(y2.c)};
            if (r1 == v.p1 && r2 == v.p2) real = true;
          }
  }
  out.biholo_conjugate = biholo;
  out.real = real;
  out.strongly_real = strong;
  if (out.path == "cor-rea13" && biholo != real)
    out.notes.push_back("inconsistent: strict pairs with distinct order sets must have real == biholo_conjugate");
  return out;
}

// ---------------------------------------------------------------- mixed

template <FiniteGroup H>
std::vector<typename H::element_type> center_elements(const H& h, std::size_t cap = default_caps().closure) {
  using E = typename H::element_type;
  if constexpr (std::is_same_v<H, SL2Group>) {
    return {h.identity(), h.identity().negated()};
  } else if constexpr (std::is_same_v<H, PSL2Group> || std::is_same_v<H, SymGroup> || std::is_same_v<H, AltGroup>) {
    if constexpr (std::is_same_v<H, SymGroup> || std::is_same_v<H, AltGroup>)
      if (h.degree() <= 4) throw UsageError("center_elements: small permutation groups are not covered");
    return {h.identity()};
  } else {
    if (h.order() > bigint(cap)) throw Undecided("center_elements: group too large to enumerate");
    auto all = generated_subgroup(h, h.generators(), cap);
    std::vector<E> out;
    auto gens = h.generators();
    for (const auto& z : all) {
      bool central = true;
      for (const auto& g : gens)
        if (!(h.mul(z, g) == h.mul(g, z))) central = false;
      if (central) out.push_back(z);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
}

// H_[4] reduction: every automorphism preserves H x H x {0}, so psi(a) = a^-1, psi(c) = c^-1 reduces to
// two automorphisms of H, possibly exchanging factors, twisted by a central z and sharing an outer class.
template <FiniteGroup H, class Backend>
RealityVerdict reality_mixed(const H4Group<H>& grp, const MixedQuadruple<H4Elem<typename H::element_type>>& m,
                             const Backend& aut) {
  const H& h = grp.inner();
  using E = typename H::element_type;
  if (!grp.in_h2(m.a) || !grp.in_h2(m.c) || grp.in_h2(m.g))
    throw UsageError("reality_mixed: a, c must lie in H_[2] and g outside it");
  RealityVerdict out;
  out.path = "h4-reduction";
  auto t = type_of(grp, m.a, m.c);
  if (classify(t) != PairClass::strict) out.notes.push_back("pair is not strict; real is not derived from biholo");

  auto twist = [&](const E& x, std::uint8_t tt, const E& z) {
    E xi = h.inv(x);
    return tt == 2 ? h.mul(xi, h.inv(z)) : xi;
  };
  bool biholo = false;
  for (const auto& z : center_elements(h)) {
    GeneratingPair<E> want1{twist(m.a.x, m.a.t, z), twist(m.c.x, m.c.t, z)};
    GeneratingPair<E> want2{twist(m.a.y, m.a.t, z), twist(m.c.y, m.c.t, z)};
    GeneratingPair<E> first{m.a.x, m.c.x}, second{m.a.y, m.c.y};
    for (int swap = 0; swap < 2; ++swap) {
      auto alpha = aut.solve(swap ? second : first, want1);
      auto beta = aut.solve(swap ? first : second, want2);
      for (const auto& fa : alpha)
        for (const auto& fb : beta)
          if (fa.label == fb.label) {
            if (!biholo)
              out.witnesses.push_back("swap=" + std::to_string(swap) + " z=" + h.format(z, false) + " alpha=" +
                                      fa.witness + " beta=" + fb.witness);
            biholo = true;
          }
      if (alpha.empty() || beta.empty()) continue;
      if (!biholo) {
        std::string la, lb;
        for (auto& f : alpha) la += f.label + " ";
        for (auto& f : beta) lb += f.label + " ";
        out.notes.push_back("swap=" + std::to_string(swap) + " z=" + h.format(z, false) +
                            ": both factors solvable but outer classes differ (" + la + "vs " + lb + ")");
      }
    }
  }
  out.biholo_conjugate = biholo;
  if (classify(t) == PairClass::strict) out.real = biholo;
  out.strongly_real = false;
  out.notes.push_back("strongly real is defined for unmixed structures only");
  return out;
}

// Direct oracle on a table: psi(a) = a^-1, psi(c) = c^-1, psi(g) = z for some z outside G0.
// With preserve set, psi must also map that subset onto itself.
inline bool table_mixed_biholo(const TableGroup& T, const Bits& g0, Tid a, Tid c, Tid g,
                               const Bits* preserve = nullptr) {
  for (std::size_t z = 0; z < T.size(); ++z) {
    if (bits_test(g0, z)) continue;
    auto phi = table_extend(T, {a, c, g}, {T.inv(a), T.inv(c), T.id(z)});
    if (!phi) continue;
    if (preserve) {
      bool ok = true;
      for (auto x : bits_list(*preserve))
        if (!bits_test(*preserve, (*phi)[x])) ok = false;
      if (!ok) continue;
    }
    return true;
  }
  return false;
}

}  // namespace bv
