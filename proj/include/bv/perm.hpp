#pragma once

#include "bv/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace bv {

// Permutation of {0..n-1}; printed 1-based unless asked otherwise.
// Composition acts from the left: (p*q)(x) = p(q(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t n) : img_(n) {
    for (std::size_t i = 0; i < n; ++i) img_[i] = static_cast<std::uint16_t>(i);
  }
  explicit Perm(std::vector<std::uint16_t> images) : img_(std::move(images)) {
    std::vector<bool> hit(img_.size(), false);
    for (auto v : img_) {
      if (v >= img_.size() || hit[v]) throw MalformedElement("image table is not a bijection");
      hit[v] = true;
    }
  }

  std::size_t degree() const { return img_.size(); }
  std::uint16_t operator()(std::size_t i) const { return img_[i]; }
  const std::vector<std::uint16_t>& images() const { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Perm operator*(const Perm& q) const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[q.img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint16_t>(i);
    return r;
  }

  // Disjoint cycles of length >= 2, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<std::uint16_t>> cycles(bool with_fixed = false) const {
    std::vector<std::vector<std::uint16_t>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<std::uint16_t> cyc;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        cyc.push_back(static_cast<std::uint16_t>(j));
        j = img_[j];
      }
      if (cyc.size() > 1 || with_fixed) out.push_back(std::move(cyc));
    }
    return out;
  }

  // Sorted cycle lengths including fixed points.
  std::vector<std::uint16_t> cycle_type() const {
    std::vector<std::uint16_t> t;
    for (auto& c : cycles(true)) t.push_back(static_cast<std::uint16_t>(c.size()));
    std::sort(t.begin(), t.end());
    return t;
  }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (auto& c : cycles()) o = lcm_u(o, c.size());
    return o;
  }

  std::string to_string(bool zero_based = false) const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (auto& c : cs) {
      s += "(";
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(c[k] + (zero_based ? 0 : 1));
      }
      s += ")";
    }
    return s;
  }

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  friend std::size_t hash_value(const Perm& p) {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p.img_) h = (h ^ v) * 1099511628211ULL;
    return h;
  }

 private:
  std::vector<std::uint16_t> img_;
};

enum class Parity { even, odd };

inline Parity parity(const Perm& p) {
  std::size_t transpositions = 0;
  for (auto& c : p.cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

// Product of cycles as maps applied from the left: "(1,2)(1,3)" = (1,2) after (1,3).
inline Perm cycles_to_perm(const std::vector<std::vector<int>>& cycles, std::size_t n, bool zero_based = false) {
  Perm result(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<std::uint16_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>(i);
    const auto& cyc = *it;
    std::vector<bool> used(n, false);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k] - (zero_based ? 0 : 1);
      int to = cyc[(k + 1) % cyc.size()] - (zero_based ? 0 : 1);
      if (from < 0 || static_cast<std::size_t>(from) >= n || to < 0 || static_cast<std::size_t>(to) >= n)
        throw MalformedElement("cycle entry out of range 1.." + std::to_string(n));
      if (used[from]) throw MalformedElement("point repeated inside one cycle");
      used[from] = true;
      img[from] = static_cast<std::uint16_t>(to);
    }
    result = Perm(std::move(img)) * result;
  }
  return result;
}

// Grammar: perm := cycle+ | "()" ; cycle := "(" int ("," int)+ ")" ; whitespace ignored.
inline Perm parse_cycles(const std::string& text, std::size_t n, bool zero_based = false) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "()") return Perm(n);
  if (s.empty()) throw MalformedElement("empty permutation literal");
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw MalformedElement("expected '(' at position " + std::to_string(i) + " in '" + text + "'");
    ++i;
    std::vector<int> cyc;
    while (true) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw MalformedElement("expected integer in '" + text + "'");
      cyc.push_back(std::stoi(s.substr(i, j - i)));
      i = j;
      if (i >= s.size()) throw MalformedElement("unterminated cycle in '" + text + "'");
      if (s[i] == ',') {
        ++i;
        continue;
      }
      if (s[i] == ')') {
        ++i;
        break;
      }
      throw MalformedElement("unexpected character '" + std::string(1, s[i]) + "' in '" + text + "'");
    }
    if (cyc.size() < 2) throw MalformedElement("cycle needs at least two entries in '" + text + "'");
    cycles.push_back(std::move(cyc));
  }
  return cycles_to_perm(cycles, n, zero_based);
}

// ---- stabilizer chain (deterministic Schreier-Sims) ----

class StabChain {
 public:
  explicit StabChain(const std::vector<Perm>& gens) {
    if (gens.empty()) return;
    n_ = gens.front().degree();
    for (const auto& g : gens) {
      if (g.degree() != n_) throw UsageError("bsgs: generators of different degree");
      if (!g.is_identity()) strong_.push_back(g);
    }
    build();
  }

  bigint order() const {
    bigint r = 1;
    for (const auto& lvl : levels_) r *= lvl.orbit.size();
    return r;
  }

  const std::vector<std::uint16_t>& base() const { return base_; }

  bool contains(const Perm& g) const {
    if (levels_.empty()) return g.is_identity();
    auto [h, depth] = sift(g);
    return depth == levels_.size() && h.is_identity();
  }

 private:
  struct Level {
    std::vector<Perm> gens;
    std::vector<std::uint16_t> orbit;
    std::vector<int> where;  // point -> index in transversal, -1 if absent
    std::vector<Perm> transversal;
  };

  std::size_t n_ = 0;
  std::vector<Perm> strong_;
  std::vector<std::uint16_t> base_;
  std::vector<Level> levels_;

  static std::uint16_t first_moved(const Perm& g) {
    for (std::size_t i = 0; i < g.degree(); ++i)
      if (g(i) != i) return static_cast<std::uint16_t>(i);
    return 0;
  }

  void compute_orbit(std::size_t i) {
    Level& L = levels_[i];
    std::uint16_t b = base_[i];
    L.orbit.assign(1, b);
    L.where.assign(n_, -1);
    L.transversal.assign(1, Perm(n_));
    L.where[b] = 0;
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
      std::uint16_t pt = L.orbit[k];
      for (const auto& s : L.gens) {
        std::uint16_t img = s(pt);
        if (L.where[img] < 0) {
          L.where[img] = static_cast<int>(L.orbit.size());
          L.orbit.push_back(img);
          L.transversal.push_back(s * L.transversal[k]);
        }
      }
    }
  }

  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from = 0) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      std::uint16_t b = g(base_[i]);
      int w = levels_[i].where[b];
      if (w < 0) return {g, i};
      g = levels_[i].transversal[w].inverse() * g;
    }
    return {g, levels_.size()};
  }

  bool fixes_base_prefix(const Perm& g, std::size_t len) const {
    for (std::size_t j = 0; j < len; ++j)
      if (g(base_[j]) != base_[j]) return false;
    return true;
  }

  void add_base_point_for(const Perm& g) {
    base_.push_back(first_moved(g));
    levels_.emplace_back();
  }

  void build() {
    for (const auto& s : strong_)
      if (fixes_base_prefix(s, base_.size())) add_base_point_for(s);
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      for (const auto& s : strong_)
        if (fixes_base_prefix(s, i)) levels_[i].gens.push_back(s);
      compute_orbit(i);
    }
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool restarted = false;
      Level& L = levels_[i];
      for (std::size_t k = 0; !restarted && k < L.orbit.size(); ++k) {
        for (std::size_t si = 0; !restarted && si < L.gens.size(); ++si) {
          const Perm s = L.gens[si];
          std::uint16_t img = s(L.orbit[k]);
          Perm sch = L.transversal[L.where[img]].inverse() * s * L.transversal[k];
          auto [h, depth] = sift(sch, static_cast<std::size_t>(i) + 1);
          bool extend = depth < levels_.size() || !h.is_identity();
          if (!extend) continue;
          if (depth == levels_.size()) add_base_point_for(h);
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= depth; ++l) {
            levels_[l].gens.push_back(h);
            compute_orbit(l);
          }
          i = static_cast<std::ptrdiff_t>(depth);
          restarted = true;
        }
      }
      if (!restarted) --i;
    }
  }
};

inline bigint bsgs_order(const std::vector<Perm>& gens) { return StabChain(gens).order(); }

// ---- symmetric / alternating groups ----

class SymGroup {
 public:
  using element_type = Perm;
  explicit SymGroup(std::size_t n) : n_(n) {
    if (n < 1) throw UsageError("sym: degree must be >= 1");
  }
  std::size_t degree() const { return n_; }
  Perm identity() const { return Perm(n_); }
  Perm mul(const Perm& x, const Perm& y) const { return x * y; }
  Perm inv(const Perm& x) const { return x.inverse(); }
  std::vector<Perm> generators() const {
    if (n_ == 1) return {Perm(1)};
    std::vector<int> full(n_);
    for (std::size_t i = 0; i < n_; ++i) full[i] = static_cast<int>(i) + 1;
    return {cycles_to_perm({{1, 2}}, n_), cycles_to_perm({full}, n_)};
  }
  bigint order() const { return factorial(static_cast<unsigned>(n_)); }
  bool contains(const Perm& x) const { return x.degree() == n_; }
  std::string name() const { return "S" + std::to_string(n_); }
  std::uint64_t order_of(const Perm& x) const { return x.order(); }
  bool generates_fast(const Perm& a, const Perm& c) const { return bsgs_order({a, c}) == order(); }
  std::string generation_strategy() const { return "bsgs"; }
  bool is_alternating() const { return false; }
  Perm parse(const std::string& s, bool zero_based = false) const { return parse_cycles(s, n_, zero_based); }
  std::string format(const Perm& x, bool zero_based = false) const { return x.to_string(zero_based); }

 private:
  std::size_t n_;
};

class AltGroup {
 public:
  using element_type = Perm;
  explicit AltGroup(std::size_t n) : n_(n) {
    if (n < 1) throw UsageError("alt: degree must be >= 1");
  }
  std::size_t degree() const { return n_; }
  Perm identity() const { return Perm(n_); }
  Perm mul(const Perm& x, const Perm& y) const { return x * y; }
  Perm inv(const Perm& x) const { return x.inverse(); }
  std::vector<Perm> generators() const {
    if (n_ < 3) return {Perm(n_)};
    std::vector<int> odd_cycle;
    for (std::size_t i = (n_ % 2 == 1 ? 1 : 2); i <= n_; ++i) odd_cycle.push_back(static_cast<int>(i));
    if (odd_cycle.size() < 2) return {cycles_to_perm({{1, 2, 3}}, n_)};
    return {cycles_to_perm({{1, 2, 3}}, n_), cycles_to_perm({odd_cycle}, n_)};
  }
  bigint order() const { return n_ < 2 ? bigint(1) : factorial(static_cast<unsigned>(n_)) / 2; }
  bool contains(const Perm& x) const { return x.degree() == n_ && parity(x) == Parity::even; }
  std::string name() const { return "A" + std::to_string(n_); }
  std::uint64_t order_of(const Perm& x) const { return x.order(); }
  bool generates_fast(const Perm& a, const Perm& c) const { return bsgs_order({a, c}) == order(); }
  std::string generation_strategy() const { return "bsgs"; }
  bool is_alternating() const { return true; }
  Perm parse(const std::string& s, bool zero_based = false) const {
    Perm p = parse_cycles(s, n_, zero_based);
    if (parity(p) != Parity::even) throw MalformedElement("odd permutation is not in " + name());
    return p;
  }
  std::string format(const Perm& x, bool zero_based = false) const { return x.to_string(zero_based); }

 private:
  std::size_t n_;
};

// ---- conjugator search ----

enum class Ambient { sym, alt };

struct ConjugatorResult {
  enum class Status { ok, degenerate } status = Status::ok;
  std::vector<Perm> solutions;  // sorted
  std::uint64_t centralizer_size = 0;
};

namespace detail {

// Cycles with fixed points, grouped: lengths ascending, ties by smallest point.
inline std::vector<std::vector<std::uint16_t>> sorted_cycles(const Perm& x) {
  auto cs = x.cycles(true);
  std::stable_sort(cs.begin(), cs.end(), [](const auto& u, const auto& v) { return u.size() < v.size(); });
  return cs;
}

inline std::uint64_t centralizer_size(const Perm& x, std::uint64_t cap) {
  std::map<std::size_t, std::uint64_t> mult;
  for (auto& c : x.cycles(true)) ++mult[c.size()];
  std::uint64_t size = 1;
  for (auto [len, m] : mult) {
    for (std::uint64_t k = 0; k < m; ++k) {
      if (size > cap / len) return cap + 1;
      size *= len;
    }
    for (std::uint64_t k = 2; k <= m; ++k) {
      if (size > cap / k) return cap + 1;
      size *= k;
    }
  }
  return size;
}

}  // namespace detail

// All gamma in the ambient group with gamma a gamma^-1 = aT and gamma c gamma^-1 = cT.
// Solutions of the first equation form gamma0 * C(x); C(x) is enumerated as cyclic shifts
// per cycle times permutations of equal-length cycles.
inline ConjugatorResult conjugator_search(Perm a, Perm aT, Perm c, Perm cT, Ambient ambient,
                                          std::uint64_t cap_centralizer = default_caps().centralizer) {
  const std::size_t n = a.degree();
  if (aT.degree() != n || c.degree() != n || cT.degree() != n)
    throw UsageError("conjugator_search: degree mismatch");
  ConjugatorResult res;
  if (a.is_identity() && c.is_identity()) {
    res.status = ConjugatorResult::Status::degenerate;
    return res;
  }
  // pivot on the element with the smaller centralizer
  std::uint64_t ca = a.is_identity() ? UINT64_MAX : detail::centralizer_size(a, UINT64_MAX / 4);
  std::uint64_t cc = c.is_identity() ? UINT64_MAX : detail::centralizer_size(c, UINT64_MAX / 4);
  if (cc < ca) {
    std::swap(a, c);
    std::swap(aT, cT);
  }
  if (a.cycle_type() != aT.cycle_type() || c.cycle_type() != cT.cycle_type()) return res;
  std::uint64_t csize = detail::centralizer_size(a, cap_centralizer);
  res.centralizer_size = csize;
  if (csize > cap_centralizer) throw CapacityExceeded("conjugator_search: centralizer too large", cap_centralizer);

  auto src = detail::sorted_cycles(a);
  auto dst = detail::sorted_cycles(aT);
  std::vector<std::uint16_t> g0(n);
  for (std::size_t k = 0; k < src.size(); ++k)
    for (std::size_t j = 0; j < src[k].size(); ++j) g0[src[k][j]] = dst[k][j];

  // blocks of equal-length cycles in src
  struct Block {
    std::size_t first, count, len;
  };
  std::vector<Block> blocks;
  for (std::size_t k = 0; k < src.size();) {
    std::size_t j = k;
    while (j < src.size() && src[j].size() == src[k].size()) ++j;
    blocks.push_back({k, j - k, src[k].size()});
    k = j;
  }

  std::vector<std::vector<std::size_t>> perms(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    perms[b].resize(blocks[b].count);
    std::iota(perms[b].begin(), perms[b].end(), 0);
  }
  std::vector<std::size_t> shift(src.size(), 0);

  std::vector<std::uint16_t> z(n);
  while (true) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& B = blocks[b];
      for (std::size_t j = 0; j < B.count; ++j) {
        const auto& from = src[B.first + j];
        const auto& to = src[B.first + perms[b][j]];
        std::size_t sh = shift[B.first + j];
        for (std::size_t t = 0; t < B.len; ++t) z[from[t]] = to[(t + sh) % B.len];
      }
    }
    // gamma = gamma0 * z ; test gamma c = cT gamma pointwise
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      std::uint16_t gx = g0[z[x]];
      std::uint16_t gcx = g0[z[c(x)]];
      if (gcx != cT(gx)) ok = false;
    }
    if (ok) {
      std::vector<std::uint16_t> gimg(n);
      for (std::size_t x = 0; x < n; ++x) gimg[x] = g0[z[x]];
      Perm gamma(std::move(gimg));
      if (ambient == Ambient::sym || parity(gamma) == Parity::even) res.solutions.push_back(std::move(gamma));
    }
    // advance odometer: shifts first, then block permutations
    std::size_t k = 0;
    for (; k < src.size(); ++k) {
      if (++shift[k] < src[k].size()) break;
      shift[k] = 0;
    }
    if (k < src.size()) continue;
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      if (std::next_permutation(perms[b].begin(), perms[b].end())) break;
    }
    if (b == blocks.size()) break;
  }
  std::sort(res.solutions.begin(), res.solutions.end());
  return res;
}

}  // namespace bv
