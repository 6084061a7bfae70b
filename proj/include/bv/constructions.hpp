#pragma once

#include "bv/mat2.hpp"
#include "bv/perm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <unordered_map>

namespace bv {

// ---------------------------------------------------------------- (Z/n)^2

struct Vec2 {
  std::int64_t x = 0, y = 0;
  bool operator==(const Vec2&) const = default;
  auto operator<=>(const Vec2&) const = default;
  friend std::size_t hash_value(const Vec2& v) { return hash_mix(static_cast<std::size_t>(v.x), v.y); }
};

class Ab2Group {
 public:
  using element_type = Vec2;
  explicit Ab2Group(std::int64_t n) : n_(n) {
    if (n < 2) throw UsageError("ab2: n must be >= 2");
  }
  std::int64_t n() const { return n_; }
  Vec2 identity() const { return {0, 0}; }
  Vec2 mul(const Vec2& u, const Vec2& v) const { return {(u.x + v.x) % n_, (u.y + v.y) % n_}; }
  Vec2 inv(const Vec2& u) const { return {mod(-u.x, n_), mod(-u.y, n_)}; }
  Vec2 make(std::int64_t x, std::int64_t y) const { return {mod(x, n_), mod(y, n_)}; }
  std::vector<Vec2> generators() const { return {{1, 0}, {0, 1}}; }
  bigint order() const { return bigint(n_) * n_; }
  bool contains(const Vec2& u) const { return u.x >= 0 && u.x < n_ && u.y >= 0 && u.y < n_; }
  std::string name() const { return "(Z/" + std::to_string(n_) + ")^2"; }
  std::uint64_t order_of(const Vec2& u) const {
    return static_cast<std::uint64_t>(n_ / std::gcd(n_, std::gcd(u.x, u.y)));
  }
  // Generated by two elements iff the determinant is a unit.
  bool generates_fast(const Vec2& u, const Vec2& v) const {
    return std::gcd(mod(u.x * v.y - u.y * v.x, n_), n_) == 1;
  }
  std::string generation_strategy() const { return "determinant"; }
  Vec2 parse(const std::string& s, bool = false) const {
    std::int64_t x = 0, y = 0;
    char c1 = 0, c2 = 0, c3 = 0;
    std::stringstream ss(s);
    if (!(ss >> c1 >> x >> c2 >> y >> c3) || c1 != '(' || c2 != ',' || c3 != ')')
      throw MalformedElement("expected (x,y), got '" + s + "'");
    return make(x, y);
  }
  std::string format(const Vec2& u, bool = false) const {
    return "(" + std::to_string(u.x) + "," + std::to_string(u.y) + ")";
  }

 private:
  std::int64_t n_;
};

// ---------------------------------------------------------------- H_[4]

template <class E>
struct H4Elem {
  E x;
  E y;
  std::uint8_t t = 0;
  bool operator==(const H4Elem&) const = default;
  auto operator<=>(const H4Elem&) const = default;
  friend std::size_t hash_value(const H4Elem& e) {
    return hash_mix(hash_mix(hash_value(e.x), hash_value(e.y)), e.t);
  }
};

// (H x H) x| Z/4, the generator of Z/4 acting by the swap of the two factors.
template <FiniteGroup H>
class H4Group {
 public:
  using inner_type = H;
  using inner_element = typename H::element_type;
  using element_type = H4Elem<inner_element>;

  explicit H4Group(H inner) : h_(std::move(inner)) {}
  const H& inner() const { return h_; }

  element_type make(const inner_element& x, const inner_element& y, int t) const {
    return {x, y, static_cast<std::uint8_t>(mod(t, 4))};
  }
  element_type identity() const { return {h_.identity(), h_.identity(), 0}; }
  element_type mul(const element_type& u, const element_type& v) const {
    std::uint8_t t = static_cast<std::uint8_t>((u.t + v.t) % 4);
    if (u.t % 2 == 1) return {h_.mul(u.x, v.y), h_.mul(u.y, v.x), t};
    return {h_.mul(u.x, v.x), h_.mul(u.y, v.y), t};
  }
  element_type inv(const element_type& u) const {
    std::uint8_t t = static_cast<std::uint8_t>((4 - u.t) % 4);
    if (u.t % 2 == 1) return {h_.inv(u.y), h_.inv(u.x), t};
    return {h_.inv(u.x), h_.inv(u.y), t};
  }
  std::vector<element_type> generators() const {
    std::vector<element_type> g;
    for (const auto& h : h_.generators()) g.push_back({h, h_.identity(), 0});
    g.push_back({h_.identity(), h_.identity(), 1});
    return g;
  }
  bigint order() const { return 4 * h_.order() * h_.order(); }
  bool contains(const element_type& u) const { return u.t < 4 && h_.contains(u.x) && h_.contains(u.y); }
  std::string name() const { return "H4(" + h_.name() + ")"; }
  std::uint64_t order_of(const element_type& u) const {
    if (u.t % 2 == 0) {
      std::uint64_t m = lcm_u(element_order(h_, u.x), element_order(h_, u.y));
      return u.t == 0 ? m : lcm_u(m, 2);
    }
    // u^2 = (xy, yx, 2t); xy and yx are conjugate
    std::uint64_t m = element_order(h_, h_.mul(u.x, u.y));
    return 2 * lcm_u(m, 2);
  }
  bool in_h2(const element_type& u) const { return u.t % 2 == 0; }
  element_type coset_rep() const { return {h_.identity(), h_.identity(), 1}; }

  // "(x ; y ; t)" with inner literals.
  element_type parse(const std::string& s, bool zero_based = false) const {
    auto open = s.find_first_not_of(" \t");
    auto close = s.find_last_not_of(" \t");
    if (open == std::string::npos || s[open] != '(' || s[close] != ')')
      throw MalformedElement("expected (x ; y ; t), got '" + s + "'");
    std::string body = s.substr(open + 1, close - open - 1);
    std::vector<std::string> parts;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ';')) parts.push_back(item);
    if (parts.size() != 3) throw MalformedElement("expected three ';'-separated parts in '" + s + "'");
    int t = std::stoi(parts[2]);
    return make(h_.parse(parts[0], zero_based), h_.parse(parts[1], zero_based), t);
  }
  std::string format(const element_type& u, bool zero_based = false) const {
    return "(" + h_.format(u.x, zero_based) + " ; " + h_.format(u.y, zero_based) + " ; " + std::to_string(u.t) + ")";
  }

 private:
  H h_;
};

// ---------------------------------------------------------------- wallpaper quotients

struct WpElem {
  std::int64_t u0 = 0, u1 = 0;
  int j = 0;
  bool operator==(const WpElem&) const = default;
  auto operator<=>(const WpElem&) const = default;
  friend std::size_t hash_value(const WpElem& e) { return hash_mix(hash_mix(e.u0, e.u1), e.j); }
};

// (Z/m)^2 x| Z/d; the rotation r acts on translations by an integer matrix of order d.
class WallpaperGroup {
 public:
  using element_type = WpElem;
  WallpaperGroup(int d, std::int64_t m, bool printed_d4_relation = false) : d_(d), m_(m) {
    if (m < 2) throw UsageError("wallpaper: m must be >= 2");
    switch (d) {
      case 3: rot_ = {0, -1, 1, -1}; break;  // x -> y, y -> x^-1 y^-1
      case 6: rot_ = {1, 1, -1, 0}; break;   // x -> x y^-1, y -> x
      case 4:
        if (printed_d4_relation)
          throw UsageError(
              "wallpaper d=4: the relation x -> y, y -> y^-1 maps Z^2 into <y>; it is not an automorphism");
        rot_ = {0, -1, 1, 0};  // x -> y, y -> x^-1
        break;
      default: throw UsageError("wallpaper: d must be 3, 4 or 6");
    }
    pows_.push_back({1, 0, 0, 1});
    for (int k = 1; k < d; ++k) pows_.push_back(mat_mul(rot_, pows_.back()));
    if (mat_mul(rot_, pows_.back()) != std::array<std::int64_t, 4>{1, 0, 0, 1})
      throw Error("wallpaper: rotation matrix does not have order d");
  }
  int d() const { return d_; }
  std::int64_t m() const { return m_; }
  const std::array<std::int64_t, 4>& rotation() const { return rot_; }
  WpElem identity() const { return {}; }
  WpElem mul(const WpElem& u, const WpElem& v) const {
    auto w = act(u.j, v.u0, v.u1);
    return {mod(u.u0 + w.first, m_), mod(u.u1 + w.second, m_), (u.j + v.j) % d_};
  }
  WpElem inv(const WpElem& u) const {
    int jinv = (d_ - u.j) % d_;
    auto w = act(jinv, -u.u0, -u.u1);
    return {mod(w.first, m_), mod(w.second, m_), jinv};
  }
  std::vector<WpElem> generators() const { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }
  bigint order() const { return bigint(m_) * m_ * d_; }
  bool contains(const WpElem& u) const {
    return u.u0 >= 0 && u.u0 < m_ && u.u1 >= 0 && u.u1 < m_ && u.j >= 0 && u.j < d_;
  }
  std::string name() const { return "Wallpaper(d=" + std::to_string(d_) + ",m=" + std::to_string(m_) + ")"; }
  WpElem parse(const std::string& s, bool = false) const {
    std::int64_t a = 0, b = 0;
    int j = 0;
    char c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    std::stringstream ss(s);
    if (!(ss >> c1 >> a >> c2 >> b >> c3 >> j >> c4) || c1 != '(' || c2 != ',' || c3 != ',' || c4 != ')')
      throw MalformedElement("expected (u0,u1,j), got '" + s + "'");
    return {mod(a, m_), mod(b, m_), static_cast<int>(mod(j, d_))};
  }
  std::string format(const WpElem& u, bool = false) const {
    return "(" + std::to_string(u.u0) + "," + std::to_string(u.u1) + "," + std::to_string(u.j) + ")";
  }

 private:
  static std::array<std::int64_t, 4> mat_mul(const std::array<std::int64_t, 4>& A,
                                             const std::array<std::int64_t, 4>& B) {
    return {A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3], A[2] * B[0] + A[3] * B[2],
            A[2] * B[1] + A[3] * B[3]};
  }
  std::pair<std::int64_t, std::int64_t> act(int j, std::int64_t a, std::int64_t b) const {
    const auto& M = pows_[j];
    return {M[0] * a + M[1] * b, M[2] * a + M[3] * b};
  }

  int d_;
  std::int64_t m_;
  std::array<std::int64_t, 4> rot_{};
  std::vector<std::array<std::int64_t, 4>> pows_;
};

// ---------------------------------------------------------------- Cayley tables

struct Tid {
  std::uint32_t v = 0;
  bool operator==(const Tid&) const = default;
  auto operator<=>(const Tid&) const = default;
  friend std::size_t hash_value(const Tid& t) { return t.v; }
};

using Bits = std::vector<std::uint64_t>;

inline void bits_set(Bits& b, std::size_t i) { b[i >> 6] |= (std::uint64_t(1) << (i & 63)); }
inline bool bits_test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1; }
inline void bits_or(Bits& a, const Bits& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] |= b[k];
}
inline std::size_t bits_count(const Bits& b) {
  std::size_t s = 0;
  for (auto w : b) s += static_cast<std::size_t>(__builtin_popcountll(w));
  return s;
}
inline std::size_t bits_and_count(const Bits& a, const Bits& b) {
  std::size_t s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<std::size_t>(__builtin_popcountll(a[k] & b[k]));
  return s;
}
inline std::vector<std::size_t> bits_list(const Bits& b) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < b.size(); ++k) {
    std::uint64_t w = b[k];
    while (w) {
      out.push_back(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
      w &= w - 1;
    }
  }
  return out;
}

// Dense group with a full multiplication table; element 0 is the identity.
// Conjugacy classes and cyclic closures are precomputed at construction.
class TableGroup {
 public:
  using element_type = Tid;

  TableGroup() = default;

  template <class MulFn>
  static TableGroup from_rule(std::size_t n, MulFn&& mulfn, std::vector<std::size_t> gens, std::string name,
                              std::vector<std::string> labels = {}) {
    TableGroup t;
    t.n_ = n;
    t.name_ = std::move(name);
    t.table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t.table_[i * n + j] = static_cast<std::uint16_t>(mulfn(i, j));
    for (auto g : gens) t.gens_.push_back(Tid{static_cast<std::uint32_t>(g)});
    t.labels_ = std::move(labels);
    t.finish();
    return t;
  }

  template <FiniteGroup G>
  static TableGroup from_group(const G& grp, std::size_t cap, std::string name = "",
                               std::vector<typename G::element_type>* elems_out = nullptr) {
    using E = typename G::element_type;
    std::vector<E> elems;
    std::unordered_map<E, std::uint32_t, ElemHash<E>> index;
    auto gens = grp.generators();
    elems.push_back(grp.identity());
    index.emplace(grp.identity(), 0);
    for (std::size_t k = 0; k < elems.size(); ++k) {
      for (const auto& g : gens) {
        E y = grp.mul(elems[k], g);
        if (index.emplace(y, static_cast<std::uint32_t>(elems.size())).second) {
          elems.push_back(y);
          if (elems.size() > cap) throw CapacityExceeded("table of " + grp.name(), cap);
        }
      }
    }
    if (elems.size() > 65535) throw CapacityExceeded("table ids are 16-bit", 65535);
    TableGroup t;
    t.n_ = elems.size();
    t.name_ = name.empty() ? grp.name() : std::move(name);
    t.table_.resize(t.n_ * t.n_);
    for (std::size_t i = 0; i < t.n_; ++i)
      for (std::size_t j = 0; j < t.n_; ++j) t.table_[i * t.n_ + j] = static_cast<std::uint16_t>(index.at(grp.mul(elems[i], elems[j])));
    for (const auto& g : gens) t.gens_.push_back(Tid{index.at(g)});
    if constexpr (requires { grp.format(elems[0], false); }) {
      for (const auto& e : elems) t.labels_.push_back(grp.format(e, false));
    }
    t.finish();
    if (elems_out) *elems_out = std::move(elems);
    return t;
  }

  std::size_t size() const { return n_; }
  Tid id(std::size_t i) const { return Tid{static_cast<std::uint32_t>(i)}; }
  Tid identity() const { return Tid{0}; }
  Tid mul(Tid x, Tid y) const { return Tid{table_[x.v * n_ + y.v]}; }
  Tid inv(Tid x) const { return Tid{inv_[x.v]}; }
  std::vector<Tid> generators() const { return gens_; }
  bigint order() const { return bigint(n_); }
  bool contains(Tid x) const { return x.v < n_; }
  std::string name() const { return name_; }
  std::uint64_t order_of(Tid x) const { return ord_[x.v]; }
  std::size_t words() const { return (n_ + 63) / 64; }

  std::size_t class_of(Tid x) const { return class_id_[x.v]; }
  std::size_t class_count() const { return class_bits_.size(); }
  const Bits& class_bits(std::size_t k) const { return class_bits_[k]; }
  std::size_t class_size(std::size_t k) const { return class_sizes_[k]; }
  // Union of the conjugacy classes of all powers of x.
  const Bits& cyclic_closure(Tid x) const { return cyc_[x.v]; }
  bool is_abelian() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (table_[i * n_ + j] != table_[j * n_ + i]) return false;
    return true;
  }
  Tid conj(Tid g, Tid h) const { return mul(mul(h, g), inv(h)); }

  Tid parse(const std::string& s, bool = false) const {
    std::string t;
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (!t.empty() && t[0] == '#') {
      std::size_t k = std::stoull(t.substr(1));
      if (k >= n_) throw MalformedElement("element index out of range in " + name_);
      return id(k);
    }
    for (std::size_t k = 0; k < labels_.size(); ++k) {
      std::string l;
      for (char ch : labels_[k])
        if (!std::isspace(static_cast<unsigned char>(ch))) l += ch;
      if (l == t) return id(k);
    }
    throw MalformedElement("unknown element '" + s + "' in " + name_ + " (use #index)");
  }
  std::string format(Tid x, bool = false) const {
    return x.v < labels_.size() ? labels_[x.v] : "#" + std::to_string(x.v);
  }

  // <gens> as a bitset; throws when ids are invalid.
  Bits closure_bits(const std::vector<Tid>& gens) const {
    Bits seen(words(), 0);
    std::vector<std::uint32_t> stack{0};
    bits_set(seen, 0);
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto g : gens) {
        auto y = table_[x * n_ + g.v];
        if (!bits_test(seen, y)) {
          bits_set(seen, y);
          stack.push_back(y);
        }
      }
    }
    return seen;
  }
  bool generates_fast(Tid a, Tid c) const { return bits_count(closure_bits({a, c})) == n_; }
  std::string generation_strategy() const { return "closure"; }

  // The subgroup spanned by the listed parent ids as its own table, with the id map.
  TableGroup subgroup(const Bits& members, std::vector<Tid> parent_gens, std::string name,
                      std::vector<std::uint32_t>* to_parent = nullptr) const {
    auto ids = bits_list(members);
    if (ids.empty() || ids[0] != 0) throw Error("subgroup must contain the identity");
    std::vector<std::int32_t> local(n_, -1);
    for (std::size_t k = 0; k < ids.size(); ++k) local[ids[k]] = static_cast<std::int32_t>(k);
    std::vector<std::size_t> gens;
    for (auto g : parent_gens) {
      if (local[g.v] < 0) throw Error("subgroup generator outside the member set");
      gens.push_back(static_cast<std::size_t>(local[g.v]));
    }
    std::vector<std::string> labels;
    for (auto i : ids) labels.push_back(format(id(i)));
    auto sub = from_rule(
        ids.size(),
        [&](std::size_t i, std::size_t j) {
          auto r = local[table_[ids[i] * n_ + ids[j]]];
          if (r < 0) throw Error("member set is not closed under multiplication");
          return static_cast<std::size_t>(r);
        },
        gens, std::move(name), std::move(labels));
    if (to_parent) {
      to_parent->assign(ids.begin(), ids.end());
    }
    return sub;
  }

 private:
  void finish() {
    if (n_ == 0) throw Error("empty table");
    inv_.assign(n_, 0);
    ord_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (table_[i] != i || table_[i * n_] != i) throw Error("element 0 is not the identity in " + name_);
      for (std::size_t j = 0; j < n_; ++j)
        if (table_[i * n_ + j] == 0) {
          inv_[i] = static_cast<std::uint16_t>(j);
          break;
        }
      std::uint32_t y = static_cast<std::uint32_t>(i);
      std::uint32_t k = 1;
      while (y != 0) {
        y = table_[y * n_ + i];
        ++k;
        if (k > n_ + 1) throw Error("table is not a group (no finite order) in " + name_);
      }
      ord_[i] = k;
    }
    // classes by conjugation with generators
    class_id_.assign(n_, std::uint32_t(-1));
    std::vector<std::uint32_t> gen_inv;
    for (auto g : gens_) gen_inv.push_back(inv_[g.v]);
    for (std::size_t i = 0; i < n_; ++i) {
      if (class_id_[i] != std::uint32_t(-1)) continue;
      auto k = static_cast<std::uint32_t>(class_bits_.size());
      Bits b(words(), 0);
      std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(i)};
      class_id_[i] = k;
      bits_set(b, i);
      std::size_t count = 1;
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (std::size_t g = 0; g < gens_.size(); ++g) {
          auto y = table_[table_[gens_[g].v * n_ + x] * n_ + gen_inv[g]];
          if (class_id_[y] == std::uint32_t(-1)) {
            class_id_[y] = k;
            bits_set(b, y);
            ++count;
            stack.push_back(y);
          }
        }
      }
      class_bits_.push_back(std::move(b));
      class_sizes_.push_back(count);
    }
    cyc_.assign(n_, Bits(words(), 0));
    for (std::size_t i = 0; i < n_; ++i) {
      std::vector<char> used(class_bits_.size(), 0);
      std::uint32_t y = 0;
      do {
        if (!used[class_id_[y]]) {
          used[class_id_[y]] = 1;
          bits_or(cyc_[i], class_bits_[class_id_[y]]);
        }
        y = table_[y * n_ + i];
      } while (y != 0);
    }
  }

  std::size_t n_ = 0;
  std::string name_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint32_t> ord_;
  std::vector<Tid> gens_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> class_id_;
  std::vector<Bits> class_bits_;
  std::vector<std::size_t> class_sizes_;
  std::vector<Bits> cyc_;
};

// ---------------------------------------------------------------- small families

inline TableGroup cyclic_table(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return TableGroup::from_rule(
      n, [n](std::size_t i, std::size_t j) { return (i + j) % n; }, {n > 1 ? 1u : 0u}, "C" + std::to_string(n),
      labels);
}

// Dihedral group of order 2n; id = k + n*s for r^k s^s.
inline TableGroup dihedral_table(std::size_t n) {
  if (n < 2) throw UsageError("dihedral: n must be >= 2");
  return TableGroup::from_rule(
      2 * n,
      [n](std::size_t i, std::size_t j) {
        std::size_t k1 = i % n, s1 = i / n, k2 = j % n, s2 = j / n;
        std::size_t k = s1 ? (k1 + n - k2) % n : (k1 + k2) % n;
        return k + n * (s1 ^ s2);
      },
      {1, n}, "D" + std::to_string(n));
}

// Dicyclic group of order 4n: a^{2n} = 1, x^2 = a^n, x a x^-1 = a^-1.
inline TableGroup dicyclic_table(std::size_t n) {
  if (n < 2) throw UsageError("dicyclic: n must be >= 2");
  std::size_t m = 2 * n;
  return TableGroup::from_rule(
      2 * m,
      [n, m](std::size_t i, std::size_t j) {
        std::size_t k1 = i % m, s1 = i / m, k2 = j % m, s2 = j / m;
        if (!s1) return (k1 + k2) % m + m * s2;
        std::size_t k = (k1 + m - k2) % m;
        if (s2) return (k + n) % m;
        return k + m;
      },
      {1, m}, n == 2 ? "Q8" : "Dic" + std::to_string(n));
}

inline TableGroup direct_product_table(const TableGroup& A, const TableGroup& B, std::string name = "") {
  std::size_t na = A.size(), nb = B.size();
  std::vector<std::size_t> gens;
  for (auto g : A.generators()) gens.push_back(g.v);
  for (auto g : B.generators()) gens.push_back(g.v * na);
  return TableGroup::from_rule(
      na * nb,
      [&](std::size_t i, std::size_t j) {
        return A.mul(A.id(i % na), A.id(j % na)).v + na * B.mul(B.id(i / na), B.id(j / na)).v;
      },
      gens, name.empty() ? A.name() + "xC" + std::to_string(nb) : name);
}

// Z/p x| Z/q with the generator of Z/q acting by multiplication by r of order q.
inline TableGroup metacyclic_table(std::int64_t p, std::int64_t q) {
  if (!is_prime(p) || (p - 1) % q != 0) throw UsageError("metacyclic: need q | p-1 with p prime");
  std::int64_t r = mult_order_element(p, q);
  std::vector<std::int64_t> rp(q, 1);
  for (std::int64_t k = 1; k < q; ++k) rp[k] = rp[k - 1] * r % p;
  auto P = static_cast<std::size_t>(p);
  return TableGroup::from_rule(
      P * q,
      [&](std::size_t i, std::size_t j) {
        std::size_t u = i % P, s = i / P, v = j % P, t = j / P;
        return (u + rp[s] * v) % P + P * ((s + t) % q);
      },
      {1, P}, "C" + std::to_string(p) + ":C" + std::to_string(q));
}

// (Z/p)^2 x| Z/q for q | p-1 (diagonal action diag(r, r^-1)) or q | p+1 (irreducible action).
inline TableGroup affine_table(std::int64_t p, std::int64_t q) {
  if (!is_prime(p) || !is_prime(q)) throw UsageError("affine: p, q must be prime");
  Mat2 M;
  if ((p - 1) % q == 0) {
    M = diag_mat(p, mult_order_element(p, q));
  } else if ((p + 1) % q == 0) {
    bool found = false;
    for (std::int64_t k = 0; k < p && !found; ++k) {
      Mat2 C = companion_mat(p, k);
      if (SL2Group(p).order_of(C) == static_cast<std::uint64_t>(q)) {
        M = C;
        found = true;
      }
    }
    if (!found) throw NotFound("affine: no companion matrix of order q");
  } else {
    throw UsageError("affine: need q | p-1 or q | p+1");
  }
  std::vector<Mat2> pw{Mat2::identity(p)};
  for (std::int64_t k = 1; k < q; ++k) pw.push_back(M * pw.back());
  auto P = static_cast<std::size_t>(p);
  std::size_t P2 = P * P;
  return TableGroup::from_rule(
      P2 * q,
      [&](std::size_t i, std::size_t j) {
        std::int64_t u0 = i % P, u1 = (i / P) % P, s = i / P2;
        std::int64_t v0 = j % P, v1 = (j / P) % P, t = j / P2;
        const Mat2& A = pw[s];
        std::int64_t w0 = (u0 + std::int64_t(A.a) * v0 + std::int64_t(A.b) * v1) % p;
        std::int64_t w1 = (u1 + std::int64_t(A.c) * v0 + std::int64_t(A.d) * v1) % p;
        return static_cast<std::size_t>(w0 + p * w1) + P2 * ((s + t) % q);
      },
      {1, P, P2}, "C" + std::to_string(p) + "^2:C" + std::to_string(q));
}

inline TableGroup h4_table(const TableGroup& H, std::size_t cap) {
  return TableGroup::from_group(H4Group<TableGroup>(H), cap, "H4(" + H.name() + ")");
}

// ---------------------------------------------------------------- catalogue

struct CatalogueEntry {
  std::string id;
  std::size_t order;
};

// Builds a catalogue group from its id: dihedral:n, dicyclic:n, sym:n, alt:n,
// sl2:p, psl2:p, metacyclic:p:q, affine:p:q, cyclic:n, h4:<id>, <id>xC<k>.
inline TableGroup build_catalogue_group(const std::string& id, std::size_t cap = 2500) {
  auto xpos = id.rfind("xC");
  if (xpos != std::string::npos && id.rfind("h4:", 0) != 0) {
    auto base = build_catalogue_group(id.substr(0, xpos), cap);
    auto k = static_cast<std::size_t>(std::stoull(id.substr(xpos + 2)));
    if (base.size() * k > cap) throw CapacityExceeded("catalogue group " + id, cap);
    return direct_product_table(base, cyclic_table(k), id);
  }
  if (id.rfind("h4:", 0) == 0) {
    auto inner = build_catalogue_group(id.substr(3), cap);
    return h4_table(inner, cap);
  }
  auto colon = id.find(':');
  if (colon == std::string::npos) throw UsageError("unknown catalogue id '" + id + "'");
  std::string kind = id.substr(0, colon);
  std::string rest = id.substr(colon + 1);
  auto arg2 = [&rest](std::int64_t& p, std::int64_t& q) {
    auto c2 = rest.find(':');
    if (c2 == std::string::npos) throw UsageError("expected two parameters");
    p = std::stoll(rest.substr(0, c2));
    q = std::stoll(rest.substr(c2 + 1));
  };
  TableGroup g;
  if (kind == "dihedral") g = dihedral_table(std::stoull(rest));
  else if (kind == "dicyclic") g = dicyclic_table(std::stoull(rest));
  else if (kind == "cyclic") g = cyclic_table(std::stoull(rest));
  else if (kind == "sym") g = TableGroup::from_group(SymGroup(std::stoi(rest)), cap);
  else if (kind == "alt") g = TableGroup::from_group(AltGroup(std::stoi(rest)), cap);
  else if (kind == "sl2") g = TableGroup::from_group(SL2Group(std::stoll(rest)), cap);
  else if (kind == "psl2") g = TableGroup::from_group(PSL2Group(std::stoll(rest)), cap);
  else if (kind == "metacyclic" || kind == "affine") {
    std::int64_t p = 0, q = 0;
    arg2(p, q);
    g = kind == "metacyclic" ? metacyclic_table(p, q) : affine_table(p, q);
  } else {
    throw UsageError("unknown catalogue kind '" + kind + "'");
  }
  if (g.size() > cap) throw CapacityExceeded("catalogue group " + id, cap);
  return g;
}

// Deterministic, partial list of constructible nonabelian groups of order <= max_order.
inline std::vector<CatalogueEntry> catalogue(std::size_t max_order) {
  std::vector<CatalogueEntry> out;
  auto add = [&](std::string id, std::size_t order) {
    if (order <= max_order) out.push_back({std::move(id), order});
  };
  std::vector<CatalogueEntry> bases;
  for (std::size_t n = 3; 2 * n <= max_order; ++n) bases.push_back({"dihedral:" + std::to_string(n), 2 * n});
  for (std::size_t n = 2; 4 * n <= max_order; ++n) bases.push_back({"dicyclic:" + std::to_string(n), 4 * n});
  bases.push_back({"alt:4", 12});
  bases.push_back({"sym:4", 24});
  bases.push_back({"sl2:3", 24});
  bases.push_back({"alt:5", 60});
  bases.push_back({"sl2:5", 120});
  bases.push_back({"psl2:7", 168});
  bases.push_back({"sl2:7", 336});
  bases.push_back({"alt:6", 360});
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
    for (std::int64_t q : {2, 3, 5, 7}) {
      if (q != 2 && (p - 1) % q == 0) bases.push_back({"metacyclic:" + std::to_string(p) + ":" + std::to_string(q), std::size_t(p * q)});
      if (((p - 1) % q == 0 || (p + 1) % q == 0) && p * p * q <= 1000)
        bases.push_back({"affine:" + std::to_string(p) + ":" + std::to_string(q), std::size_t(p * p * q)});
    }
  }
  for (const auto& b : bases) add(b.id, b.order);
  // direct products of small bases with cyclic groups
  for (const auto& b : bases) {
    if (b.order > 24) continue;
    for (std::size_t k = 2; k <= 8; ++k) add(b.id + "xC" + std::to_string(k), b.order * k);
  }
  for (const char* h : {"cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6", "cyclic:7", "cyclic:8",
                        "cyclic:9", "cyclic:10", "cyclic:11", "dihedral:3", "dihedral:4", "dicyclic:2",
                        "dihedral:5"}) {
    auto H = build_catalogue_group(h);
    add(std::string("h4:") + h, 4 * H.size() * H.size());
  }
  // product ids over cyclic need a base id; express C_a x C_b through cyclic ids
  for (const char* pr : {"cyclic:2xC2"}) {
    add(std::string("h4:") + pr, 64);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.order < y.order; });
  out.erase(std::unique(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.id == y.id; }), out.end());
  return out;
}

// Index-2 subgroups as membership bitsets: kernels of the nonzero maps to Z/2.
inline std::vector<Bits> index_two_subgroups(const TableGroup& G) {
  std::vector<Tid> squares;
  for (std::size_t i = 0; i < G.size(); ++i) squares.push_back(G.mul(G.id(i), G.id(i)));
  // normal closure of the squares equals their span (the set of squares is conjugation invariant)
  Bits Q = G.closure_bits(squares);
  std::size_t qsize = bits_count(Q);
  if (G.size() % qsize != 0) throw Error("index_two_subgroups: square subgroup size does not divide |G|");
  // G/Q is elementary abelian; pick a basis of coset representatives
  std::vector<Tid> basis;
  Bits span = Q;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (bits_test(span, i)) continue;
    basis.push_back(G.id(i));
    std::vector<Tid> gens = basis;
    for (auto s : squares) gens.push_back(s);
    span = G.closure_bits(gens);
  }
  std::size_t r = basis.size();
  std::vector<Bits> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << r); ++mask) {
    // kernel: Q together with basis elements b_k (mask bit 0) and products b_k b_l (both bits 1)
    std::vector<Tid> gens(squares.begin(), squares.end());
    std::int64_t pivot = -1;
    for (std::size_t k = 0; k < r; ++k) {
      if (!((mask >> k) & 1)) gens.push_back(basis[k]);
      else if (pivot < 0) pivot = static_cast<std::int64_t>(k);
      else gens.push_back(G.mul(basis[pivot], basis[k]));
    }
    out.push_back(G.closure_bits(gens));
  }
  return out;
}

}  // namespace bv
