#pragma once

#include "bv/group.hpp"

#include <array>
#include <cctype>
#include <optional>

namespace bv {

// 2x2 matrix over F_p, entries reduced to [0,p).
struct Mat2 {
  std::uint32_t p = 0;
  std::uint32_t a = 0, b = 0, c = 0, d = 0;

  static Mat2 make(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return Mat2{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(mod(a, p)),
                static_cast<std::uint32_t>(mod(b, p)), static_cast<std::uint32_t>(mod(c, p)),
                static_cast<std::uint32_t>(mod(d, p))};
  }
  static Mat2 identity(std::int64_t p) { return make(p, 1, 0, 0, 1); }

  Mat2 operator*(const Mat2& o) const {
    const std::uint64_t P = p;
    return Mat2{p, static_cast<std::uint32_t>((std::uint64_t(a) * o.a + std::uint64_t(b) * o.c) % P),
                static_cast<std::uint32_t>((std::uint64_t(a) * o.b + std::uint64_t(b) * o.d) % P),
                static_cast<std::uint32_t>((std::uint64_t(c) * o.a + std::uint64_t(d) * o.c) % P),
                static_cast<std::uint32_t>((std::uint64_t(c) * o.b + std::uint64_t(d) * o.d) % P)};
  }
  Mat2 scaled(std::int64_t s) const {
    return make(p, std::int64_t(a) * s % p, std::int64_t(b) * s % p, std::int64_t(c) * s % p,
                std::int64_t(d) * s % p);
  }
  Mat2 negated() const { return scaled(p - 1); }
  std::int64_t det() const { return mod(std::int64_t(a) * d - std::int64_t(b) * c, p); }
  std::int64_t trace() const { return (std::int64_t(a) + d) % p; }
  Mat2 inverse() const {
    std::int64_t dt = det();
    if (dt == 0) throw MalformedElement("singular matrix has no inverse");
    std::int64_t di = invmod(dt, p);
    return make(p, std::int64_t(d) * di, -std::int64_t(b) * di, -std::int64_t(c) * di, std::int64_t(a) * di);
  }
  bool is_scalar() const { return b == 0 && c == 0 && a == d; }

  std::string to_string() const {
    auto sgn = [this](std::uint32_t v) {
      return v > p / 2 ? std::to_string(static_cast<std::int64_t>(v) - p) : std::to_string(v);
    };
    return "[[" + sgn(a) + "," + sgn(b) + "],[" + sgn(c) + "," + sgn(d) + "]]";
  }

  bool operator==(const Mat2&) const = default;
  auto operator<=>(const Mat2&) const = default;
  friend std::size_t hash_value(const Mat2& m) {
    std::size_t h = m.p;
    h = hash_mix(h, m.a);
    h = hash_mix(h, m.b);
    h = hash_mix(h, m.c);
    return hash_mix(h, m.d);
  }
};

// "[[a,b],[c,d]]" with optional trailing "mod p".
inline Mat2 parse_mat2(const std::string& text, std::int64_t p) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto modpos = s.find("mod");
  if (modpos != std::string::npos) {
    std::int64_t q = std::stoll(s.substr(modpos + 3));
    if (q != p) throw MalformedElement("matrix literal modulus " + std::to_string(q) + " != " + std::to_string(p));
    s = s.substr(0, modpos);
  }
  std::array<std::int64_t, 4> v{};
  std::size_t idx = 0, i = 0;
  while (i < s.size()) {
    if (s[i] == '-' || std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (idx >= 4) throw MalformedElement("too many entries in matrix literal '" + text + "'");
      v[idx++] = std::stoll(s.substr(i, j - i));
      i = j;
    } else if (s[i] == '[' || s[i] == ']' || s[i] == ',') {
      ++i;
    } else {
      throw MalformedElement("unexpected character in matrix literal '" + text + "'");
    }
  }
  if (idx != 4 || s.rfind("[[", 0) != 0) throw MalformedElement("expected [[a,b],[c,d]] in '" + text + "'");
  return Mat2::make(p, v[0], v[1], v[2], v[3]);
}

inline void require_odd_prime(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw UsageError("p = " + std::to_string(p) + " is not an odd prime");
}

// ---- F_p helpers ----

inline bool is_square(std::int64_t p, std::int64_t x) {
  x = mod(x, p);
  if (x == 0) throw UsageError("is_square: x must be nonzero");
  return powmod(x, (p - 1) / 2, p) == 1;
}

// Tonelli-Shanks.
inline std::int64_t sqrt_mod(std::int64_t x, std::int64_t p) {
  x = mod(x, p);
  if (x == 0) return 0;
  if (!is_square(p, x)) throw UsageError("sqrt_mod: nonsquare");
  if (p % 4 == 3) return powmod(x, (p + 1) / 4, p);
  std::int64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (is_square(p, z)) ++z;
  std::int64_t m = s, c = powmod(z, q, p), t = powmod(x, q, p), r = powmod(x, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    std::int64_t bb = powmod(c, std::int64_t(1) << (m - i - 1), p);
    m = i;
    c = bb * bb % p;
    t = t * c % p;
    r = r * bb % p;
  }
  return r;
}

inline std::int64_t smallest_nonsquare(std::int64_t p) {
  for (std::int64_t z = 2; z < p; ++z)
    if (!is_square(p, z)) return z;
  throw UsageError("no nonsquare mod " + std::to_string(p));
}

inline std::int64_t mult_order(std::int64_t x, std::int64_t p) {
  x = mod(x, p);
  if (x == 0) throw UsageError("mult_order: zero");
  std::int64_t y = x, k = 1;
  while (y != 1) {
    y = y * x % p;
    ++k;
  }
  return k;
}

// Smallest residue of exact multiplicative order q.
inline std::int64_t mult_order_element(std::int64_t p, std::int64_t q) {
  if (!is_prime(p)) throw UsageError("p = " + std::to_string(p) + " is not prime");
  if (q < 1 || (p - 1) % q != 0)
    throw NotFound("no element of order " + std::to_string(q) + " in F_" + std::to_string(p) + "*");
  for (std::int64_t l = 1; l < p; ++l)
    if (mult_order(l, p) == q) return l;
  throw NotFound("no element of order " + std::to_string(q));
}

// e(l) = (2 - l - 1/l) / (l + 1/l - l^2 - 1/l^2)
inline std::int64_t e_invariant(std::int64_t p, std::int64_t l) {
  l = mod(l, p);
  if (l == 0) throw UsageError("e_invariant: lambda = 0");
  std::int64_t li = invmod(l, p);
  std::int64_t num = mod(2 - l - li, p);
  std::int64_t den = mod(l + li - l * l % p - li * li % p, p);
  if (den == 0) throw UsageError("e_invariant: denominator vanishes (order of lambda below 5?)");
  return num * invmod(den, p) % p;
}

// ---- named matrices ----

struct Sl2Constants {
  Mat2 B, S, T, W;
};

inline Sl2Constants sl2_constants(std::int64_t p) {
  require_odd_prime(p);
  Mat2 B = Mat2::make(p, 0, 1, -1, 0);
  Mat2 S = Mat2::make(p, 0, -1, 1, 1);
  return {B, S, B * S, Mat2::make(p, 0, 1, 1, 0)};
}

inline Mat2 diag_mat(std::int64_t p, std::int64_t l) { return Mat2::make(p, l, 0, 0, invmod(l, p)); }
inline Mat2 companion_mat(std::int64_t p, std::int64_t k) { return Mat2::make(p, 0, 1, -1, k); }

// The conjugator with D(l) * g D(l) g^-1 of trace l + 1/l.
inline Mat2 split_conjugator(std::int64_t p, std::int64_t l) {
  std::int64_t li = invmod(l, p);
  std::int64_t l2 = l * l % p, li2 = li * li % p;
  std::int64_t den = mod(l2 + li2 - 2, p);
  if (den == 0) throw UsageError("split_conjugator: l^2 + l^-2 = 2");
  std::int64_t di = invmod(den, p);
  std::int64_t b = mod(l + li - l2 - li2, p) * di % p;
  std::int64_t d = mod(l + li - 2, p) * di % p;
  return Mat2::make(p, 1, b, 1, d);
}

// ---- groups ----

class SL2Group {
 public:
  using element_type = Mat2;
  explicit SL2Group(std::int64_t p) : p_(p) { require_odd_prime(p); }
  std::int64_t p() const { return p_; }
  Mat2 identity() const { return Mat2::identity(p_); }
  Mat2 mul(const Mat2& x, const Mat2& y) const { return x * y; }
  Mat2 inv(const Mat2& x) const { return Mat2::make(p_, x.d, -std::int64_t(x.b), -std::int64_t(x.c), x.a); }
  std::vector<Mat2> generators() const {
    auto k = sl2_constants(p_);
    return {k.B, k.S};
  }
  bigint order() const { return bigint(p_) * (p_ * p_ - 1); }
  bool contains(const Mat2& x) const {
    return std::int64_t(x.p) == p_ && x.a < x.p && x.b < x.p && x.c < x.p && x.d < x.p && x.det() == 1;
  }
  std::string name() const { return "SL(2," + std::to_string(p_) + ")"; }
  std::uint64_t order_of(const Mat2& x) const {
    Mat2 id = identity(), y = x;
    for (std::uint64_t k = 1; k <= std::uint64_t(2 * p_ + 2); ++k) {
      if (y == id) return k;
      y = y * x;
    }
    throw MalformedElement("order_of: element of SL(2,p) exceeded 2p+2");
  }
  Mat2 parse(const std::string& s, bool = false) const { return parse_mat2(s, p_); }
  std::string format(const Mat2& x, bool = false) const { return x.to_string(); }

 private:
  std::int64_t p_;
};

// {M, -M} represented by the member whose first nonzero entry lies in 1..(p-1)/2.
struct PMat2 {
  Mat2 m;
  static PMat2 from(const Mat2& x) {
    std::uint32_t first = x.a != 0 ? x.a : (x.b != 0 ? x.b : (x.c != 0 ? x.c : x.d));
    return PMat2{first > x.p / 2 ? x.negated() : x};
  }
  bool operator==(const PMat2&) const = default;
  auto operator<=>(const PMat2&) const = default;
  friend std::size_t hash_value(const PMat2& x) { return hash_value(x.m); }
  std::string to_string() const { return m.to_string(); }
};

class PSL2Group {
 public:
  using element_type = PMat2;
  explicit PSL2Group(std::int64_t p) : p_(p) { require_odd_prime(p); }
  std::int64_t p() const { return p_; }
  PMat2 identity() const { return PMat2::from(Mat2::identity(p_)); }
  PMat2 mul(const PMat2& x, const PMat2& y) const { return PMat2::from(x.m * y.m); }
  PMat2 inv(const PMat2& x) const {
    return PMat2::from(Mat2::make(p_, x.m.d, -std::int64_t(x.m.b), -std::int64_t(x.m.c), x.m.a));
  }
  std::vector<PMat2> generators() const {
    auto k = sl2_constants(p_);
    return {PMat2::from(k.B), PMat2::from(k.S)};
  }
  bigint order() const { return bigint(p_) * (p_ * p_ - 1) / 2; }
  bool contains(const PMat2& x) const {
    return std::int64_t(x.m.p) == p_ && x.m.det() == 1 && PMat2::from(x.m) == x;
  }
  std::string name() const { return "PSL(2," + std::to_string(p_) + ")"; }
  std::uint64_t order_of(const PMat2& x) const {
    PMat2 id = identity(), y = x;
    for (std::uint64_t k = 1; k <= std::uint64_t(2 * p_ + 2); ++k) {
      if (y == id) return k;
      y = mul(y, x);
    }
    throw MalformedElement("order_of: element of PSL(2,p) exceeded 2p+2");
  }
  PMat2 project(const Mat2& x) const { return PMat2::from(x); }
  PMat2 parse(const std::string& s, bool = false) const { return PMat2::from(parse_mat2(s, p_)); }
  std::string format(const PMat2& x, bool = false) const { return x.to_string(); }

 private:
  std::int64_t p_;
};

// ---- conjugation solver ----

// Basis of the null space of an m x 4 system over F_p.
inline std::vector<std::array<std::int64_t, 4>> nullspace4(std::vector<std::array<std::int64_t, 4>> rows,
                                                           std::int64_t p) {
  std::array<int, 4> pivot_col_of_row{};
  std::array<bool, 4> is_pivot{};
  std::size_t r = 0;
  for (int col = 0; col < 4 && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    std::int64_t iv = invmod(rows[r][col], p);
    for (auto& v : rows[r]) v = v * iv % p;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][col] == 0) continue;
      std::int64_t f = rows[k][col];
      for (int j = 0; j < 4; ++j) rows[k][j] = mod(rows[k][j] - f * rows[r][j], p);
    }
    pivot_col_of_row[r] = col;
    is_pivot[col] = true;
    ++r;
  }
  std::vector<std::array<std::int64_t, 4>> basis;
  for (int free = 0; free < 4; ++free) {
    if (is_pivot[free]) continue;
    std::array<std::int64_t, 4> v{};
    v[free] = 1;
    for (std::size_t k = 0; k < r; ++k) v[pivot_col_of_row[k]] = mod(-rows[k][free], p);
    basis.push_back(v);
  }
  return basis;
}

// Rows of X*m - mT*X = 0 for X = [[x0,x1],[x2,x3]].
inline void append_commutation_rows(std::vector<std::array<std::int64_t, 4>>& rows, const Mat2& m, const Mat2& mT) {
  std::int64_t p = m.p;
  std::int64_t a = m.a, b = m.b, c = m.c, d = m.d;
  std::int64_t A = mT.a, B = mT.b, C = mT.c, D = mT.d;
  // (X m)_00 = x0 a + x1 c ; (mT X)_00 = A x0 + B x2
  rows.push_back({mod(a - A, p), c, mod(-B, p), 0});
  // (X m)_01 = x0 b + x1 d ; (mT X)_01 = A x1 + B x3
  rows.push_back({b, mod(d - A, p), 0, mod(-B, p)});
  // (X m)_10 = x2 a + x3 c ; (mT X)_10 = C x0 + D x2
  rows.push_back({mod(-C, p), 0, mod(a - D, p), c});
  // (X m)_11 = x2 b + x3 d ; (mT X)_11 = C x1 + D x3
  rows.push_back({0, mod(-C, p), b, mod(d - D, p)});
}

// X in GL(2,p) with det(X) = det_target and X a X^-1 = aT, X c X^-1 = cT.
inline std::optional<Mat2> solve_conjugation_det(std::int64_t p, const Mat2& a, const Mat2& aT, const Mat2& c,
                                                 const Mat2& cT, std::int64_t det_target,
                                                 std::uint64_t cap = 50'000'000) {
  for (const Mat2* m : {&a, &aT, &c, &cT})
    if (std::int64_t(m->p) != p) throw MalformedElement("solve_conjugation: modulus mismatch");
  det_target = mod(det_target, p);
  if (det_target == 1 && a == aT && c == cT) return Mat2::identity(p);
  std::vector<std::array<std::int64_t, 4>> rows;
  append_commutation_rows(rows, a, aT);
  append_commutation_rows(rows, c, cT);
  auto basis = nullspace4(rows, p);
  if (basis.empty()) return std::nullopt;
  auto try_vec = [&](const std::array<std::int64_t, 4>& v) -> std::optional<Mat2> {
    Mat2 X = Mat2::make(p, v[0], v[1], v[2], v[3]);
    std::int64_t dt = X.det();
    if (dt == 0) return std::nullopt;
    std::int64_t want = det_target * invmod(dt, p) % p;  // need s^2 = want
    if (!is_square(p, want)) return std::nullopt;
    return X.scaled(sqrt_mod(want, p));
  };
  if (basis.size() == 1) return try_vec(basis[0]);
  // projective points of the solution space, first nonzero coefficient 1
  std::size_t dim = basis.size();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    if (total > cap / std::uint64_t(p)) throw CapacityExceeded("solve_conjugation: solution space too large", cap);
    total *= p;
  }
  std::vector<std::int64_t> coef(dim, 0);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t k = 0; k < dim; ++k) {
      coef[k] = static_cast<std::int64_t>(t % p);
      t /= p;
    }
    std::size_t first = 0;
    while (coef[first] == 0) ++first;
    if (coef[first] != 1) continue;
    std::array<std::int64_t, 4> v{};
    for (std::size_t k = 0; k < dim; ++k)
      for (int j = 0; j < 4; ++j) v[j] = (v[j] + coef[k] * basis[k][j]) % p;
    if (auto X = try_vec(v)) return X;
  }
  return std::nullopt;
}

enum class Sl2Coset { SL, SLW };

inline std::optional<Mat2> solve_conjugation_sl2(std::int64_t p, const Mat2& a, const Mat2& aT, const Mat2& c,
                                                 const Mat2& cT, Sl2Coset coset) {
  return solve_conjugation_det(p, a, aT, c, cT, coset == Sl2Coset::SL ? 1 : p - 1);
}

}  // namespace bv
