#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bv {

using bigint = boost::multiprecision::cpp_int;

// Errors. Callers distinguish "could not decide" from "checked and false",
// so overflow and undecided conditions are never folded into a boolean.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : Error {
  using Error::Error;
};
struct MalformedElement : Error {
  using Error::Error;
};
struct CapacityExceeded : Error {
  std::size_t cap;
  CapacityExceeded(const std::string& what, std::size_t c)
      : Error(what + " (cap " + std::to_string(c) + ")"), cap(c) {}
};
struct Undecided : Error {
  using Error::Error;
};
struct NotFound : Error {
  using Error::Error;
};

// Budgets. BV_CAPS="closure=1000,centralizer=50" overrides individual fields.
struct Caps {
  std::size_t closure = 1'000'000;
  std::size_t class_size = 1'000'000;
  std::size_t cond3 = 1'000'000;
  std::size_t centralizer = 10'000'000;
  std::size_t orbit = 1'000'000;
  std::size_t orbit_group = 2000;
  std::size_t table = 2500;
  std::size_t aut_enum = 20'000'000;

  static Caps from_env() {
    Caps c;
    const char* env = std::getenv("BV_CAPS");
    if (env == nullptr) return c;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("BV_CAPS: expected key=value, got '" + item + "'");
      std::string key = item.substr(0, eq);
      std::size_t val = std::stoull(item.substr(eq + 1));
      if (key == "closure") c.closure = val;
      else if (key == "class") c.class_size = val;
      else if (key == "cond3") c.cond3 = val;
      else if (key == "centralizer") c.centralizer = val;
      else if (key == "orbit") c.orbit = val;
      else if (key == "orbit_group") c.orbit_group = val;
      else if (key == "table") c.table = val;
      else if (key == "aut_enum") c.aut_enum = val;
      else throw UsageError("BV_CAPS: unknown key '" + key + "'");
    }
    return c;
  }
};

inline const Caps& default_caps() {
  static const Caps caps = Caps::from_env();
  return caps;
}

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

// ---- integer arithmetic ----

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t mod(std::int64_t x, std::int64_t p) {
  std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::uint64_t result = 1 % p;
  std::uint64_t base = static_cast<std::uint64_t>(mod(b, p));
  while (e > 0) {
    if (e & 1) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

inline std::int64_t invmod(std::int64_t a, std::int64_t n) {
  std::int64_t g = n, x = 0, x1 = 1, a1 = mod(a, n);
  while (a1 != 0) {
    std::int64_t q = g / a1;
    std::int64_t t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw UsageError("invmod: " + std::to_string(a) + " not invertible mod " + std::to_string(n));
  return mod(x, n);
}

inline std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bigint factorial(unsigned n) {
  bigint r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::string to_string(const bigint& x) { return x.str(); }

}  // namespace bv
