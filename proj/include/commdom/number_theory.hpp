#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

namespace commdom {

// Trial division throughout; every argument here is a small group order.

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as prime -> exponent, ascending.
inline std::map<std::size_t, std::size_t> factorize(std::size_t n) {
  std::map<std::size_t, std::size_t> f;
  for (std::size_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  if (n > 1) ++f[n];
  return f;
}

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

/// (p, k) with n = p^k, k >= 1, if n is a prime power.
inline std::optional<std::pair<std::size_t, std::size_t>> prime_power(std::size_t n) {
  const auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return *f.begin();
}

/// True iff n = p^k for some k >= 0.
inline bool is_power_of(std::size_t n, std::size_t p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

/// Number of prime factors counted with multiplicity.
inline std::size_t omega_total(std::size_t n) {
  std::size_t k = 0;
  for (auto [p, e] : factorize(n)) k += e;
  return k;
}

}  // namespace commdom
