#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

// Small exact-arithmetic helpers shared by the modules.
namespace unitsq {

__extension__ typedef __int128 int128;

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);

/// Sieve of Eratosthenes; all primes p <= limit in increasing order.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

/// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt(std::int64_t n);

/// Exact square root if n is a perfect square (n >= 0), nullopt otherwise.
std::optional<mpz_class> exact_sqrt(const mpz_class& n);

/// base^exp mod m with 0 <= result < m; m >= 1.
std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m);

/// Inverse of a modulo m (gcd(a, m) = 1 required).
std::int64_t invmod(std::int64_t a, std::int64_t m);

/// Non-negative residue of a mod m.
std::int64_t mod_floor(const mpz_class& a, std::int64_t m);
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Exponent of 2 dividing n (n > 0).
unsigned two_adic_valuation(std::uint64_t n);

mpz_class to_mpz(std::int64_t v);

}  // namespace unitsq
