#include "unitsq/arith.hpp"

#include <bit>
#include <cmath>

#include "unitsq/error.hpp"

namespace unitsq {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs with the first 12 prime bases.
  std::int64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = static_cast<std::int64_t>(static_cast<int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_squarefree(std::int64_t n) {
  if (n < 1) return false;
  if (n == 1) return true;
  // Trial division by every p with p^3 <= n leaves a cofactor that has at
  // most two prime factors, so it is squarefree unless it is a square.
  std::int64_t m = n;
  for (std::int64_t p = 2; p * p * p <= n; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return false;
  }
  if (m == 1) return true;
  const std::int64_t r = isqrt(m);
  return r * r != m;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw DomainError("isqrt of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<int128>(r) * r > n) --r;
  while (static_cast<int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<mpz_class> exact_sqrt(const mpz_class& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m < 1) throw DomainError("powmod: modulus must be positive");
  if (exp < 0) throw DomainError("powmod: negative exponent");
  int128 result = 1 % m;
  int128 b = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("invmod: argument not invertible");
  return mod_floor(old_s, m);
}

std::int64_t mod_floor(const mpz_class& a, std::int64_t m) {
  if (m < 1) throw DomainError("mod_floor: modulus must be positive");
  return static_cast<std::int64_t>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m)));
}

unsigned two_adic_valuation(std::uint64_t n) {
  if (n == 0) throw DomainError("two_adic_valuation of zero");
  return static_cast<unsigned>(std::countr_zero(n));
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace unitsq
