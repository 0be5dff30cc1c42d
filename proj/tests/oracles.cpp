#include "oracles.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace unitsq::oracle {

namespace {

std::optional<std::int64_t> small_sqrt(__int128 n) {
  if (n < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  if (static_cast<__int128>(r) * r != n) return std::nullopt;
  return r;
}

mpz_class big(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), v);
  return r;
}

UnitCoords make_coords(mpz_class x, mpz_class y, int n) {
  // (x + y sqrt d)/2 with x, y both even reduces to denominator 1.
  if (mpz_even_p(x.get_mpz_t()) && mpz_even_p(y.get_mpz_t())) {
    return {x / 2, y / 2, 1, n};
  }
  return {std::move(x), std::move(y), 2, n};
}

}  // namespace

std::optional<UnitCoords> brute_force_unit(std::int64_t d, std::int64_t y_max) {
  for (std::int64_t y = 1; y <= y_max; ++y) {
    const __int128 dy2 = static_cast<__int128>(d) * y * y;
    // Norm -1 first: for a given y at most one of the two can hold.
    if (auto x = small_sqrt(dy2 - 4)) return make_coords(big(*x), big(y), -1);
    if (auto x = small_sqrt(dy2 + 4)) return make_coords(big(*x), big(y), 1);
  }
  return std::nullopt;
}

std::pair<mpz_class, mpz_class> chakravala_pell(std::int64_t d) {
  const auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(d)));
  std::int64_t m0 = s;
  if (std::llabs((s + 1) * (s + 1) - d) < std::llabs(s * s - d)) m0 = s + 1;
  mpz_class a = big(m0), b = 1;
  std::int64_t k = m0 * m0 - d;
  while (k != 1) {
    const std::int64_t ak = std::llabs(k);
    std::int64_t m;
    if (ak == 1) {
      m = s;  // any m works; pick the one minimizing |m^2 - d|
      if (std::llabs((s + 1) * (s + 1) - d) < std::llabs(s * s - d)) m = s + 1;
    } else {
      // m = -a / b (mod |k|)
      const auto bm = static_cast<std::int64_t>(mpz_fdiv_ui(b.get_mpz_t(), static_cast<unsigned long>(ak)));
      const auto am = static_cast<std::int64_t>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(ak)));
      std::int64_t inv = 0;
      for (std::int64_t t = 1; t < ak; ++t) {
        if ((static_cast<__int128>(bm) * t) % ak == 1) {
          inv = t;
          break;
        }
      }
      if (inv == 0) throw std::logic_error("chakravala: b not invertible mod k");
      const std::int64_t r = static_cast<std::int64_t>((static_cast<__int128>(ak - am) * inv) % ak);
      // Candidates in the class r mod |k| bracketing sqrt(d).
      std::int64_t below = s - ((s - r) % ak + ak) % ak;
      std::int64_t above = below + ak;
      m = above;
      if (below > 0 && std::llabs(below * below - d) < std::llabs(above * above - d)) m = below;
    }
    const mpz_class abs_k = big(ak);
    mpz_class a_next = (a * m + big(d) * b);
    mpz_class b_next = (a + b * m);
    if (!mpz_divisible_p(a_next.get_mpz_t(), abs_k.get_mpz_t()) ||
        !mpz_divisible_p(b_next.get_mpz_t(), abs_k.get_mpz_t())) {
      throw std::logic_error("chakravala: composition not integral");
    }
    a = a_next / abs_k;
    b = b_next / abs_k;
    k = (m * m - d) / k;
  }
  if (a * a - big(d) * b * b != 1) throw std::logic_error("chakravala: not a Pell solution");
  return {abs(a), abs(b)};
}

UnitCoords unit_from_pell_root(std::int64_t d) {
  const auto [X, Y] = chakravala_pell(d);
  const mpz_class target = 2 * X;  // trace of eta = X + Y sqrt d
  const bool one_mod_four = d % 4 == 1;
  for (int k : {6, 3, 2, 1}) {
    for (int n : {-1, 1}) {
      // eps^k has norm n^k, which must be +1 to equal eta.
      if (n == -1 && k % 2 == 1) continue;
      // trace T_k(x) of eps^k for eps of trace x and norm n; T_k increases
      // with x on x >= 1 (n = -1) or x >= 3 (n = +1).
      auto trace_pow = [k, n](const mpz_class& x) {
        mpz_class t0 = 2, t1 = x;
        for (int j = 2; j <= k; ++j) {
          mpz_class t2 = x * t1 - n * t0;
          t0 = std::move(t1);
          t1 = std::move(t2);
        }
        return t1;
      };
      mpz_class lo = n == -1 ? 1 : 3, hi = target;
      while (lo < hi) {
        mpz_class mid = (lo + hi) / 2;
        if (trace_pow(mid) < target) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      if (trace_pow(lo) != target) continue;
      const mpz_class x = lo;
      mpz_class dy2 = x * x - 4 * n;
      if (!mpz_divisible_p(dy2.get_mpz_t(), big(d).get_mpz_t())) continue;
      dy2 /= big(d);
      if (!mpz_perfect_square_p(dy2.get_mpz_t()) || sgn(dy2) <= 0) continue;
      mpz_class y;
      mpz_sqrt(y.get_mpz_t(), dy2.get_mpz_t());
      const bool x_odd = mpz_odd_p(x.get_mpz_t()), y_odd = mpz_odd_p(y.get_mpz_t());
      if (x_odd != y_odd) continue;
      if (x_odd && !one_mod_four) continue;
      return make_coords(x, y, n);
    }
  }
  throw std::logic_error("pell root extraction failed");
}

UnitCoords reference_unit(std::int64_t d, std::int64_t y_max) {
  if (auto u = brute_force_unit(d, y_max)) return *u;
  return unit_from_pell_root(d);
}

std::vector<std::pair<std::int64_t, std::int64_t>> two_square_reps(std::int64_t p) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = 1; a * a < p; a += 2) {
    const std::int64_t rest = p - a * a;
    if (rest % 4 != 0) continue;
    if (auto b = small_sqrt(rest / 4); b && *b > 0) out.emplace_back(a, *b);
  }
  return out;
}

std::int64_t analytic_class_number(std::int64_t disc) {
  if (disc >= -4) throw std::invalid_argument("analytic_class_number needs D < -4");
  const std::int64_t n = -disc;
  const mpz_class D = big(disc);
  std::int64_t sum = 0;
  for (std::int64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    // Kronecker (D/a) for odd a equals the Jacobi symbol; for even a with D
    // odd, (D/2) = +1 if D = 1 (mod 8), -1 if D = 5 (mod 8).
    std::int64_t odd = a;
    int chi = 1;
    while (odd % 2 == 0) {
      odd /= 2;
      chi *= (((disc % 8) + 8) % 8 == 1) ? 1 : -1;
    }
    chi *= mpz_jacobi(D.get_mpz_t(), big(odd).get_mpz_t());
    sum += chi * a;
  }
  if (sum % n != 0) throw std::logic_error("class number sum not divisible by |D|");
  return -sum / n;
}

std::int64_t naive_form_count(std::int64_t disc) {
  std::int64_t count = 0;
  const std::int64_t n = -disc;
  for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      const std::int64_t num = b * b + n;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

int euler_legendre(std::int64_t m, std::int64_t p) {
  mpz_class r;
  const mpz_class base = big(((m % p) + p) % p), e = big((p - 1) / 2), mod = big(p);
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

}  // namespace unitsq::oracle
