#include "unitsq/zi.hpp"

#include <sstream>
#include <utility>

#include "unitsq/arith.hpp"
#include "unitsq/error.hpp"

namespace unitsq {

std::string GaussianInteger::to_string() const {
  std::ostringstream os;
  os << re_.get_str() << (sgn(im_) < 0 ? " - " : " + ") << mpz_class(abs(im_)).get_str() << "i";
  return os.str();
}

GaussianInteger conj(const GaussianInteger& u) { return {u.re(), -u.im()}; }

bool is_associate(const GaussianInteger& u, const GaussianInteger& v) {
  const GaussianInteger i(0L, 1L);
  GaussianInteger w = v;
  for (int k = 0; k < 4; ++k) {
    if (w == u) return true;
    w = w * i;
  }
  return false;
}

namespace {

// round(n / d) for d > 0, halves rounded up.
mpz_class div_round(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_class twice = 2 * n + d;
  mpz_class den = 2 * d;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

GaussianInteger g_div_round(const GaussianInteger& u, const GaussianInteger& m) {
  const mpz_class n = m.norm();
  if (sgn(n) == 0) throw DomainError("Gaussian division by zero");
  const GaussianInteger num = u * conj(m);
  return {div_round(num.re(), n), div_round(num.im(), n)};
}

GaussianInteger g_mod(const GaussianInteger& u, const GaussianInteger& m) {
  return u - m * g_div_round(u, m);
}

GaussianInteger g_div_exact(const GaussianInteger& u, const GaussianInteger& m) {
  const mpz_class n = m.norm();
  if (sgn(n) == 0) throw DomainError("Gaussian division by zero");
  const GaussianInteger num = u * conj(m);
  if (mpz_divisible_p(num.re().get_mpz_t(), n.get_mpz_t()) == 0 ||
      mpz_divisible_p(num.im().get_mpz_t(), n.get_mpz_t()) == 0) {
    throw DomainError(m.to_string() + " does not divide " + u.to_string());
  }
  mpz_class re, im;
  mpz_divexact(re.get_mpz_t(), num.re().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(im.get_mpz_t(), num.im().get_mpz_t(), n.get_mpz_t());
  return {std::move(re), std::move(im)};
}

bool g_divides(const GaussianInteger& m, const GaussianInteger& u) {
  if (m.is_zero()) return u.is_zero();
  return g_mod(u, m).is_zero();
}

GaussianInteger g_gcd(GaussianInteger u, GaussianInteger v) {
  while (!v.is_zero()) {
    GaussianInteger r = g_mod(u, v);
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

GaussianInteger g_powmod(const GaussianInteger& u, const mpz_class& e, const GaussianInteger& m) {
  if (m.is_zero()) throw DomainError("Gaussian modulus is zero");
  if (sgn(e) < 0) throw DomainError("negative exponent");
  GaussianInteger result = g_mod(GaussianInteger(1L), m);
  GaussianInteger base = g_mod(u, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t k = bits; k-- > 0;) {
    result = g_mod(result * result, m);
    if (mpz_tstbit(e.get_mpz_t(), k) != 0) result = g_mod(result * base, m);
  }
  return result;
}

std::optional<GaussianInteger> g_sqrt(const GaussianInteger& u) {
  // (s + ti)^2 = u gives s^2 = (re + |u|)/2 and t^2 = (|u| - re)/2.
  const auto modulus = exact_sqrt(u.norm());
  if (!modulus) return std::nullopt;
  const mpz_class s2 = *modulus + u.re();
  const mpz_class t2 = *modulus - u.re();
  if (mpz_odd_p(s2.get_mpz_t()) != 0) return std::nullopt;
  auto s = exact_sqrt(s2 / 2);
  auto t = exact_sqrt(t2 / 2);
  if (!s || !t) return std::nullopt;
  if (sgn(u.im()) < 0) *t = -*t;
  GaussianInteger root(std::move(*s), std::move(*t));
  if (!(root * root == u)) return std::nullopt;
  return root;
}

std::int64_t sqrt_minus_one_mod(std::int64_t p) {
  if (p < 5 || mod_floor(p, 4) != 1 || !is_prime(p)) {
    throw DomainError("sqrt_minus_one_mod: " + std::to_string(p) + " is not a prime = 1 (mod 4)");
  }
  // c^((p-1)/4) squares to c^((p-1)/2) = -1 for any non-residue c.
  for (std::int64_t c = 2;; ++c) {
    if (powmod(c, (p - 1) / 2, p) == p - 1) {
      const std::int64_t z = powmod(c, (p - 1) / 4, p);
      return std::min(z, p - z);
    }
  }
}

SplitPrime split_prime(std::int64_t p) {
  const std::int64_t z = sqrt_minus_one_mod(p);
  const GaussianInteger g = g_gcd(GaussianInteger(p), GaussianInteger(z, 1L));
  if (g.norm() != p) throw InternalError("Gaussian gcd did not split " + std::to_string(p));
  // One coordinate is odd, the other even; the even one is 2b.
  mpz_class a = abs(g.re()), two_b = abs(g.im());
  if (mpz_odd_p(two_b.get_mpz_t()) != 0) std::swap(a, two_b);
  SplitPrime sp{p, a.get_si(), two_b.get_si() / 2};
  if (sp.a * sp.a + 4 * sp.b * sp.b != p || sp.a % 2 == 0 || sp.b <= 0) {
    throw InternalError("split_prime normalization failed for " + std::to_string(p));
  }
  return sp;
}

int quad_residue_symbol(const GaussianInteger& alpha, const GaussianInteger& pi) {
  const mpz_class n = pi.norm();
  if (!n.fits_slong_p() || mpz_even_p(n.get_mpz_t()) != 0 || !is_prime(n.get_si())) {
    throw DomainError("quad_residue_symbol: modulus " + pi.to_string() +
                      " must be a Gaussian prime of odd prime norm");
  }
  const std::int64_t p = n.get_si();
  // pi = u + v i = 0 in the residue field, so i maps to -u / v (mod p).
  const std::int64_t u = mod_floor(pi.re(), p);
  const std::int64_t v = mod_floor(pi.im(), p);
  const std::int64_t i_image = mod_floor(static_cast<std::int64_t>(
                                             static_cast<int128>(p - u) * invmod(v, p) % p),
                                         p);
  const std::int64_t r = static_cast<std::int64_t>(
      (static_cast<int128>(mod_floor(alpha.re(), p)) +
       static_cast<int128>(mod_floor(alpha.im(), p)) * i_image) %
      p);
  if (r == 0) throw DomainError("quad_residue_symbol: " + pi.to_string() + " divides " + alpha.to_string());
  const std::int64_t e = powmod(r, (p - 1) / 2, p);
  if (e == 1) return 1;
  if (e == p - 1) return -1;
  throw InternalError("Euler criterion produced a value other than +-1");
}

int jacobi(std::int64_t m, std::int64_t n) {
  if (n <= 0 || n % 2 == 0) throw DomainError("jacobi: modulus must be odd and positive");
  std::int64_t a = mod_floor(m, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int jacobi(const mpz_class& m, std::int64_t n) {
  if (n <= 0 || n % 2 == 0) throw DomainError("jacobi: modulus must be odd and positive");
  return jacobi(mod_floor(m, n), n);
}

int symbol_2_over(std::int64_t n) {
  if (n % 2 == 0) throw DomainError("symbol_2_over: argument must be odd");
  const std::int64_t r = mod_floor(n, 8);
  return (r == 1 || r == 7) ? 1 : -1;
}

int symbol_2_over(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t()) != 0) throw DomainError("symbol_2_over: argument must be odd");
  return symbol_2_over(mod_floor(n, 8));
}

}  // namespace unitsq
