#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

// Gaussian integers: Euclidean arithmetic, splitting of primes p = 1 (mod 4),
// quadratic residue symbols in Z[i], and rational Jacobi symbols.
namespace unitsq {

class GaussianInteger {
 public:
  GaussianInteger() = default;
  GaussianInteger(mpz_class re, mpz_class im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianInteger(long re, long im = 0) : re_(re), im_(im) {}

  const mpz_class& re() const { return re_; }
  const mpz_class& im() const { return im_; }

  mpz_class norm() const { return re_ * re_ + im_ * im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_unit() const { return norm() == 1; }

  GaussianInteger operator-() const { return {-re_, -im_}; }
  friend GaussianInteger operator+(const GaussianInteger& u, const GaussianInteger& v) {
    return {u.re_ + v.re_, u.im_ + v.im_};
  }
  friend GaussianInteger operator-(const GaussianInteger& u, const GaussianInteger& v) {
    return {u.re_ - v.re_, u.im_ - v.im_};
  }
  friend GaussianInteger operator*(const GaussianInteger& u, const GaussianInteger& v) {
    return {u.re_ * v.re_ - u.im_ * v.im_, u.re_ * v.im_ + u.im_ * v.re_};
  }
  friend bool operator==(const GaussianInteger& u, const GaussianInteger& v) {
    return u.re_ == v.re_ && u.im_ == v.im_;
  }

  std::string to_string() const;

 private:
  mpz_class re_;
  mpz_class im_;
};

GaussianInteger conj(const GaussianInteger& u);

/// True if u = unit * v for one of the four units 1, i, -1, -i.
bool is_associate(const GaussianInteger& u, const GaussianInteger& v);

/// Quotient rounded coordinate-wise to the nearest integer; m != 0.
GaussianInteger g_div_round(const GaussianInteger& u, const GaussianInteger& m);
/// u - m * g_div_round(u, m); its norm is at most N(m)/2.
GaussianInteger g_mod(const GaussianInteger& u, const GaussianInteger& m);
/// Exact quotient; throws DomainError when m does not divide u.
GaussianInteger g_div_exact(const GaussianInteger& u, const GaussianInteger& m);
bool g_divides(const GaussianInteger& m, const GaussianInteger& u);
/// A greatest common divisor, determined up to units.
GaussianInteger g_gcd(GaussianInteger u, GaussianInteger v);
/// u^e mod m by square-and-multiply, reducing after each step.
GaussianInteger g_powmod(const GaussianInteger& u, const mpz_class& e, const GaussianInteger& m);
/// s + t i with (s + t i)^2 = u, if u is a square in Z[i].
std::optional<GaussianInteger> g_sqrt(const GaussianInteger& u);

/// The Gaussian factorization p = (a + 2bi)(a - 2bi) of a prime p = 1 (mod 4).
///
/// Normalized with a > 0 odd and b > 0, so pi() has odd real part and even
/// imaginary part. This fixes pi up to complex conjugation.
struct SplitPrime {
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  GaussianInteger pi() const { return {a, 2 * b}; }
  GaussianInteger pi_bar() const { return {a, -2 * b}; }
  /// a + 2b, the modulus appearing in (2 / (a + 2b)).
  std::int64_t a_plus_2b() const { return a + 2 * b; }
};

/// z with z^2 = -1 (mod p) and 0 < z < p.
std::int64_t sqrt_minus_one_mod(std::int64_t p);

/// Splits p via gcd(p, z + i) in Z[i], then normalizes.
SplitPrime split_prime(std::int64_t p);

/// Quadratic character (alpha / pi) in Z[i] for a prime pi of odd prime norm
/// p: the value of alpha^((p-1)/2) in Z[i]/(pi) = F_p, returned as +1 or -1.
int quad_residue_symbol(const GaussianInteger& alpha, const GaussianInteger& pi);

/// Jacobi symbol (m / n) for odd n >= 1.
int jacobi(std::int64_t m, std::int64_t n);
int jacobi(const mpz_class& m, std::int64_t n);

/// (2 / n) = (-1)^((n^2 - 1)/8) for odd n, which may be negative.
int symbol_2_over(std::int64_t n);
int symbol_2_over(const mpz_class& n);

}  // namespace unitsq
