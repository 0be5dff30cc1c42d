#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

// Exact arithmetic in the maximal order of a real quadratic field Q(sqrt d)
// and fundamental units via continued fractions.
namespace unitsq {

/// The element (x + y*sqrt(d)) / denom of the maximal order of Q(sqrt d).
///
/// denom is 1 or 2; denom == 2 requires d = 1 (mod 4) with x and y both
/// odd. Values are kept in this canonical form, so equality is structural.
class QuadraticInteger {
 public:
  /// Validates d (squarefree, >= 2) and canonicalizes. Throws DomainError if
  /// the element does not lie in the maximal order.
  QuadraticInteger(std::int64_t d, mpz_class x, mpz_class y, unsigned denom = 1);

  static QuadraticInteger rational(std::int64_t d, const mpz_class& x);

  std::int64_t radicand() const { return d_; }
  const mpz_class& x() const { return x_; }
  const mpz_class& y() const { return y_; }
  unsigned denom() const { return denom_; }

  /// Sign of the real embedding with sqrt(d) > 0, computed exactly.
  int sign() const;

  QuadraticInteger operator-() const;
  friend QuadraticInteger operator+(const QuadraticInteger& u, const QuadraticInteger& v);
  friend QuadraticInteger operator-(const QuadraticInteger& u, const QuadraticInteger& v);
  friend QuadraticInteger operator*(const QuadraticInteger& u, const QuadraticInteger& v);
  friend bool operator==(const QuadraticInteger& u, const QuadraticInteger& v);

  std::string to_string() const;

 private:
  struct Unchecked {};
  QuadraticInteger(Unchecked, std::int64_t d, mpz_class x, mpz_class y, unsigned denom);
  void canonicalize();

  std::int64_t d_;
  mpz_class x_;
  mpz_class y_;
  unsigned denom_;
};

/// Galois conjugate (x - y*sqrt(d)) / denom.
QuadraticInteger conj(const QuadraticInteger& u);

/// Field norm u * conj(u), a rational integer for elements of the order.
mpz_class norm(const QuadraticInteger& u);

/// a < b in the real embedding.
bool less(const QuadraticInteger& a, const QuadraticInteger& b);

/// Output of the PQa continued-fraction expansion of sqrt(d) or (1 + sqrt d)/2.
struct ContinuedFraction {
  std::int64_t d = 0;
  bool half_integer_basis = false;
  std::int64_t leading = 0;               ///< a_0
  std::vector<std::int64_t> period;       ///< a_1 .. a_l
  std::size_t period_length() const { return period.size(); }
};

ContinuedFraction cf_expand(std::int64_t d, bool half_integer_basis);

struct FundamentalUnit {
  QuadraticInteger element;
  int norm = 0;                      ///< +1 or -1
  std::size_t cf_period_length = 0;  ///< of the expansion that produced element
};

/// Fundamental unit (> 1) of the maximal order of Q(sqrt d).
///
/// Expands sqrt(d), and for d = 1 (mod 4) also (1 + sqrt d)/2, and keeps the
/// smaller unit. No floating point is involved.
FundamentalUnit fundamental_unit(std::int64_t d);

/// True iff the fundamental unit of Q(sqrt(2 p1 p2)) has norm -1.
///
/// Throws PreconditionError unless p1, p2 are distinct primes = 1 (mod 4)
/// with at least two of (p1/p2), (2/p1), (2/p2) equal to -1. Under that
/// hypothesis the answer is always true.
bool lemma2_norm_check(std::int64_t p1, std::int64_t p2);

}  // namespace unitsq
