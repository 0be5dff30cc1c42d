#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "unitsq/qint.hpp"

// Exact arithmetic in K = Q(sqrt d1, sqrt d2) and the trace criterion deciding
// whether the product of the three quadratic fundamental units is a square.
namespace unitsq {

/// Which quadratic subfield of K an element comes from.
enum class Subfield { first, second, product };

/// c0 + c1 sqrt(d1) + c2 sqrt(d2) + c3 sqrt(d1 d2) with exact rational
/// coefficients; d1 != d2 coprime squarefree integers >= 2.
class BiquadElement {
 public:
  BiquadElement(std::int64_t d1, std::int64_t d2);
  BiquadElement(std::int64_t d1, std::int64_t d2, std::array<mpq_class, 4> coeffs);

  static BiquadElement rational(std::int64_t d1, std::int64_t d2, const mpq_class& value);

  std::int64_t d1() const { return d1_; }
  std::int64_t d2() const { return d2_; }
  const std::array<mpq_class, 4>& coeffs() const { return c_; }
  const mpq_class& operator[](std::size_t k) const { return c_[k]; }

  bool is_rational() const;
  /// Image under sqrt(d1) -> s1 sqrt(d1), sqrt(d2) -> s2 sqrt(d2), s1, s2 = +-1.
  BiquadElement galois(int s1, int s2) const;

  BiquadElement operator-() const;
  friend BiquadElement operator+(const BiquadElement& u, const BiquadElement& v);
  friend BiquadElement operator-(const BiquadElement& u, const BiquadElement& v);
  friend BiquadElement operator*(const BiquadElement& u, const BiquadElement& v);
  friend BiquadElement operator*(const mpq_class& k, const BiquadElement& v);
  friend bool operator==(const BiquadElement& u, const BiquadElement& v);

  std::string to_string() const;

 private:
  std::int64_t d1_;
  std::int64_t d2_;
  std::array<mpq_class, 4> c_;
};

BiquadElement embed(const QuadraticInteger& u, std::int64_t d1, std::int64_t d2, Subfield which);

/// Trace from K to Q, i.e. 4 * c0.
mpq_class ktrace(const BiquadElement& u);

/// Norm from K to Q as the product of the four Galois conjugates.
mpq_class knorm(const BiquadElement& u);

/// Exact square test for a rational in K: q is a square in K iff one of
/// q, d1 q, d2 q, d1 d2 q is the square of a rational.
struct RationalSquareWitness {
  unsigned exponent_d1 = 0;  ///< i in d1^i d2^k q
  unsigned exponent_d2 = 0;  ///< k in d1^i d2^k q
  mpq_class root;            ///< sqrt(d1^i d2^k q) >= 0
};
std::optional<RationalSquareWitness> rational_square_in_K(const mpq_class& q, std::int64_t d1,
                                                          std::int64_t d2);

struct SquareWitness {
  int j = 0;  ///< 1-based index of alpha_j
  RationalSquareWitness scaling;
};

/// alpha_1..alpha_4 = E +- e1 +- e2 +- e3 (sign patterns (+,+,-), (+,-,+),
/// (-,+,+), (-,-,-)) with E = e1 e2 e3, and c_j = trace(alpha_j).
struct KubotaData {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  BiquadElement product;          ///< e1 e2 e3
  std::array<BiquadElement, 4> alphas;
  std::array<mpq_class, 4> cs;
};

/// Builds the data and verifies alpha_j^2 = c_j e1 e2 e3 for every j.
/// Throws PreconditionError if a norm is not -1 or the radicands do not
/// form (d1, d2, d1 d2); InternalError if the identity fails.
KubotaData kubota_data(const FundamentalUnit& e1, const FundamentalUnit& e2,
                       const FundamentalUnit& e3);

struct SquarenessVerdict {
  bool square = false;
  std::optional<SquareWitness> witness;  ///< first j (then scaling) found
  bool alpha1_criterion = false;         ///< scaled c_1 test alone
  bool criteria_agree = false;
};

/// e1 e2 e3 is a square in K iff some positive c_j is a square in K.
SquarenessVerdict is_square_in_K(const KubotaData& data);

}  // namespace unitsq
