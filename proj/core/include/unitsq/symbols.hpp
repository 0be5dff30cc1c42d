#pragma once

#include <cstdint>

#include <gmpxx.h>

// Rational quartic residue symbols and the two sides of the symbol identity
// linking them to Gaussian quadratic characters.
namespace unitsq {

/// ((p1 p2)/2)_4 * ((2 p1)/p2)_4 * ((2 p2)/p1)_4 and its factors.
struct SymbolTriple {
  int s2 = 0;  ///< ((p1 p2)/2)_4
  int sA = 0;  ///< ((2 p1)/p2)_4
  int sB = 0;  ///< ((2 p2)/p1)_4
  int product = 0;
};

/// ((p1 p2)/2)_4, defined as (-1)^((p1 p2 - 1)/8). Requires p1 p2 = 1 (mod 8).
int quartic_symbol_over_2(std::int64_t p1, std::int64_t p2);

/// (m/p)_4 in {+1, -1}: the value of m^((p-1)/4) mod p.
///
/// Defined only when p = 1 (mod 4) is prime, p does not divide m and m is a
/// quadratic residue mod p; DomainError otherwise.
int rational_quartic_symbol(const mpz_class& m, std::int64_t p);

/// The symbol triple for p1 = p2 = 5 (mod 8) with (p1/p2) = -1.
SymbolTriple theorem_condition_2(std::int64_t p1, std::int64_t p2);

/// The three Gaussian-side factors (pi3/pi1), (2/(a1+2b1)), (2/(a2+2b2)).
struct GaussianSideFactors {
  int pi_character = 0;
  int two_over_first = 0;
  int two_over_second = 0;
  int product() const { return pi_character * two_over_first * two_over_second; }
};

/// Gaussian-side factors with optional conjugation of pi1 and/or pi3.
/// Used to measure which individual factors depend on the conjugate choice.
GaussianSideFactors gaussian_side_factors(std::int64_t p1, std::int64_t p2,
                                          bool conjugate_first = false,
                                          bool conjugate_second = false);

/// Gaussian side of the identity, for p1 = p2 = 1 (mod 4) distinct primes
/// with (2/p1) = (2/p2) = (p1/p2).
int prop3_rhs(std::int64_t p1, std::int64_t p2);

/// Quartic-symbol side of the same identity, under the same hypothesis.
int prop3_lhs(std::int64_t p1, std::int64_t p2);

}  // namespace unitsq
