#include "unitsq/symbols.hpp"

#include <string>

#include "unitsq/arith.hpp"
#include "unitsq/error.hpp"
#include "unitsq/zi.hpp"

namespace unitsq {

namespace {

std::string pair_str(std::int64_t p1, std::int64_t p2) {
  return "(" + std::to_string(p1) + ", " + std::to_string(p2) + ")";
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
}

void require_identity_hypothesis(std::int64_t p1, std::int64_t p2) {
  require_prime(p1);
  require_prime(p2);
  if (p1 == p2) throw PreconditionError("p1 and p2 must be distinct");
  if (mod_floor(p1, 4) != 1 || mod_floor(p2, 4) != 1) {
    throw PreconditionError("p1 = p2 = 1 (mod 4) fails for " + pair_str(p1, p2));
  }
  const int t1 = symbol_2_over(p1), t2 = symbol_2_over(p2), q = jacobi(p1, p2);
  if (t1 != t2 || t2 != q) {
    throw PreconditionError("(2/p1) = (2/p2) = (p1/p2) fails for " + pair_str(p1, p2));
  }
}

}  // namespace

int quartic_symbol_over_2(std::int64_t p1, std::int64_t p2) {
  const int128 n = static_cast<int128>(p1) * p2;
  if (n <= 0 || n % 8 != 1) {
    throw DomainError("((p1 p2)/2)_4 requires p1 p2 = 1 (mod 8); got " + pair_str(p1, p2));
  }
  return ((n - 1) / 8) % 2 == 0 ? 1 : -1;
}

int rational_quartic_symbol(const mpz_class& m, std::int64_t p) {
  if (!is_prime(p) || p == 2) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (p % 4 != 1) throw DomainError("quartic symbol needs p = 1 (mod 4), got " + std::to_string(p));
  const std::int64_t r = mod_floor(m, p);
  if (r == 0) throw DomainError(std::to_string(p) + " divides " + m.get_str());
  if (jacobi(r, p) != 1) {
    throw DomainError("quartic symbol undefined: " + m.get_str() + " is not a square mod " +
                      std::to_string(p));
  }
  const std::int64_t v = powmod(r, (p - 1) / 4, p);
  if (v == 1) return 1;
  if (v == p - 1) return -1;
  throw InternalError("m^((p-1)/4) is not +-1 for a quadratic residue m");
}

SymbolTriple theorem_condition_2(std::int64_t p1, std::int64_t p2) {
  require_prime(p1);
  require_prime(p2);
  if (p1 == p2) throw PreconditionError("p1 and p2 must be distinct");
  if (mod_floor(p1, 8) != 5 || mod_floor(p2, 8) != 5) {
    throw PreconditionError("p1 = p2 = 5 (mod 8) fails for " + pair_str(p1, p2));
  }
  if (jacobi(p1, p2) != -1) throw PreconditionError("(p1/p2) != -1 for " + pair_str(p1, p2));
  SymbolTriple t;
  t.s2 = quartic_symbol_over_2(p1, p2);
  t.sA = rational_quartic_symbol(to_mpz(2 * p1), p2);
  t.sB = rational_quartic_symbol(to_mpz(2 * p2), p1);
  t.product = t.s2 * t.sA * t.sB;
  return t;
}

GaussianSideFactors gaussian_side_factors(std::int64_t p1, std::int64_t p2, bool conjugate_first,
                                          bool conjugate_second) {
  require_identity_hypothesis(p1, p2);
  SplitPrime first = split_prime(p1);
  SplitPrime second = split_prime(p2);
  // Conjugating pi = a + 2bi amounts to b -> -b.
  if (conjugate_first) first.b = -first.b;
  if (conjugate_second) second.b = -second.b;
  GaussianSideFactors f;
  f.pi_character = quad_residue_symbol(second.pi(), first.pi());
  f.two_over_first = symbol_2_over(first.a_plus_2b());
  f.two_over_second = symbol_2_over(second.a_plus_2b());
  return f;
}

int prop3_rhs(std::int64_t p1, std::int64_t p2) { return gaussian_side_factors(p1, p2).product(); }

int prop3_lhs(std::int64_t p1, std::int64_t p2) {
  require_identity_hypothesis(p1, p2);
  return quartic_symbol_over_2(p1, p2) * rational_quartic_symbol(to_mpz(2 * p1), p2) *
         rational_quartic_symbol(to_mpz(2 * p2), p1);
}

}  // namespace unitsq
