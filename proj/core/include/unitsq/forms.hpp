#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

// Class groups of imaginary quadratic orders via reduced positive definite
// binary quadratic forms, and the structure of their 2-Sylow subgroups.
namespace unitsq {

/// a x^2 + b xy + c y^2 with discriminant b^2 - 4ac < 0 and a > 0.
struct QuadForm {
  mpz_class a;
  mpz_class b;
  mpz_class c;

  mpz_class discriminant() const { return b * b - 4 * a * c; }
  /// |b| <= a <= c, and b >= 0 if |b| = a or a = c.
  bool is_reduced() const;
  bool is_ambiguous() const;
  std::string to_string() const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

QuadForm principal_form(const mpz_class& disc);
QuadForm reduce(QuadForm f);
/// (a, -b, c), reduced.
QuadForm inverse(const QuadForm& f);
/// Gauss composition followed by reduction. Throws DomainError on
/// mismatched discriminants.
QuadForm compose(const QuadForm& f, const QuadForm& g);
QuadForm power(const QuadForm& f, std::uint64_t e);

/// D = 1 (mod 4) squarefree, or D = 4m with m = 2, 3 (mod 4) squarefree.
bool is_fundamental_discriminant(std::int64_t disc);

class ClassGroup {
 public:
  ClassGroup(std::int64_t disc, std::vector<QuadForm> classes);

  std::int64_t discriminant() const { return disc_; }
  const std::vector<QuadForm>& classes() const { return classes_; }
  std::uint64_t order() const { return classes_.size(); }
  const QuadForm& identity() const { return classes_.front(); }

  /// Position of a reduced form in classes(), or -1.
  std::ptrdiff_t index_of(const QuadForm& f) const;
  bool contains(const QuadForm& f) const { return index_of(f) >= 0; }

  /// Order of the class of f (f reduced and of this discriminant).
  std::uint64_t element_order(const QuadForm& f) const;

 private:
  std::int64_t disc_;
  std::vector<QuadForm> classes_;
  std::map<std::pair<mpz_class, mpz_class>, std::size_t> index_;
};

/// All primitive reduced forms of discriminant disc (< 0, = 0 or 1 mod 4),
/// principal form first, the rest ordered by (a, b).
ClassGroup enumerate_reduced(std::int64_t disc);

struct TwoSylow {
  std::uint64_t h2 = 1;
  unsigned rank = 0;
  std::vector<std::uint64_t> type;      ///< nondecreasing cyclic factor orders
  std::uint64_t ambiguous_classes = 1;  ///< classes with f o f = 1, identity included

  /// "2x4", or "1" for the trivial group.
  std::string type_string() const;
};

/// Sylow 2-subgroup structure, read off from the order profile of g^m over
/// all classes g, m the odd part of h.
TwoSylow two_sylow(const ClassGroup& group);
TwoSylow two_sylow(std::int64_t disc);

struct ClassGroupConditions {
  std::int64_t disc = 0;
  std::uint64_t h = 0;
  TwoSylow sylow;
  bool type_2x4 = false;  ///< 2-class group of type (2, 4)
  bool h2_is_8 = false;
};

/// Class group data of Q(sqrt(-p1 p2)) (discriminant -4 p1 p2) for
/// p1 = p2 = 5 (mod 8), (p1/p2) = -1.
ClassGroupConditions theorem_conditions_4_5(std::int64_t p1, std::int64_t p2);

}  // namespace unitsq
