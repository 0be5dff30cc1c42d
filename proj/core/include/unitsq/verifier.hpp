#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unitsq/forms.hpp"
#include "unitsq/kfield.hpp"
#include "unitsq/qint.hpp"
#include "unitsq/symbols.hpp"
#include "unitsq/zi.hpp"

// Per-pair evaluation of the equivalent squareness conditions, the Z[i]
// decomposition classifier, and range scans.
namespace unitsq {

struct PrimePair {
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  friend bool operator==(const PrimePair&, const PrimePair&) = default;
};

/// Pairs p1 < p2 of primes = 5 (mod 8) with p1 p2 <= limit and (p1/p2) = -1,
/// ordered by (p1 p2, p1).
std::vector<PrimePair> generate_pairs(std::int64_t limit);

/// Throws PreconditionError naming the first violated hypothesis.
void validate_theorem_pair(std::int64_t p1, std::int64_t p2);

/// Which Gaussian primes above p1, p2 divide t + s i together with pi1:
/// pi3 ("aligned") or conj(pi3) ("crossed").
enum class DivisorPattern { aligned, crossed };

/// Unit factor modulo squares of units: {1, -1} or {i, -i}.
enum class UnitClass { real, imaginary };

enum class DecomposedUnit { p1p2, two_p1p2 };

/// Shape of t + s i for the rational coordinate t of a unit:
///   eps_{p1p2}   = x + y sqrt(p1 p2):   x + s i = u gamma^2 pi1 pi'
///   eps_{2p1p2}  = a + b sqrt(2 p1 p2): a + s i = u (1 + i) gamma^2 pi1 pi'
/// where s = +-1 is the sign for which pi1 divides and pi' is pi3 or conj(pi3).
struct DecompositionPattern {
  DecomposedUnit which = DecomposedUnit::p1p2;
  DivisorPattern divisor = DivisorPattern::aligned;
  int sign = 1;
  std::optional<UnitClass> unit_class;        ///< absent when over budget
  std::optional<GaussianInteger> square_root;  ///< gamma

  /// "8.1", "8.2", "10.1" .. "10.4"; "aligned"/"crossed" without a unit
  /// class; a unit class outside the listed shapes is suffixed "/unit=1".
  std::string label() const;
};

struct Decomposition {
  DecompositionPattern p1p2;
  DecompositionPattern two_p1p2;
  bool budget_exceeded = false;
  /// Divisor patterns coincide, the combinations that make
  /// eps_2 eps_{p1p2} eps_{2p1p2} a square.
  bool predicts_square = false;
};

/// Maximum bit length of y (resp. b) for which the square part gamma and the
/// unit class are recovered.
inline constexpr std::uint64_t default_factor_budget = std::uint64_t{1} << 16;

Decomposition classify_decomposition(std::int64_t p1, std::int64_t p2,
                                     std::uint64_t factor_budget = default_factor_budget);
Decomposition classify_decomposition(const SplitPrime& first, const SplitPrime& second,
                                     const FundamentalUnit& unit_p1p2,
                                     const FundamentalUnit& unit_2p1p2,
                                     std::uint64_t factor_budget);

/// (sqrt(1+i) + cross_sign * sqrt(1-i))^2 == 2 eps_2, checked exactly:
/// true for cross_sign = +1, false for -1.
bool check_eq12(int cross_sign = 1);

struct PairReport {
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;

  SymbolTriple symbols;
  int condition2 = 0;             ///< symbol product
  bool condition1_square = false;  ///< eps_2 eps_{p1p2} eps_{2p1p2} square in K
  std::optional<SquareWitness> square_witness;
  int implied_q = 1;               ///< unit index, implied by condition 1
  std::uint64_t h = 0;             ///< h(-4 p1 p2)
  std::uint64_t h2 = 0;
  std::vector<std::uint64_t> sylow_type;
  unsigned sylow_rank = 0;
  std::uint64_t ambiguous_classes = 0;
  bool condition4 = false;  ///< 2-class group of type (2, 4)
  bool condition5 = false;  ///< h2 = 8
  bool implied_capitulation_is_2 = false;
  std::optional<Decomposition> decomposition;
  bool consistent = false;

  // Side checks on the same pair.
  bool unit_norms_minus_one = false;
  bool unit_p1p2_shape = false;   ///< x even, y odd, x^2 + 1 = y^2 p1 p2
  bool alpha1_agrees = false;     ///< c_1-only criterion matches the four-alpha search
  bool symbol_identity = false;   ///< Gaussian side equals symbol product
  bool decomposition_agrees = true;

  std::string sylow_type_string() const;
  std::string implied_capitulation() const;
  /// Every side check holds (the condition equivalence is `consistent`).
  bool side_checks_pass() const;
};

struct EvaluateOptions {
  bool classify = true;
  std::uint64_t factor_budget = default_factor_budget;
};

/// Runs the symbol, trace, and class-group pipelines for one pair.
PairReport evaluate_pair(std::int64_t p1, std::int64_t p2, const EvaluateOptions& options = {});

enum class OutputFormat { csv, json };

struct ScanConfig {
  std::int64_t limit = 0;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::filesystem::path> output;
  unsigned jobs = 1;
  std::uint64_t factor_budget = default_factor_budget;
  bool classify = true;
};

struct ScanSummary {
  std::size_t pairs = 0;
  std::size_t squares = 0;
  std::size_t inconsistencies = 0;
  std::size_t side_check_failures = 0;
  std::size_t budget_exceeded = 0;
};

struct ScanResult {
  std::vector<PairReport> reports;
  ScanSummary summary;
};

/// Throws DomainError for an invalid config and Error if the output cannot
/// be written. Reports are ordered by (p1 p2, p1) for any number of jobs.
ScanResult scan(const ScanConfig& config);

OutputFormat parse_format(const std::string& name);

}  // namespace unitsq
