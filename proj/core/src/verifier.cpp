#include "unitsq/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "unitsq/arith.hpp"
#include "unitsq/error.hpp"
#include "unitsq/report.hpp"

namespace unitsq {

std::vector<PrimePair> generate_pairs(std::int64_t limit) {
  std::vector<PrimePair> out;
  if (limit < 65) return out;
  std::vector<std::int64_t> candidates;
  for (std::int64_t p : primes_up_to(limit / 5)) {
    if (p % 8 == 5) candidates.push_back(p);
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::int64_t p1 = candidates[i];
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const std::int64_t p2 = candidates[j];
      if (p1 * p2 > limit) break;
      if (jacobi(p1, p2) == -1) out.push_back({p1, p2});
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimePair& x, const PrimePair& y) {
    const std::int64_t nx = x.p1 * x.p2, ny = y.p1 * y.p2;
    return nx != ny ? nx < ny : x.p1 < y.p1;
  });
  return out;
}

void validate_theorem_pair(std::int64_t p1, std::int64_t p2) {
  const auto name = [](std::int64_t p) { return std::to_string(p); };
  if (!is_prime(p1)) throw PreconditionError("p1 = " + name(p1) + " is not prime");
  if (!is_prime(p2)) throw PreconditionError("p2 = " + name(p2) + " is not prime");
  if (p1 == p2) throw PreconditionError("p1 = p2 = " + name(p1) + "; the primes must be distinct");
  if (p1 % 8 != 5) throw PreconditionError("p1 = " + name(p1) + " is not = 5 (mod 8)");
  if (p2 % 8 != 5) throw PreconditionError("p2 = " + name(p2) + " is not = 5 (mod 8)");
  if (jacobi(p1, p2) != -1) {
    throw PreconditionError("(p1/p2) != -1 for (" + name(p1) + ", " + name(p2) + ")");
  }
}

std::string DecompositionPattern::label() const {
  const bool aligned = divisor == DivisorPattern::aligned;
  if (!unit_class) return aligned ? "aligned" : "crossed";
  const bool imaginary = *unit_class == UnitClass::imaginary;
  if (which == DecomposedUnit::p1p2) {
    // Only the unit class {i, -i} occurs for the norm -1 unit of Q(sqrt(p1 p2)).
    if (!imaginary) return std::string(aligned ? "aligned" : "crossed") + "/unit=1";
    return aligned ? "8.1" : "8.2";
  }
  if (!imaginary) return aligned ? "10.1" : "10.2";
  return aligned ? "10.3" : "10.4";
}

namespace {

// Locates pi1 and its partner in t + s i and, within budget, splits the
// cofactor into unit class times a square.
DecompositionPattern classify_one(DecomposedUnit which, const mpz_class& t,
                                  const SplitPrime& first, const SplitPrime& second,
                                  bool budget_ok) {
  const GaussianInteger pi1 = first.pi(), pi1_bar = first.pi_bar();
  const GaussianInteger pi3 = second.pi(), pi3_bar = second.pi_bar();

  DecompositionPattern pat;
  pat.which = which;
  const GaussianInteger plus(t, 1L), minus(t, -1L);
  if (g_divides(pi1, plus)) {
    pat.sign = 1;
  } else if (g_divides(pi1, minus)) {
    pat.sign = -1;
  } else {
    throw InternalError("pi1 divides neither t + i nor t - i");
  }
  const GaussianInteger& w = pat.sign > 0 ? plus : minus;
  if (g_divides(pi1_bar, w)) throw InternalError("both pi1 and conj(pi1) divide t + s i");
  const bool has3 = g_divides(pi3, w), has3_bar = g_divides(pi3_bar, w);
  if (has3 == has3_bar) throw InternalError("expected exactly one of pi3, conj(pi3) to divide t + s i");
  pat.divisor = has3 ? DivisorPattern::aligned : DivisorPattern::crossed;

  if (!budget_ok) return pat;
  GaussianInteger rest = g_div_exact(w, pi1 * (has3 ? pi3 : pi3_bar));
  if (which == DecomposedUnit::two_p1p2) rest = g_div_exact(rest, GaussianInteger(1L, 1L));
  if (auto root = g_sqrt(rest)) {
    pat.unit_class = UnitClass::real;
    pat.square_root = std::move(*root);
  } else if (auto root_i = g_sqrt(GaussianInteger(0L, -1L) * rest)) {
    pat.unit_class = UnitClass::imaginary;
    pat.square_root = std::move(*root_i);
  } else {
    throw InternalError("cofactor of t + s i is not a unit times a square");
  }
  return pat;
}

}  // namespace

Decomposition classify_decomposition(const SplitPrime& first, const SplitPrime& second,
                                     const FundamentalUnit& unit_p1p2,
                                     const FundamentalUnit& unit_2p1p2,
                                     std::uint64_t factor_budget) {
  const std::int64_t m = first.p * second.p;
  const QuadraticInteger& e = unit_p1p2.element;
  const QuadraticInteger& f = unit_2p1p2.element;
  if (e.radicand() != m || f.radicand() != 2 * m) {
    throw DomainError("units do not belong to Q(sqrt(p1 p2)) and Q(sqrt(2 p1 p2))");
  }
  if (e.denom() != 1 || mpz_odd_p(e.x().get_mpz_t()) != 0) {
    throw PreconditionError("eps_{p1p2} is not of the form x + y sqrt(p1 p2) with x even");
  }
  const auto within = [factor_budget](const mpz_class& v) {
    return mpz_sizeinbase(v.get_mpz_t(), 2) <= factor_budget;
  };
  Decomposition out;
  const bool ok_e = within(e.y()), ok_f = within(f.y());
  out.budget_exceeded = !(ok_e && ok_f);
  out.p1p2 = classify_one(DecomposedUnit::p1p2, e.x(), first, second, ok_e);
  // Patterns for eps_{2p1p2} use its own rational coordinate a.
  out.two_p1p2 = classify_one(DecomposedUnit::two_p1p2, f.x(), first, second, ok_f);
  out.predicts_square = out.p1p2.divisor == out.two_p1p2.divisor;
  return out;
}

Decomposition classify_decomposition(std::int64_t p1, std::int64_t p2,
                                     std::uint64_t factor_budget) {
  validate_theorem_pair(p1, p2);
  return classify_decomposition(split_prime(p1), split_prime(p2), fundamental_unit(p1 * p2),
                                fundamental_unit(2 * p1 * p2), factor_budget);
}

bool check_eq12(int cross_sign) {
  if (cross_sign != 1 && cross_sign != -1) throw DomainError("cross_sign must be +1 or -1");
  const GaussianInteger one_plus_i(1L, 1L), one_minus_i(1L, -1L);
  // (r1 + s r2)^2 = r1^2 + r2^2 + 2 s r1 r2 with r1^2 = 1+i, r2^2 = 1-i and
  // r1 r2 the positive root of (1+i)(1-i).
  const GaussianInteger squares = one_plus_i + one_minus_i;
  const GaussianInteger cross = one_plus_i * one_minus_i;
  if (sgn(squares.im()) != 0 || sgn(cross.im()) != 0 || cross.re() != 2) {
    throw InternalError("(1+i) + (1-i) or (1+i)(1-i) is not the expected rational");
  }
  const QuadraticInteger lhs(2, squares.re(), 2 * cross_sign);
  const QuadraticInteger rhs = QuadraticInteger::rational(2, 2) * fundamental_unit(2).element;
  return lhs == rhs;
}

std::string PairReport::sylow_type_string() const {
  TwoSylow t;
  t.type = sylow_type;
  return t.type_string();
}

std::string PairReport::implied_capitulation() const {
  return implied_capitulation_is_2 ? "2" : "not 2 (implied)";
}

bool PairReport::side_checks_pass() const {
  return unit_norms_minus_one && unit_p1p2_shape && alpha1_agrees && symbol_identity &&
         decomposition_agrees && sylow_rank == 2 && ambiguous_classes == 4;
}

PairReport evaluate_pair(std::int64_t p1, std::int64_t p2, const EvaluateOptions& options) {
  validate_theorem_pair(p1, p2);
  const std::int64_t m = p1 * p2;

  PairReport r;
  r.p1 = p1;
  r.p2 = p2;

  const FundamentalUnit e2 = fundamental_unit(2);
  const FundamentalUnit em = fundamental_unit(m);
  const FundamentalUnit e2m = fundamental_unit(2 * m);
  r.unit_norms_minus_one = e2.norm == -1 && em.norm == -1 && e2m.norm == -1;
  {
    const QuadraticInteger& u = em.element;
    r.unit_p1p2_shape = u.denom() == 1 && mpz_even_p(u.x().get_mpz_t()) != 0 &&
                        mpz_odd_p(u.y().get_mpz_t()) != 0 &&
                        u.x() * u.x() + 1 == u.y() * u.y() * to_mpz(m);
  }

  r.symbols = theorem_condition_2(p1, p2);
  r.condition2 = r.symbols.product;
  r.symbol_identity = prop3_rhs(p1, p2) == r.condition2;

  if (r.unit_norms_minus_one) {
    const KubotaData data = kubota_data(e2, em, e2m);
    const SquarenessVerdict verdict = is_square_in_K(data);
    r.condition1_square = verdict.square;
    r.square_witness = verdict.witness;
    r.alpha1_agrees = verdict.criteria_agree;
  }
  r.implied_q = r.condition1_square ? 2 : 1;
  r.implied_capitulation_is_2 = r.condition1_square;

  const ClassGroupConditions cg = theorem_conditions_4_5(p1, p2);
  r.h = cg.h;
  r.h2 = cg.sylow.h2;
  r.sylow_type = cg.sylow.type;
  r.sylow_rank = cg.sylow.rank;
  r.ambiguous_classes = cg.sylow.ambiguous_classes;
  r.condition4 = cg.type_2x4;
  r.condition5 = cg.h2_is_8;

  if (options.classify && r.unit_p1p2_shape) {
    r.decomposition = classify_decomposition(split_prime(p1), split_prime(p2), em, e2m,
                                             options.factor_budget);
    r.decomposition_agrees = r.decomposition->predicts_square == r.condition1_square;
  }

  const bool c1 = r.condition1_square;
  r.consistent = c1 == (r.condition2 == -1) && c1 == r.condition4 && c1 == r.condition5;
  return r;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw DomainError("unknown format '" + name + "' (expected csv or json)");
}

ScanResult scan(const ScanConfig& config) {
  if (config.jobs == 0) throw DomainError("jobs must be at least 1");
  if (config.limit < 0) throw DomainError("limit must be non-negative");

  std::ofstream file;
  if (config.output) {
    file.open(*config.output, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot write output file " + config.output->string());
  }

  const std::vector<PrimePair> pairs = generate_pairs(config.limit);
  ScanResult result;
  result.reports.resize(pairs.size());

  const EvaluateOptions options{config.classify, config.factor_budget};
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= pairs.size()) return;
      try {
        result.reports[k] = evaluate_pair(pairs[k].p1, pairs[k].p2, options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(pairs.size());
        return;
      }
    }
  };
  const unsigned width = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(
                                                                           std::max<std::size_t>(pairs.size(), 1))));
  std::vector<std::thread> threads;
  threads.reserve(width);
  for (unsigned t = 0; t < width; ++t) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);

  // generate_pairs already yields (p1 p2, p1) order; slots are filled in place.
  ScanSummary& s = result.summary;
  s.pairs = result.reports.size();
  for (const PairReport& r : result.reports) {
    s.squares += r.condition1_square ? 1 : 0;
    s.inconsistencies += r.consistent ? 0 : 1;
    s.side_check_failures += r.side_checks_pass() ? 0 : 1;
    s.budget_exceeded += (r.decomposition && r.decomposition->budget_exceeded) ? 1 : 0;
  }

  if (config.output) {
    write_report(file, result, config.format);
    file.flush();
    if (!file) throw Error("failed writing " + config.output->string());
  }
  return result;
}

}  // namespace unitsq
