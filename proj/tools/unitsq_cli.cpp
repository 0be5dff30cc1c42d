// unitsq: command-line front end for the unit-squareness library.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "unitsq/error.hpp"
#include "unitsq/forms.hpp"
#include "unitsq/qint.hpp"
#include "unitsq/report.hpp"
#include "unitsq/symbols.hpp"
#include "unitsq/verifier.hpp"
#include "unitsq/zi.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;

int cmd_unit(std::int64_t d) {
  const unitsq::FundamentalUnit u = unitsq::fundamental_unit(d);
  std::cout << "d: " << d << '\n'
            << "unit: " << u.element.to_string() << '\n'
            << "norm: " << u.norm << '\n'
            << "period_length: " << u.cf_period_length << '\n';
  return kExitOk;
}

int cmd_split(std::int64_t p) {
  const unitsq::SplitPrime sp = unitsq::split_prime(p);
  std::cout << "p: " << p << '\n'
            << "a: " << sp.a << '\n'
            << "b: " << sp.b << '\n'
            << "pi: " << sp.pi().to_string() << '\n'
            << "pi_bar: " << sp.pi_bar().to_string() << '\n';
  return kExitOk;
}

int cmd_symbols(std::int64_t p1, std::int64_t p2) {
  const unitsq::SymbolTriple t = unitsq::theorem_condition_2(p1, p2);
  std::cout << "s2: " << t.s2 << '\n'
            << "sA: " << t.sA << '\n'
            << "sB: " << t.sB << '\n'
            << "product: " << t.product << '\n'
            << "gaussian_side: " << unitsq::prop3_rhs(p1, p2) << '\n';
  return kExitOk;
}

int cmd_classgroup(std::int64_t disc, bool list_forms) {
  const unitsq::ClassGroup group = unitsq::enumerate_reduced(disc);
  const unitsq::TwoSylow sylow = unitsq::two_sylow(group);
  std::cout << "D: " << disc << '\n'
            << "h: " << group.order() << '\n'
            << "h2: " << sylow.h2 << '\n'
            << "rank: " << sylow.rank << '\n'
            << "sylow_type: " << sylow.type_string() << '\n'
            << "ambiguous_classes: " << sylow.ambiguous_classes << '\n';
  if (list_forms) {
    for (const auto& f : group.classes()) std::cout << f.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_verify(std::int64_t p1, std::int64_t p2, bool json, std::uint64_t budget) {
  const unitsq::PairReport r = unitsq::evaluate_pair(p1, p2, {true, budget});
  if (json) {
    std::cout << unitsq::pair_json(r) << '\n';
  } else {
    std::cout << "pair: (" << r.p1 << ", " << r.p2 << ")\n"
              << "symbols: s2=" << r.symbols.s2 << " sA=" << r.symbols.sA
              << " sB=" << r.symbols.sB << " product=" << r.symbols.product << '\n'
              << "condition1_square: " << (r.condition1_square ? "true" : "false") << '\n'
              << "condition2: " << r.condition2 << '\n'
              << "implied_q: " << r.implied_q << " (implied)\n"
              << "h: " << r.h << '\n'
              << "h2: " << r.h2 << '\n'
              << "sylow_type: " << r.sylow_type_string() << '\n'
              << "condition4: " << (r.condition4 ? "true" : "false") << '\n'
              << "condition5: " << (r.condition5 ? "true" : "false") << '\n'
              << "implied_capitulation: " << r.implied_capitulation() << '\n';
    if (r.decomposition) {
      std::cout << "decomposition: " << r.decomposition->p1p2.label() << ' '
                << r.decomposition->two_p1p2.label() << '\n';
    }
    std::cout << "side_checks: " << (r.side_checks_pass() ? "pass" : "FAIL") << '\n'
              << "consistent: " << (r.consistent ? "true" : "false") << '\n';
  }
  return r.consistent && r.side_checks_pass() ? kExitOk : kExitInconsistent;
}

int cmd_scan(const unitsq::ScanConfig& config) {
  const unitsq::ScanResult result = unitsq::scan(config);
  if (!config.output) unitsq::write_report(std::cout, result, config.format);
  const unitsq::ScanSummary& s = result.summary;
  std::cerr << "pairs: " << s.pairs << "  squares: " << s.squares
            << "  inconsistencies: " << s.inconsistencies
            << "  side_check_failures: " << s.side_check_failures
            << "  budget_exceeded: " << s.budget_exceeded << '\n';
  return s.inconsistencies == 0 && s.side_check_failures == 0 ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of when eps_2 eps_{p1p2} eps_{2p1p2} is a square in Q(sqrt 2, sqrt(p1 p2))"};
  app.require_subcommand(1);

  std::int64_t d = 0, p = 0, p1 = 0, p2 = 0, disc = 0;
  bool list_forms = false, verify_json = false;
  std::uint64_t verify_budget = unitsq::default_factor_budget;

  auto* unit = app.add_subcommand("unit", "Fundamental unit of Q(sqrt d)");
  unit->add_option("d", d, "Squarefree radicand >= 2")->required();

  auto* split = app.add_subcommand("split", "Split p = (a + 2bi)(a - 2bi) for p = 1 (mod 4)");
  split->add_option("p", p, "Prime = 1 (mod 4)")->required();

  auto* symbols = app.add_subcommand("symbols", "Quartic symbol triple for a prime pair");
  symbols->add_option("p1", p1)->required();
  symbols->add_option("p2", p2)->required();

  auto* classgroup = app.add_subcommand("classgroup", "Class group of a negative discriminant");
  classgroup->add_option("D", disc, "Negative discriminant = 0, 1 (mod 4)")->required()->allow_extra_args(false);
  classgroup->add_flag("--forms", list_forms, "List the reduced forms");

  auto* verify = app.add_subcommand("verify", "Evaluate every condition for one prime pair");
  verify->add_option("p1", p1)->required();
  verify->add_option("p2", p2)->required();
  verify->add_flag("--json", verify_json, "Emit the report as JSON");
  verify->add_option("--factor-budget", verify_budget, "Max bit length of y, b for square-part recovery");

  unitsq::ScanConfig config;
  std::string format = "csv";
  std::string output;
  auto* scan = app.add_subcommand("scan", "Evaluate all valid pairs with p1 p2 <= limit");
  scan->add_option("--limit", config.limit, "Upper bound on p1 p2")->required();
  scan->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--output", output, "Output path (default: stdout)");
  scan->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--factor-budget", config.factor_budget,
                   "Max bit length of y, b for square-part recovery");

  auto* eq12 = app.add_subcommand("check-eq12", "Check (sqrt(1+i) + sqrt(1-i))^2 = 2 eps_2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  // The negative discriminant is positional; CLI11 accepts "-260" there.
  try {
    if (*unit) return cmd_unit(d);
    if (*split) return cmd_split(p);
    if (*symbols) return cmd_symbols(p1, p2);
    if (*classgroup) return cmd_classgroup(disc, list_forms);
    if (*verify) return cmd_verify(p1, p2, verify_json, verify_budget);
    if (*scan) {
      config.format = unitsq::parse_format(format);
      if (!output.empty()) config.output = output;
      return cmd_scan(config);
    }
    if (*eq12) {
      const bool ok = unitsq::check_eq12();
      std::cout << (ok ? "true" : "false") << '\n';
      return ok ? kExitOk : kExitInconsistent;
    }
  } catch (const unitsq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
