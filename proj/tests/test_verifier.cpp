#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "unitsq/arith.hpp"
#include "unitsq/error.hpp"
#include "unitsq/report.hpp"
#include "unitsq/verifier.hpp"

using namespace unitsq;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("unitsq_test_" + name);
}

}  // namespace

TEST_CASE("generate_pairs") {
  CHECK(generate_pairs(64).empty());
  CHECK(generate_pairs(0).empty());
  const auto p70 = generate_pairs(70);
  REQUIRE(p70.size() == 1);
  CHECK(p70[0] == PrimePair{5, 13});

  const auto p = generate_pairs(5000);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::size_t k = 0; k < p.size(); ++k) {
    CHECK(p[k].p1 < p[k].p2);
    CHECK(p[k].p1 % 8 == 5);
    CHECK(p[k].p2 % 8 == 5);
    CHECK(is_prime(p[k].p1));
    CHECK(is_prime(p[k].p2));
    CHECK(jacobi(p[k].p1, p[k].p2) == -1);
    CHECK(p[k].p1 * p[k].p2 <= 5000);
    CHECK(seen.insert({p[k].p1, p[k].p2}).second);
    if (k > 0) CHECK(p[k - 1].p1 * p[k - 1].p2 <= p[k].p1 * p[k].p2);
  }
  CHECK(seen.count({5, 37}) == 1);
  CHECK(seen.count({5, 29}) == 0);

  // Brute-force count.
  std::size_t count = 0;
  for (std::int64_t a = 5; a * a < 5000; a += 8)
    for (std::int64_t b = a + 8; a * b <= 5000; b += 8)
      if (is_prime(a) && is_prime(b) && jacobi(a, b) == -1) ++count;
  CHECK(count == p.size());
}

TEST_CASE("validate_theorem_pair names the failing hypothesis") {
  CHECK_NOTHROW(validate_theorem_pair(5, 13));
  const auto message = [](std::int64_t a, std::int64_t b) {
    try {
      validate_theorem_pair(a, b);
    } catch (const PreconditionError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(5, 29).find("(p1/p2)") != std::string::npos);
  CHECK(message(5, 17).find("5 (mod 8)") != std::string::npos);
  CHECK(message(5, 21).find("not prime") != std::string::npos);
  CHECK(message(13, 13).find("distinct") != std::string::npos);
  CHECK_THROWS_AS(evaluate_pair(5, 29), PreconditionError);
}

TEST_CASE("evaluate_pair on (5, 13)") {
  const PairReport r = evaluate_pair(5, 13);
  CHECK(r.symbols.s2 == 1);
  CHECK(r.symbols.sA == -1);
  CHECK(r.symbols.sB == 1);
  CHECK(r.condition2 == -1);
  CHECK(r.condition1_square);
  CHECK(r.square_witness.has_value());
  CHECK(r.implied_q == 2);
  CHECK(r.h == 8);
  CHECK(r.h2 == 8);
  CHECK(r.sylow_type_string() == "2x4");
  CHECK(r.condition4);
  CHECK(r.condition5);
  CHECK(r.consistent);
  CHECK(r.side_checks_pass());
  REQUIRE(r.decomposition.has_value());
  CHECK(r.decomposition->p1p2.label() == "8.1");
  CHECK(r.decomposition->two_p1p2.label() == "10.3");
  CHECK(r.decomposition->predicts_square);
}

TEST_CASE("evaluate_pair on (5, 37)") {
  const PairReport r = evaluate_pair(5, 37);
  CHECK(r.condition2 == 1);
  CHECK_FALSE(r.condition1_square);
  CHECK(r.implied_q == 1);
  CHECK(r.h == 16);
  CHECK(r.sylow_type_string() == "2x8");
  CHECK_FALSE(r.condition4);
  CHECK_FALSE(r.condition5);
  CHECK(r.consistent);
  CHECK(r.side_checks_pass());
  REQUIRE(r.decomposition.has_value());
  CHECK(r.decomposition->p1p2.label() == "8.1");
  CHECK(r.decomposition->two_p1p2.label() == "10.2");
  CHECK_FALSE(r.decomposition->predicts_square);
}

TEST_CASE("evaluate_pair is symmetric in the condition outcomes") {
  for (const PrimePair& p : generate_pairs(3000)) {
    const PairReport a = evaluate_pair(p.p1, p.p2);
    const PairReport b = evaluate_pair(p.p2, p.p1);
    REQUIRE(a.condition1_square == b.condition1_square);
    REQUIRE(a.condition2 == b.condition2);
    REQUIRE(a.h == b.h);
    REQUIRE(a.sylow_type == b.sylow_type);
    REQUIRE(a.consistent);
    REQUIRE(b.consistent);
  }
}

TEST_CASE("classify_decomposition on (5, 13)") {
  // eps_65 = 8 + sqrt(65): 8 + i = (2 + i)(3 + 2i) up to units.
  const GaussianInteger t(8L, 1L);
  CHECK(g_divides(split_prime(5).pi(), t) != g_divides(split_prime(5).pi_bar(), t));
  const Decomposition d = classify_decomposition(5, 13);
  CHECK_FALSE(d.budget_exceeded);
  CHECK(d.p1p2.unit_class == UnitClass::imaginary);
  CHECK(d.p1p2.square_root.has_value());
  CHECK(d.predicts_square);

  const Decomposition small = classify_decomposition(5, 13, 0);
  CHECK(small.budget_exceeded);
  CHECK_FALSE(small.p1p2.unit_class.has_value());
  CHECK(small.p1p2.divisor == d.p1p2.divisor);
  CHECK(small.two_p1p2.divisor == d.two_p1p2.divisor);
  CHECK(small.predicts_square == d.predicts_square);
  CHECK((small.p1p2.label() == "aligned" || small.p1p2.label() == "crossed"));
}

TEST_CASE("decomposition prediction agrees with the squareness test") {
  for (const PrimePair& p : generate_pairs(20000)) {
    const PairReport r = evaluate_pair(p.p1, p.p2);
    REQUIRE(r.decomposition.has_value());
    REQUIRE(r.decomposition->predicts_square == r.condition1_square);
    REQUIRE(r.decomposition_agrees);
  }
}

TEST_CASE("check_eq12") {
  CHECK(check_eq12());
  CHECK(check_eq12(1));
  CHECK_FALSE(check_eq12(-1));
  CHECK(check_eq12(1) == check_eq12(1));
  CHECK_THROWS_AS(check_eq12(0), DomainError);
}

TEST_CASE("scan summaries") {
  ScanConfig c;
  c.limit = 70;
  ScanResult r = scan(c);
  CHECK(r.summary.pairs == 1);
  CHECK(r.summary.squares == 1);
  CHECK(r.summary.inconsistencies == 0);

  c.limit = 64;
  r = scan(c);
  CHECK(r.summary.pairs == 0);
  CHECK(r.reports.empty());

  c.limit = 200;
  r = scan(c);
  CHECK(r.summary.pairs == r.reports.size());
  CHECK(r.summary.inconsistencies == 0);
  CHECK(r.summary.side_check_failures == 0);
  bool has_5_37 = false;
  for (const auto& rep : r.reports) has_5_37 |= (rep.p1 == 5 && rep.p2 == 37);
  CHECK(has_5_37);

  c.jobs = 0;
  CHECK_THROWS_AS(scan(c), DomainError);
  c.jobs = 1;
  c.limit = -1;
  CHECK_THROWS_AS(scan(c), DomainError);
}

TEST_CASE("scan output is independent of the job count") {
  for (OutputFormat f : {OutputFormat::csv, OutputFormat::json}) {
    ScanConfig c;
    c.limit = 20000;
    c.format = f;
    c.jobs = 1;
    c.output = temp_path("jobs1");
    scan(c);
    c.jobs = 8;
    c.output = temp_path("jobs8");
    scan(c);
    const std::string a = slurp(temp_path("jobs1")), b = slurp(temp_path("jobs8"));
    CHECK_FALSE(a.empty());
    CHECK(a == b);
    std::filesystem::remove(temp_path("jobs1"));
    std::filesystem::remove(temp_path("jobs8"));
  }
}

TEST_CASE("scan to an unwritable path throws") {
  ScanConfig c;
  c.limit = 70;
  c.output = std::filesystem::path("/nonexistent-dir/sub/out.csv");
  CHECK_THROWS_AS(scan(c), Error);
}

TEST_CASE("parse_format") {
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_format("xml"), DomainError);
}
