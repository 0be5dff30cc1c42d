#include "unitsq/report.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace unitsq {

namespace {

using Json = nlohmann::ordered_json;

const char* flag(bool b) { return b ? "true" : "false"; }

std::string decomposition_label(const PairReport& r, bool p1p2) {
  if (!r.decomposition) return "-";
  return p1p2 ? r.decomposition->p1p2.label() : r.decomposition->two_p1p2.label();
}

Json pattern_json(const DecompositionPattern& p) {
  Json j;
  j["label"] = p.label();
  j["divisor_pattern"] = p.divisor == DivisorPattern::aligned ? "aligned" : "crossed";
  j["sign"] = p.sign;
  if (p.unit_class) {
    j["unit_class"] = *p.unit_class == UnitClass::real ? "1" : "i";
  } else {
    j["unit_class"] = nullptr;
  }
  return j;
}

Json to_json(const PairReport& r) {
  Json j;
  j["p1"] = r.p1;
  j["p2"] = r.p2;
  j["s2"] = r.symbols.s2;
  j["sA"] = r.symbols.sA;
  j["sB"] = r.symbols.sB;
  j["product"] = r.symbols.product;
  j["square"] = r.condition1_square;
  j["implied_q"] = r.implied_q;
  j["h"] = r.h;
  j["h2"] = r.h2;
  j["sylow_type"] = r.sylow_type_string();
  j["condition4"] = r.condition4;
  j["condition5"] = r.condition5;
  j["decomposition_p1p2"] = decomposition_label(r, true);
  j["decomposition_2p1p2"] = decomposition_label(r, false);
  j["consistent"] = r.consistent;

  j["implied_capitulation"] = r.implied_capitulation();
  j["sylow_rank"] = r.sylow_rank;
  j["ambiguous_classes"] = r.ambiguous_classes;
  if (r.square_witness) {
    j["square_witness"] = {{"j", r.square_witness->j},
                           {"exponent_d1", r.square_witness->scaling.exponent_d1},
                           {"exponent_d2", r.square_witness->scaling.exponent_d2}};
  } else {
    j["square_witness"] = nullptr;
  }
  j["unit_norms_minus_one"] = r.unit_norms_minus_one;
  j["unit_p1p2_shape"] = r.unit_p1p2_shape;
  j["alpha1_agrees"] = r.alpha1_agrees;
  j["symbol_identity"] = r.symbol_identity;
  if (r.decomposition) {
    j["decomposition"] = {{"p1p2", pattern_json(r.decomposition->p1p2)},
                          {"2p1p2", pattern_json(r.decomposition->two_p1p2)},
                          {"budget_exceeded", r.decomposition->budget_exceeded},
                          {"predicts_square", r.decomposition->predicts_square}};
  } else {
    j["decomposition"] = nullptr;
  }
  j["decomposition_agrees"] = r.decomposition_agrees;
  return j;
}

}  // namespace

std::string csv_header() {
  return "p1,p2,s2,sA,sB,product,square,implied_q,h,h2,sylow_type,condition4,condition5,"
         "decomposition_p1p2,decomposition_2p1p2,consistent";
}

std::string csv_row(const PairReport& r) {
  std::ostringstream os;
  os << r.p1 << ',' << r.p2 << ',' << r.symbols.s2 << ',' << r.symbols.sA << ','
     << r.symbols.sB << ',' << r.symbols.product << ',' << flag(r.condition1_square) << ','
     << r.implied_q << ',' << r.h << ',' << r.h2 << ',' << r.sylow_type_string() << ','
     << flag(r.condition4) << ',' << flag(r.condition5) << ',' << decomposition_label(r, true)
     << ',' << decomposition_label(r, false) << ',' << flag(r.consistent);
  return os.str();
}

void write_csv(std::ostream& os, const ScanResult& result) {
  os << csv_header() << '\n';
  for (const PairReport& r : result.reports) os << csv_row(r) << '\n';
}

std::string pair_json(const PairReport& r) { return to_json(r).dump(); }

void write_json(std::ostream& os, const ScanResult& result) {
  Json doc;
  const ScanSummary& s = result.summary;
  doc["summary"] = {{"pairs", s.pairs},
                    {"squares", s.squares},
                    {"inconsistencies", s.inconsistencies},
                    {"side_check_failures", s.side_check_failures},
                    {"budget_exceeded", s.budget_exceeded}};
  Json pairs = Json::array();
  for (const PairReport& r : result.reports) pairs.push_back(to_json(r));
  doc["pairs"] = std::move(pairs);
  os << doc.dump(2) << '\n';
}

void write_report(std::ostream& os, const ScanResult& result, OutputFormat format) {
  if (format == OutputFormat::csv) {
    write_csv(os, result);
  } else {
    write_json(os, result);
  }
}

}  // namespace unitsq
