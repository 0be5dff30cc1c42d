#pragma once

#include <iosfwd>
#include <string>

#include "unitsq/verifier.hpp"

namespace unitsq {

/// Header line of the CSV report.
std::string csv_header();
std::string csv_row(const PairReport& r);
void write_csv(std::ostream& os, const ScanResult& result);

/// {"summary": {...}, "pairs": [...]} with one object per pair.
void write_json(std::ostream& os, const ScanResult& result);
std::string pair_json(const PairReport& r);

void write_report(std::ostream& os, const ScanResult& result, OutputFormat format);

}  // namespace unitsq
