#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "qpow/search.hpp"
#include "qpow/verify.hpp"

namespace qpow {

/// A double rounded to 12 significant digits, as every report prints it.
nlohmann::json report_number(double value);

nlohmann::json to_json(const BoundResult& result);
/// One line of a BoundResult JSON-lines stream, without the newline.
std::string json_line(const BoundResult& result);

/// Corrected vs. misprinted E_L(G(1)) polynomial and where they part ways.
nlohmann::json laplacian_energy_note();

/// With `redact_timing` the wall time is written as null so reports compare byte-for-byte.
nlohmann::json to_json(const ScanReport& report, bool redact_timing = false);

inline constexpr const char* kViolationCsvHeader =
    "graph6,n,k,alpha,bound_id,invariant,bound,margin";
void write_violations_csv(std::ostream& out, std::span<const ViolationRecord> records);

/// Plain-text summary; not a stable format.
void write_scan_table(std::ostream& out, const ScanReport& report);

}  // namespace qpow
