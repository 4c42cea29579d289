#include <doctest.h>

#include <sstream>

#include "qpow/report.hpp"

using namespace qpow;

TEST_SUITE("report") {
  TEST_CASE("numbers carry 12 significant digits") {
    CHECK(report_number(1.0 / 3.0).dump() == "0.333333333333");
    CHECK(report_number(23.0 / 15.0).dump() == "1.53333333333");
    CHECK(report_number(-0.0).dump() == "0.0");
    CHECK(report_number(1e300 * 1e300).is_null());
  }

  TEST_CASE("bound result JSON line uses the field names") {
    const BoundResult r = check_bound(complete_bipartite(2, 3), {BoundId::thm31_lower}, Alpha(-1));
    const std::string line = json_line(r);
    CHECK(line.find('\n') == std::string::npos);
    const auto j = nlohmann::json::parse(line);
    for (const char* key : {"bound_id", "graph", "alpha", "invariant_value", "bound_value", "slack",
                            "equality", "satisfied", "applicable", "reason", "direction"}) {
      CHECK(j.contains(key));
    }
    CHECK(j["graph"] == "D]o");
    CHECK(j["bound_id"] == "thm31-lower");
    CHECK(j["equality"] == true);
  }

  TEST_CASE("Laplacian energy note") {
    const auto j = laplacian_energy_note();
    CHECK(j["value_used"] == 18);
    CHECK(j["value_as_printed"] == 72);
    CHECK(j["spectral_value"] == 18.0);
  }

  TEST_CASE("violations CSV") {
    std::vector<ViolationRecord> records(1);
    records[0] = {"Dto", 5, 1, -2.0, "conj44-lower", 2.626736111111, 3.173611111111, -0.546875, true, 7};
    std::ostringstream out;
    write_violations_csv(out, records);
    CHECK(out.str() ==
          "graph6,n,k,alpha,bound_id,invariant,bound,margin\n"
          "Dto,5,1,-2,conj44-lower,2.62673611111,3.17361111111,-0.546875\n");
    std::ostringstream empty;
    write_violations_csv(empty, {});
    CHECK(empty.str() == std::string(kViolationCsvHeader) + "\n");
  }

  TEST_CASE("scan report JSON is stable after redaction") {
    ScanConfig c;
    c.bound = "thm43";
    c.min_n = 3;
    c.max_n = 5;
    c.alpha_grid = {1, 2};
    const auto a = to_json(scan(c), true);
    const auto b = to_json(scan(c), true);
    CHECK(a.dump() == b.dump());
    CHECK(a["wall_time_seconds"].is_null());
    CHECK(a["n_range"] == nlohmann::json::array({3, 5}));
    CHECK(a["violations"].empty());
    CHECK(a.contains("notes"));
    CHECK(to_json(scan(c))["wall_time_seconds"].is_number());
  }
}
