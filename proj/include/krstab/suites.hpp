#pragma once

#include <string>
#include <vector>

#include "krstab/ideals.hpp"
#include "krstab/json_io.hpp"

namespace krstab {

// Configuration for the check-suite runner. Invariants: degree_bound >= 1,
// budget >= 1, grid positive. Format selects the serialization of the
// assembled reports; with_timestamp gates the timing fields so that two runs
// with the same config produce byte-identical output when it is off.
struct RunConfig {
    enum class Format { Json, Csv };

    GridSize grid{3, 3};
    int degree_bound = 5;
    std::vector<std::string> suites;
    long long budget = 4'000'000;
    std::string output_path;  // empty means stdout
    Format format = Format::Json;
    bool with_timestamp = true;
};

// One multidegree slice of a suite report. Only failing slices and explorer
// findings are materialized; fully passing slices are aggregated into the
// counters on Report. `extra` holds additional keys (a parameter the slice
// depends on, a label for a fixed worked instance) merged into the slice
// object on serialization.
struct SliceReport {
    Json multidegree;
    bool pass = true;
    std::vector<Json> witnesses;
    Json extra = Json::object();
};

struct Report {
    std::string suite;
    GridSize grid{};
    Json params = Json::object();
    std::vector<SliceReport> slices;
    bool pass = true;
    long long counterexamples = 0;
    long long slices_checked = 0;
    long long items_checked = 0;
    bool budget_exceeded = false;
    double seconds = 0.0;
};

// Canonical suite names, sorted. run_suite accepts exactly these.
const std::vector<std::string>& suite_names();

// Runs one named suite. Throws invalid_input for an unknown name. A
// budget_exceeded_error raised inside a suite is caught and surfaces as
// budget_exceeded on the (partial) report rather than propagating.
Report run_suite(const std::string& name, const RunConfig& cfg);

// Runs cfg.suites in name order (duplicates preserved). An empty list yields
// an empty vector.
std::vector<Report> run_all(const RunConfig& cfg);

Json report_to_json(const Report& r, bool with_timestamp);
Json reports_to_json(const std::vector<Report>& rs, bool with_timestamp);

// Summary table, one row per report. Contains no timing fields, so it is
// deterministic regardless of the timestamp flag.
std::string reports_to_csv(const std::vector<Report>& rs);

// 0 all pass, 1 some assertion failed, 3 some suite ran out of budget.
int exit_code_for(const std::vector<Report>& rs);

}  // namespace krstab
