#pragma once

#include <string>
#include <vector>

#include "tmf/json_io.hpp"

namespace tmf {

struct CheckResult {
    std::string name;
    std::string expected = "PASS";
    std::string verdict;  // PASS / FAIL / ERROR
    std::string detail;
    bool ok = false;  // verdict matches expected
};

// Batch verification: suite = {"checks": [{"name": ..., params...,
// "expect": "PASS"|"FAIL"}, ...]}.  Known check names: borcherds, eq-phi,
// witten-eisenstein, kummer-ko, kummer-tmf, ustar, tau-search.  Per-check
// errors are captured as ERROR verdicts, never fatal to the run.
std::vector<CheckResult> run_suite(const Json& suite);

// The built-in suite exercising every check once with desk-scale
// parameters.
Json default_suite();

Json suite_results_to_json(const std::vector<CheckResult>& results);

}  // namespace tmf
