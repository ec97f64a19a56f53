#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yso5/check.hpp"
#include "yso5/scalar.hpp"

namespace yso5 {

struct SuiteOptions {
    Scalar x{1};
    Scalar c{1};
    std::optional<Scalar> h;  // Fock default: h = c; Lax: h = 1
    int L = 2;
    int N = 5;
    int grid = 7;
    int levels = 2;  // RTT orders (1, m) for m ≤ levels
    int sites = 2;
    std::vector<Scalar> thetas{Scalar(0), Scalar(1)};
    std::optional<std::vector<Scalar>> weights;
    std::vector<std::string> tables{"cw-level1", "cw-level2", "cw-cubic", "rtt-level-n", "rtt-tilde"};
    std::string source = "lax";  // lax | fock
    bool allow_large = false;
};

std::vector<CheckResult> run_so5_suite(const SuiteOptions& o);
std::vector<CheckResult> run_ybe_suite(const SuiteOptions& o);
std::vector<CheckResult> run_rtt_suite(const SuiteOptions& o);
std::vector<CheckResult> run_drinfeld_suite(const SuiteOptions& o);
std::vector<CheckResult> run_fock_suite(const SuiteOptions& o);
// Every suite once, Drinfel'd on the Lax source.
std::vector<CheckResult> run_all_suites(const SuiteOptions& o);

}  // namespace yso5
