#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "yso5/check.hpp"
#include "yso5/matrix.hpp"
#include "yso5/sparse_op.hpp"

namespace yso5 {

inline constexpr const char* kReportSchema = "yso5-report/1";
inline constexpr const char* kToolVersion = "1.0.0";

struct RunReport {
    std::string tool_version = kToolVersion;
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CheckResult> results;

    // Stable sort by suite, then check name.
    void sort();
    bool any_failed() const;
    size_t count(Status s) const { return count_status(results, s); }

    nlohmann::ordered_json to_json() const;
    std::string to_markdown() const;
};

nlohmann::ordered_json result_to_json(const CheckResult& r);
// Array of arrays of canonical scalar strings.
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json sparse_to_json(const SparseOp& m);

}  // namespace yso5
