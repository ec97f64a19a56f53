#include "yso5/report.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace yso5 {

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Measured: return "measured";
    }
    return "unknown";
}

CheckWitness make_witness(const Witness& w) {
    return {"(" + std::to_string(w.row) + "," + std::to_string(w.col) + ")", w.value.to_string()};
}

CheckResult residual_result(std::string suite, std::string check, std::string ref, const SparseOp& residual) {
    CheckResult r{std::move(suite), std::move(check), std::move(ref), Status::Pass, std::nullopt, {}};
    if (auto w = residual.first_nonzero()) {
        r.status = Status::Fail;
        r.witness = make_witness(*w);
    }
    return r;
}

CheckResult residual_result(std::string suite, std::string check, std::string ref, const SurdOp& residual) {
    CheckResult r{std::move(suite), std::move(check), std::move(ref), Status::Pass, std::nullopt, {}};
    if (auto w = residual.first_nonzero()) {
        r.status = Status::Fail;
        r.witness = make_witness(w->entry);
        if (w->part == "sqrt2") r.witness->coords += " sqrt2";
    }
    return r;
}

CheckResult residual_result(std::string suite, std::string check, std::string ref, const Matrix& residual) {
    CheckResult r{std::move(suite), std::move(check), std::move(ref), Status::Pass, std::nullopt, {}};
    if (auto w = residual.first_nonzero()) {
        r.status = Status::Fail;
        r.witness = make_witness(*w);
    }
    return r;
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::Pass; });
}

size_t count_status(const std::vector<CheckResult>& results, Status s) {
    return size_t(std::count_if(results.begin(), results.end(), [s](const CheckResult& r) { return r.status == s; }));
}

void RunReport::sort() {
    std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.suite != b.suite) return a.suite < b.suite;
        return a.check < b.check;
    });
}

bool RunReport::any_failed() const {
    return std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return r.failed(); });
}

nlohmann::ordered_json result_to_json(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["check"] = r.check;
    j["ref"] = r.ref;
    j["status"] = status_name(r.status);
    if (r.witness) j["witness"] = {{"entry", r.witness->coords}, {"value", r.witness->value}};
    if (!r.metrics.empty()) {
        nlohmann::ordered_json m = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.metrics) m[k] = v;
        j["metrics"] = m;
    }
    return j;
}

nlohmann::ordered_json RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["tool_version"] = tool_version;
    j["command"] = command;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = cfg;

    std::map<std::string, std::array<size_t, 3>> per_suite;
    for (const auto& r : results) ++per_suite[r.suite][size_t(r.status)];
    nlohmann::ordered_json summary;
    summary["total"] = results.size();
    summary["pass"] = count(Status::Pass);
    summary["fail"] = count(Status::Fail);
    summary["measured"] = count(Status::Measured);
    nlohmann::ordered_json suites = nlohmann::ordered_json::object();
    for (const auto& [name, c] : per_suite) suites[name] = {{"pass", c[0]}, {"fail", c[1]}, {"measured", c[2]}};
    summary["suites"] = suites;
    j["summary"] = summary;

    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) arr.push_back(result_to_json(r));
    j["results"] = arr;
    return j;
}

std::string RunReport::to_markdown() const {
    std::ostringstream os;
    os << "# yso5 report\n\n";
    os << "command: `" << command << "`\n\n";
    if (!config.empty()) {
        os << "| option | value |\n|---|---|\n";
        for (const auto& [k, v] : config) os << "| " << k << " | " << v << " |\n";
        os << "\n";
    }
    std::map<std::string, std::array<size_t, 3>> per_suite;
    for (const auto& r : results) ++per_suite[r.suite][size_t(r.status)];
    os << "| suite | pass | fail | measured |\n|---|---|---|---|\n";
    for (const auto& [name, c] : per_suite)
        os << "| " << name << " | " << c[0] << " | " << c[1] << " | " << c[2] << " |\n";
    os << "\ntotal " << results.size() << ": " << count(Status::Pass) << " pass, " << count(Status::Fail)
       << " fail, " << count(Status::Measured) << " measured\n";

    bool header = false;
    for (const auto& r : results) {
        if (r.status == Status::Pass && r.metrics.empty()) continue;
        if (!header) {
            os << "\n## Failures, measurements and annotated checks\n\n";
            header = true;
        }
        os << "- [" << status_name(r.status) << "] " << r.suite << " / " << r.check << " (" << r.ref << ")";
        if (r.witness) os << " at " << r.witness->coords << " = " << r.witness->value;
        for (const auto& [k, v] : r.metrics) os << "; " << k << "=" << v;
        os << "\n";
    }
    return os.str();
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json sparse_to_json(const SparseOp& m) { return matrix_to_json(m.to_matrix()); }

}  // namespace yso5
