#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yso5/surd_op.hpp"

namespace yso5 {

enum class Status { Pass, Fail, Measured };

const char* status_name(Status s);

struct CheckWitness {
    std::string coords;  // e.g. "(3,17)" or "(3,17) sqrt2"
    std::string value;   // canonical scalar string
};

struct CheckResult {
    std::string suite;
    std::string check;
    std::string ref;  // relation family identifier
    Status status = Status::Pass;
    std::optional<CheckWitness> witness;
    std::vector<std::pair<std::string, std::string>> metrics;  // insertion-ordered

    bool failed() const { return status == Status::Fail; }
};

CheckWitness make_witness(const Witness& w);

// Pass iff the residual is exactly zero; otherwise Fail with its first nonzero entry.
CheckResult residual_result(std::string suite, std::string check, std::string ref, const SparseOp& residual);
CheckResult residual_result(std::string suite, std::string check, std::string ref, const SurdOp& residual);
CheckResult residual_result(std::string suite, std::string check, std::string ref, const Matrix& residual);

// Pass iff every result passes.
bool all_pass(const std::vector<CheckResult>& results);
size_t count_status(const std::vector<CheckResult>& results, Status s);

}  // namespace yso5
