#pragma once

#include <stdexcept>
#include <string>

namespace yso5 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct BudgetError : Error {
    using Error::Error;
};

}  // namespace yso5
