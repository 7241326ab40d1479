#pragma once

#include <stdexcept>
#include <string>

namespace braingraph {

// Shape conflicts between operands; message carries both shapes.
struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error("dimension error: " + what) {}
};

// log/exp/sqrt called outside their numeric domain.
struct NumericDomainError : std::runtime_error {
    explicit NumericDomainError(const std::string& what) : std::runtime_error("numeric-domain error: " + what) {}
};

// Caller broke an operation precondition (non-scalar loss, asymmetric input, ...).
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& what) : std::runtime_error("contract error: " + what) {}
};

// Invalid hyperparameter or option value.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error("config error: " + what) {}
};

// Unparseable or degenerate input data (constant ROI signal, bad split, ...).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error("data error: " + what) {}
};

// Config JSON does not match the expected schema; message lists offending keys.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error("schema error: " + what) {}
};

}  // namespace braingraph
