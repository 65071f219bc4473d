#pragma once

#include <stdexcept>
#include <string>

namespace aztec {

// Exit-code mapping used by the CLI: 2 parameter, 3 regime, 4 accuracy.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct regime_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct accuracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct untileable_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace aztec
