#pragma once

#include <stdexcept>

namespace sddm {

// Malformed input data: bad distributions, inconsistent configuration,
// unknown names. The CLI maps this to exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Structurally sound inputs on which the model itself is undefined, e.g.
// a discount rate not exceeding the expected growth, or a non-positive
// delta. The CLI maps this to exit code 3.
struct ModelDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace sddm
