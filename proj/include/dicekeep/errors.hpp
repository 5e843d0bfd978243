#pragma once

#include <stdexcept>
#include <string>

namespace dicekeep {

/// Invalid argument or precondition violation (bad outcome index, sides < 2, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// The request is well-formed but exceeds a configured work bound.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dicekeep
