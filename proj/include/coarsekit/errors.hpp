#pragma once

#include <stdexcept>
#include <string>

namespace coarsekit {

// Domain-level failure: caps exceeded, precondition violated, malformed input.
// The CLI maps these to exit code 1 (flag/usage problems exit 2).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace coarsekit
