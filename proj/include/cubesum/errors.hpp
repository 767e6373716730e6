#pragma once

#include <stdexcept>
#include <string>

namespace cubesum {

// Invalid input or out-of-domain argument (n divisible by 3, wrong factor
// count, division by zero, ...).  The CLI maps this to exit code 2.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A provable internal invariant failed: the two independent Selmer
// computations disagree, a local image is not a subgroup, a verdict is
// internally inconsistent.  The CLI maps this to exit code 3.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cubesum
