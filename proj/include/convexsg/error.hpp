#pragma once

#include <stdexcept>
#include <string>

namespace convexsg {

// Raised on precondition violations: bad dimensions, empty vertex lists,
// unparsable input, out-of-range truncation indices. The CLI maps it to
// exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace convexsg
