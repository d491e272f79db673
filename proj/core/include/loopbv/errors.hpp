#pragma once

#include <stdexcept>

namespace loopbv {

/// Raised when caller-supplied data violates an operation's contract
/// (bad configuration, out-of-range exponent, malformed record, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace loopbv
