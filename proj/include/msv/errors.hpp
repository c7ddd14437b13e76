#pragma once

#include <stdexcept>
#include <string>

namespace msv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input documents (election files, rule tables).
struct ParseError : Error {
    using Error::Error;
};

// Invalid arguments to an operation (bad k, bad stage vector, bad descriptor).
struct UsageError : Error {
    using Error::Error;
};

// An enumeration or frontier bound would be exceeded; callers should retry
// with a smaller instance or a larger cap.
struct CapExceededError : Error {
    using Error::Error;
};

}  // namespace msv
