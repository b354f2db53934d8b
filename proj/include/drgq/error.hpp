#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace drgq {

// Domain error with a stable machine-parsable code ("NonIntegralMultiplicity",
// "InvalidClassicalParameters", ...). The CLI maps these to exit code 1 and
// prints "error: <code>: <detail>" on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace drgq
