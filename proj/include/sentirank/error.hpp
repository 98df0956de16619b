#pragma once

#include <stdexcept>
#include <string>

namespace sentirank {

/// Bad input: unreadable or malformed files, invalid parameters.
/// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The analysis itself cannot proceed: degenerate statistics, no paired
/// entities, undefined metric values. The CLI maps this to exit code 3.
class AnalysisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void throw_parse_error(const std::string& file, std::size_t line,
                                           const std::string& detail) {
    throw InputError(file + ":" + std::to_string(line) + ": " + detail);
}

}  // namespace sentirank
