#pragma once

#include <stdexcept>
#include <string>

namespace noiserect {

// Error taxonomy used by the CLI exit path and asserted on by tests.
enum class ErrorCategory {
    config,
    shape,
    numeric,
    io,
};

inline const char* to_string(ErrorCategory cat) {
    switch (cat) {
        case ErrorCategory::config: return "config";
        case ErrorCategory::shape: return "shape";
        case ErrorCategory::numeric: return "numeric";
        case ErrorCategory::io: return "io";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const { return category_; }

    static Error config(const std::string& msg) { return Error(ErrorCategory::config, msg); }
    static Error shape(const std::string& msg) { return Error(ErrorCategory::shape, msg); }
    static Error numeric(const std::string& msg) { return Error(ErrorCategory::numeric, msg); }
    static Error io(const std::string& msg) { return Error(ErrorCategory::io, msg); }

private:
    ErrorCategory category_;
};

}  // namespace noiserect
