#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mstack {

// Domain errors carry a stable code naming the violated contract, so callers
// (and the CLI exit-code mapping) can dispatch on it without parsing text.
// The message always contains the code.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& detail) {
    throw DomainError(code, code + " (" + detail + ")");
}

}  // namespace mstack
