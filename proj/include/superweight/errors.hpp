#pragma once

#include <stdexcept>
#include <string>

namespace sw {

// Domain errors carry a stable machine-readable code alongside the message.
// The CLI maps these to exit code 1 with an error JSON on stderr.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void raise(const std::string& code, const std::string& message) {
    throw DomainError(code, message);
}

} // namespace sw
