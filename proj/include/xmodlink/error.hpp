#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace xmodlink {

// All recoverable failures carry a stable code string (e.g. "NonAssociative",
// "SignatureMismatch") next to a human-readable message with witnesses.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace xmodlink
