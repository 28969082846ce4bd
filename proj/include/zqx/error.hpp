#ifndef ZQX_ERROR_HPP
#define ZQX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zqx {

// Domain-level failure. `code` is a stable machine-readable name
// (e.g. "NotPrime", "CannotCertify") surfaced verbatim by the CLI.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw DomainError(code, message);
}

} // namespace zqx

#endif
