#ifndef UNITRING_ERRORS_HPP
#define UNITRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unitring {

// Every failure the library reports carries a stable machine-readable code
// (e.g. "NotPrime", "BudgetExceeded") plus a category that the CLI maps to
// an exit status: Parse/Validation -> 1, Budget -> 2, Precondition -> 3.
enum class ErrorKind { Parse, Validation, Budget, Precondition };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

[[noreturn]] inline void fail_parse(const std::string& code, const std::string& msg) {
    throw Error(ErrorKind::Parse, code, msg);
}
[[noreturn]] inline void fail_validation(const std::string& code, const std::string& msg) {
    throw Error(ErrorKind::Validation, code, msg);
}
[[noreturn]] inline void fail_budget(const std::string& msg) {
    throw Error(ErrorKind::Budget, "BudgetExceeded", msg);
}
[[noreturn]] inline void fail_precondition(const std::string& code, const std::string& msg) {
    throw Error(ErrorKind::Precondition, code, msg);
}

} // namespace unitring

#endif
