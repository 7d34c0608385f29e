#ifndef EXPSUM_ERRORS_HPP
#define EXPSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expsum {

// Error categories mirrored by the C API status codes.
enum class ErrorCode {
    Argument = 1,     // invalid argument / precondition violated
    Parse = 2,        // syntax error in polynomial or modulus text
    Budget = 3,       // enumeration budget exceeded
    Mismatch = 4,     // stated hypothesis failed (degree, factorization, ...)
    Unsupported = 5,  // requested combination not implemented (e.g. a > 1 Dwork)
    Internal = 6      // invariant violation: a bug, not a user error
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct ArgumentError : Error {
    explicit ArgumentError(const std::string& m) : Error(ErrorCode::Argument, m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(ErrorCode::Parse, m) {}
};
struct BudgetError : Error {
    explicit BudgetError(const std::string& m) : Error(ErrorCode::Budget, m) {}
};
struct MismatchError : Error {
    explicit MismatchError(const std::string& m) : Error(ErrorCode::Mismatch, m) {}
};
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& m) : Error(ErrorCode::Unsupported, m) {}
};
struct InternalError : Error {
    explicit InternalError(const std::string& m) : Error(ErrorCode::Internal, m) {}
};

}  // namespace expsum

#endif
