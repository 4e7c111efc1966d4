#ifndef MULTINORM_ERRORS_HPP
#define MULTINORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace multinorm {

enum class ErrorKind {
    Validation,    // malformed or out-of-range input
    Budget,        // enumeration cap exceeded
    Disagreement,  // two independent computations differ
    Internal,      // an asserted invariant failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_validation(const std::string& msg) { throw Error(ErrorKind::Validation, msg); }
[[noreturn]] inline void fail_budget(const std::string& msg) { throw Error(ErrorKind::Budget, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw Error(ErrorKind::Internal, msg); }

inline void require(bool ok, const std::string& msg) {
    if (!ok) fail_internal(msg);
}

}  // namespace multinorm

#endif
