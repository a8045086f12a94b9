#ifndef SCM_ERROR_HPP
#define SCM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace scm {

// Operation failure with a stable machine-readable code (e.g. UNKNOWN_TYPE,
// UNKNOWN_FRAME). Validation violations are data, not errors; see
// ValidationReport in kernel.hpp.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace scm

#endif
