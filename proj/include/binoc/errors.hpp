#ifndef BINOC_ERRORS_HPP
#define BINOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace binoc {

/// Structured error codes.  The CLI maps these to process exit codes:
/// parse/config errors exit 4, everything else here exits 3
/// (unsupported scope or resource limits at the configured caps).
enum class ErrorCode {
    ResourceLimit,
    BoundExceeded,
    NotPCofinite,
    NilClass,
    NotCoprincipal,
    CrossCheckMismatch,
    FieldExtensionRequired,
    BadCharacteristic,
    UnsupportedUnitRank,
    DimensionUnsupported,
    ParseError,
    ConfigError,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

    /// Extra payload; meaning depends on the code (e.g. the unbounded
    /// variable index for NotPCofinite, the required extension order m
    /// for FieldExtensionRequired).
    long detail = -1;

  private:
    ErrorCode code_;
};

inline Error make_error(ErrorCode code, const std::string& what, long detail = -1) {
    Error e(code, what);
    e.detail = detail;
    return e;
}

const char* error_code_name(ErrorCode code);

} // namespace binoc

#endif
