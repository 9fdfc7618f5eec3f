#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gl2tors {

enum class ErrorKind {
    InvalidArgument,
    InvalidField,
    LiftingFailure,
    InfiniteValuation,
    InternalConsistency,
    MissingData,
    CorruptData,
    InvalidWindow,
    Io,
    EmptyDataset,
    Fetch,
};

std::string_view to_string(ErrorKind kind);
/// Inverse of to_string; InvalidArgument for unknown names.
ErrorKind error_kind_from_string(std::string_view name);

/// Every failure raised by the library carries a kind so that the CLI can
/// map it onto a stable exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace gl2tors
