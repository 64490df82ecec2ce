#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qres {

enum class ErrorKind {
    DimensionMismatch,
    DependentColumns,
    UnknownVertex,
    UnknownObject,
    InvalidAlgebra,
    InvalidModule,
    InvalidParameters,
    NonAcyclicQuiver,
    NotAMonomorphism,
    NonHereditaryBase,
    NonAcyclicBase,
    NotSemiinjective,
    NotMinimal,
    DecompositionUnavailable,
    RationalsUnsupported,
    CertificationFailure,
    ResolutionNotFound,
    NoSolution,
    NoRetraction,
    SequenceDoesNotSplit,
    PreconditionViolation,
    ShapeMismatch,
    ParseError,
    Internal,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string digest = {});

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }
    // Digest of the offending object, empty when not applicable.
    const std::string& digest() const noexcept { return digest_; }

private:
    ErrorKind kind_;
    std::string digest_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message, std::string digest = {});

inline void require(bool condition, ErrorKind kind, const std::string& message)
{
    if (!condition)
        fail(kind, message);
}

}  // namespace qres
