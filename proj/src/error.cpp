#include "qres/error.hpp"

namespace qres {

std::string_view error_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::DependentColumns: return "dependent-columns";
    case ErrorKind::UnknownVertex: return "unknown-vertex";
    case ErrorKind::UnknownObject: return "unknown-object";
    case ErrorKind::InvalidAlgebra: return "invalid-algebra";
    case ErrorKind::InvalidModule: return "invalid-module";
    case ErrorKind::InvalidParameters: return "invalid-parameters";
    case ErrorKind::NonAcyclicQuiver: return "non-acyclic-quiver";
    case ErrorKind::NotAMonomorphism: return "not-a-monomorphism";
    case ErrorKind::NonHereditaryBase: return "non-hereditary-base";
    case ErrorKind::NonAcyclicBase: return "non-acyclic-base";
    case ErrorKind::NotSemiinjective: return "not-semiinjective";
    case ErrorKind::NotMinimal: return "not-minimal";
    case ErrorKind::DecompositionUnavailable: return "decomposition-unavailable";
    case ErrorKind::RationalsUnsupported: return "rationals-unsupported";
    case ErrorKind::CertificationFailure: return "certification-failure";
    case ErrorKind::ResolutionNotFound: return "resolution-not-found";
    case ErrorKind::NoSolution: return "no-solution";
    case ErrorKind::NoRetraction: return "no-retraction";
    case ErrorKind::SequenceDoesNotSplit: return "sequence-does-not-split";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::ShapeMismatch: return "shape-mismatch";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::string digest)
    : std::runtime_error(std::string(error_name(kind)) + ": " + message),
      kind_(kind),
      digest_(std::move(digest))
{
}

void fail(ErrorKind kind, const std::string& message, std::string digest)
{
    throw Error(kind, message, std::move(digest));
}

}  // namespace qres
