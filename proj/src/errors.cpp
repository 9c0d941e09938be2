#include "mgi/errors.hpp"

namespace mgi {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::InvalidPolarization: return "InvalidPolarization";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::GenusZero: return "GenusZero";
    case ErrorKind::OffsetOutOfRange: return "OffsetOutOfRange";
    case ErrorKind::Precondition: return "PreconditionViolated";
    case ErrorKind::ProfileSampleMismatch: return "ProfileSampleMismatch";
    case ErrorKind::CrosscheckFailure: return "CrosscheckFailure";
    case ErrorKind::InconsistentCounts: return "InconsistentCounts";
    case ErrorKind::GenusMismatch: return "GenusMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ValidationFailure: return "ValidationFailure";
    case ErrorKind::DenominatorZero: return "DenominatorZero";
    }
    return "Unknown";
}

int exit_status(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::UnknownPoint: return 2;
    case ErrorKind::DuplicateId:
    case ErrorKind::UnknownVertex:
    case ErrorKind::UnknownEdge:
    case ErrorKind::InvalidPolarization:
    case ErrorKind::DisconnectedGraph:
    case ErrorKind::NonPositiveLength:
    case ErrorKind::GenusZero:
    case ErrorKind::OffsetOutOfRange:
    case ErrorKind::Precondition:
    case ErrorKind::InconsistentCounts:
    case ErrorKind::GenusMismatch:
    case ErrorKind::LengthMismatch:
    case ErrorKind::ArityMismatch: return 3;
    case ErrorKind::ProfileSampleMismatch:
    case ErrorKind::CrosscheckFailure: return 4;
    case ErrorKind::RankDeficient:
    case ErrorKind::ValidationFailure:
    case ErrorKind::DenominatorZero: return 5;
    }
    return 5;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

}  // namespace mgi
