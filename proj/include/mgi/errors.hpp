#pragma once

#include <stdexcept>
#include <string>

namespace mgi {

enum class ErrorKind {
    Parse,
    DuplicateId,
    UnknownVertex,
    UnknownEdge,
    UnknownPoint,
    InvalidPolarization,
    DisconnectedGraph,
    NonPositiveLength,
    GenusZero,
    OffsetOutOfRange,
    Precondition,
    ProfileSampleMismatch,
    CrosscheckFailure,
    InconsistentCounts,
    GenusMismatch,
    LengthMismatch,
    ArityMismatch,
    RankDeficient,
    ValidationFailure,
    DenominatorZero,
};

const char* to_string(ErrorKind kind);

/// Process exit status of the command-line tool for an error of this kind.
int exit_status(ErrorKind kind);

// Every failure in the library is reported through this type. The message
// names the offending element (vertex id, edge id, check name, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace mgi
