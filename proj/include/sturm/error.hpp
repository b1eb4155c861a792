#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sturm {

enum class ErrorKind {
    EmptyInput,
    NotABijection,
    MalformedCycle,
    SizeMismatch,
    NotDissipative,
    AnchorMismatch,
    SymmetryViolation,
    EqualLabels,
    NegativeDimension,
    InvalidArgument,
    BoundExceeded,
    IndexOrderViolated,
    NotSturm,
    UnknownLabel,
    MalformedJSON,
    SchemaViolation,
    ReconstructionFailed,
    NoCandidate,
    MultipleCandidates,
    InvalidComplex,
    SlotConflict,
    BrokenChain,
    BadEndpoints,
    LabelMismatch,
    InvalidBipolarity,
    PathMismatch,
    TemplateInvalid,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library surfaces as this exception; `kind()` is the
/// machine-readable tag, `what()` carries the offending labels.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sturm
