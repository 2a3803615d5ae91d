#pragma once

#include <stdexcept>
#include <string>

namespace zono {

// Base class for all library errors; CLI maps these to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct RankDeficient : Error {
    using Error::Error;
};
struct UnknownLabel : Error {
    using Error::Error;
};
struct DisconnectedGraph : Error {
    using Error::Error;
};
struct EmptyL : Error {
    using Error::Error;
};
struct GroundTooLarge : Error {
    using Error::Error;
};
struct LoopPresent : Error {
    using Error::Error;
};
struct DegreeUnderflow : Error {
    using Error::Error;
};
struct KOutOfRange : Error {
    using Error::Error;
};
struct CostGuard : Error {
    using Error::Error;
};
struct NotAutomorphism : Error {
    using Error::Error;
};
struct DegreeOutOfRange : Error {
    using Error::Error;
};

// Raised by random_alpha_audit; carries a printable description of the
// violating (alpha, basis polynomial, degree) triple.
struct AuditFailure : Error {
    using Error::Error;
};

} // namespace zono
