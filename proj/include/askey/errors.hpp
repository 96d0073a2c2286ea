#pragma once

#include <stdexcept>
#include <string>

namespace askey {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A terminating series hit a vanishing bottom Pochhammer before the sum ended.
struct SingularSeries : Error {
    using Error::Error;
};

/// q outside the admissible base set (q must not be 0, 1 or -1).
struct InvalidBase : Error {
    using Error::Error;
};

/// A recurrence coefficient, weight or catalog coefficient has a vanishing denominator.
struct SingularParameters : Error {
    using Error::Error;
};

/// A constraint expression is undefined at some index; carries the locus.
struct DenominatorVanishes : Error {
    int index;
    DenominatorVanishes(const std::string& what, int i) : Error(what), index(i) {}
};

/// A shift map violates the family's bar-parameter consistency rule.
struct InvalidShift : Error {
    using Error::Error;
};

/// Operation not defined for the requested family.
struct UnsupportedFamily : Error {
    using Error::Error;
};

/// No published limit correspondence for the requested pair.
struct UnknownCorrespondence : Error {
    using Error::Error;
};

/// Two relations cannot be chained (their parameter maps do not meet).
struct IncompatibleShifts : Error {
    using Error::Error;
};

/// Sampling failed to produce enough admissible parameter sets.
struct InsufficientSamples : Error {
    using Error::Error;
};

/// Bad CLI/run configuration.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace askey
