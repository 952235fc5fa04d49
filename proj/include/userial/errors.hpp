#pragma once

#include <stdexcept>
#include <string>

namespace userial {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Endpoints of two paths do not match under the right-to-left convention.
struct CompositionError : Error {
    using Error::Error;
};

// A relation has non-parallel terms, a term of length < 2, or is zero.
struct RelationError : Error {
    using Error::Error;
};

// No nilpotency degree <= degree_cap was found; the ideal is not verifiably
// admissible at this cap.
struct AdmissibilityError : Error {
    using Error::Error;
};

// Mixed-algebra or mixed-field operands.
struct MixedOperandsError : Error {
    using Error::Error;
};

// A scalar tuple does not land in the variety V_p.
struct PointNotInVarietyError : Error {
    using Error::Error;
};

// Configuration the implementation does not support (e.g. repeated mast
// vertices on a cyclic quiver).
struct UnsupportedConfigError : Error {
    using Error::Error;
};

struct DimensionCapError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(int line, int col, const std::string& msg)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line),
          col(col) {}
    int line;
    int col;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InvariantViolation : Error {
    using Error::Error;
};

}  // namespace userial
