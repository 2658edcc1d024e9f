#pragma once

#include <stdexcept>
#include <string>

namespace magnus {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched sizes: variable counts, matrix shapes, genus mismatch.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Operation outside its mathematical domain (e.g. gcd(0, 0)).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Zero denominator in an exact fraction.
struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

// No usable pivot during elimination; `step` is the elimination step at
// which the remaining submatrix was entirely zero.
struct SingularityError : Error {
    int row;
    int col;
    SingularityError(const std::string& msg, int row_, int col_)
        : Error(msg + " (pivot position " + std::to_string(row_) + "," +
                std::to_string(col_) + ")"),
          row(row_), col(col_) {}
};

// Denominator vanishes under a substitution.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Presentation violates the deficiency-2g shape.
struct AdmissibilityError : Error {
    explicit AdmissibilityError(const std::string& msg) : Error(msg) {}
};

// Generator index out of range for the ambient presentation.
struct IndexError : Error {
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

// The presentation does not describe a homology cylinder.
struct NotHomologyCylinderError : Error {
    explicit NotHomologyCylinderError(const std::string& msg) : Error(msg) {}
};

// Homology classes exist over the rationals but are not integral.
struct NonIntegralHomologyError : Error {
    explicit NonIntegralHomologyError(const std::string& msg) : Error(msg) {}
};

// Malformed input document; line/column are 1-based when known, 0 otherwise.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : Error(line_ > 0 ? msg + " (line " + std::to_string(line_) +
                                ", column " + std::to_string(column_) + ")"
                          : msg),
          line(line_), column(column_) {}
};

// Unrecognized generator token such as "q3" or "-m0".
struct TokenError : Error {
    explicit TokenError(const std::string& msg) : Error(msg) {}
};

} // namespace magnus
