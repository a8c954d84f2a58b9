#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cherednik {

enum class ErrorKind {
    NotWeaklyDecreasing,
    NegativePart,
    CellOutOfDiagram,
    PadTooShort,
    RowOutOfRange,
    NonSquare,
    ZeroPolynomial,
    InexactDivision,
    NonIntegral,
    NegativeDegreeGenerator,
    LengthMismatch,
    ParseError,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Domain error carrying a machine-readable kind. The CLI prints name() on
// stderr and exits with status 1.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &detail)
        : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

} // namespace cherednik
