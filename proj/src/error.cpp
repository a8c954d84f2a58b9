#include "cherednik/error.hpp"

namespace cherednik {

std::string_view error_name(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorKind::NegativePart: return "NegativePart";
    case ErrorKind::CellOutOfDiagram: return "CellOutOfDiagram";
    case ErrorKind::PadTooShort: return "PadTooShort";
    case ErrorKind::RowOutOfRange: return "RowOutOfRange";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NegativeDegreeGenerator: return "NegativeDegreeGenerator";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace cherednik
