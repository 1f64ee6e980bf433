#include "geochrom/error.hpp"

namespace geochrom {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorCode::SharedEndpoint: return "SharedEndpoint";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SizeUnsupported: return "SizeUnsupported";
    case ErrorCode::CatalogMissing: return "CatalogMissing";
    case ErrorCode::NotProperColoring: return "NotProperColoring";
    case ErrorCode::DistanceTooSmall: return "DistanceTooSmall";
    case ErrorCode::CrossingsNotIndependent: return "CrossingsNotIndependent";
    case ErrorCode::CollapsedCrossingPair: return "CollapsedCrossingPair";
    case ErrorCode::ChiOutOfRange: return "ChiOutOfRange";
    case ErrorCode::UnknownFigure: return "UnknownFigure";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace geochrom
