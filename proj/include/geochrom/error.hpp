#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geochrom {

enum class ErrorCode {
    CoordinateOutOfRange,
    SharedEndpoint,
    InvalidGraph,
    InvalidInput,
    SizeUnsupported,
    CatalogMissing,
    NotProperColoring,
    DistanceTooSmall,
    CrossingsNotIndependent,
    CollapsedCrossingPair,
    ChiOutOfRange,
    UnknownFigure,
    Exhausted,
    Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace geochrom
