#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schottky {

/// Global comparison tolerance. Every operation that compares reals takes an
/// explicit `tol` argument defaulting to this value.
inline constexpr double kDefaultTol = 1e-9;

enum class ErrorCode {
    NonOrientable,
    NotHyperbolic,
    MarginalTrace,
    SharedEndpoint,
    DegenerateArc,
    DegenerateAxis,
    NonPositiveLength,
    InfinityFixed,
    PoleOnCircle,
    ImageThroughInfinity,
    VerticalAxis,
    InvalidCircle,
    BadIndex,
    NotReduced,
    NotCertified,
    InvalidSurface,
    ParityError,
    WrongCase,
    Degenerate,
    NotStandardOrientation,
    TestElementNotHyperbolic,
    ConstructionFailed,
    AutoGrowthExhausted,
    NotSchottky,
    IdentityGenerator,
    NonHyperbolicGenerator,
    EmptySystem,
    InvalidInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace schottky
