#include "schottky/error.hpp"

namespace schottky {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonOrientable: return "NonOrientable";
        case ErrorCode::NotHyperbolic: return "NotHyperbolic";
        case ErrorCode::MarginalTrace: return "MarginalTrace";
        case ErrorCode::SharedEndpoint: return "SharedEndpoint";
        case ErrorCode::DegenerateArc: return "DegenerateArc";
        case ErrorCode::DegenerateAxis: return "DegenerateAxis";
        case ErrorCode::NonPositiveLength: return "NonPositiveLength";
        case ErrorCode::InfinityFixed: return "InfinityFixed";
        case ErrorCode::PoleOnCircle: return "PoleOnCircle";
        case ErrorCode::ImageThroughInfinity: return "ImageThroughInfinity";
        case ErrorCode::VerticalAxis: return "VerticalAxis";
        case ErrorCode::InvalidCircle: return "InvalidCircle";
        case ErrorCode::BadIndex: return "BadIndex";
        case ErrorCode::NotReduced: return "NotReduced";
        case ErrorCode::NotCertified: return "NotCertified";
        case ErrorCode::InvalidSurface: return "InvalidSurface";
        case ErrorCode::ParityError: return "ParityError";
        case ErrorCode::WrongCase: return "WrongCase";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::NotStandardOrientation: return "NotStandardOrientation";
        case ErrorCode::TestElementNotHyperbolic: return "TestElementNotHyperbolic";
        case ErrorCode::ConstructionFailed: return "ConstructionFailed";
        case ErrorCode::AutoGrowthExhausted: return "AutoGrowthExhausted";
        case ErrorCode::NotSchottky: return "NotSchottky";
        case ErrorCode::IdentityGenerator: return "IdentityGenerator";
        case ErrorCode::NonHyperbolicGenerator: return "NonHyperbolicGenerator";
        case ErrorCode::EmptySystem: return "EmptySystem";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace schottky
