#pragma once

#include <stdexcept>
#include <string>

namespace dscode {

enum class Errc {
    not_prime,
    too_small,
    dimension_mismatch,
    empty_input,
    zero_vector,
    invalid_dimension,
    index_out_of_range,
    degenerate_line,
    point_not_in_space,
    point_not_in_block,
    overflow,
    empty_defining_set,
    scale_limit_exceeded,
    containment_violated,
    empty_selection,
    inconsistent_theorem,
    invalid_params,
    shape_mismatch,
    unsupported_prime,
    parse_error,
    config_invalid,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_prime: return "NotPrime";
        case Errc::too_small: return "TooSmall";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::empty_input: return "EmptyInput";
        case Errc::zero_vector: return "ZeroVector";
        case Errc::invalid_dimension: return "InvalidDimension";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::degenerate_line: return "DegenerateLine";
        case Errc::point_not_in_space: return "PointNotInSpace";
        case Errc::point_not_in_block: return "PointNotInBlock";
        case Errc::overflow: return "Overflow";
        case Errc::empty_defining_set: return "EmptyDefiningSet";
        case Errc::scale_limit_exceeded: return "ScaleLimitExceeded";
        case Errc::containment_violated: return "ContainmentViolated";
        case Errc::empty_selection: return "EmptySelection";
        case Errc::inconsistent_theorem: return "InconsistentTheorem";
        case Errc::invalid_params: return "InvalidParams";
        case Errc::shape_mismatch: return "ShapeMismatch";
        case Errc::unsupported_prime: return "UnsupportedPrime";
        case Errc::parse_error: return "ParseError";
        case Errc::config_invalid: return "ConfigInvalid";
    }
    return "Unknown";
}

class CodeError : public std::runtime_error {
public:
    CodeError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace dscode
