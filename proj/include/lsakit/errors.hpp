#pragma once

#include <stdexcept>
#include <string>

namespace lsakit {

enum class errc {
    field_mismatch,
    division_by_zero,
    dimension_mismatch,
    shape_mismatch,
    dependent_span,
    not_subalgebra,
    base_algebra_invalid,
    matched_pair_invalid,
    not_deformation_map,
    not_invertible,
    datum_invalid,
    enumeration_too_large,
    parse_error,
    usage_error,
};

/// Single exception type for the whole kit; `code()` tells callers (and the
/// CLI exit-code mapping) what went wrong.
class error : public std::runtime_error {
public:
    error(errc code, std::string message) : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::field_mismatch: return "FieldMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::dependent_span: return "DependentSpan";
    case errc::not_subalgebra: return "NotSubalgebra";
    case errc::base_algebra_invalid: return "BaseAlgebraInvalid";
    case errc::matched_pair_invalid: return "MatchedPairInvalid";
    case errc::not_deformation_map: return "NotDeformationMap";
    case errc::not_invertible: return "NotInvertible";
    case errc::datum_invalid: return "DatumInvalid";
    case errc::enumeration_too_large: return "EnumerationTooLarge";
    case errc::parse_error: return "ParseError";
    case errc::usage_error: return "UsageError";
    }
    return "UnknownError";
}

}  // namespace lsakit
