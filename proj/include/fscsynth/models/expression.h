#pragma once

#include <string_view>

#include "fscsynth/models/errors.h"
#include "fscsynth/models/rational_function.h"

namespace fscsynth {

struct ExpressionOptions {
    // Unknown identifiers are added to the table instead of being rejected.
    bool declareParameters = false;
    // Position of the first character, used for error messages.
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Parses `+ - * / ^`, parentheses, decimals and identifiers into a rational function.
RationalFunction parseExpression(std::string_view text, ParameterTable& params, ExpressionOptions const& options = {});

/// As parseExpression, but the result must have a constant denominator.
Polynomial parsePolynomial(std::string_view text, ParameterTable& params, ExpressionOptions const& options = {});

}  // namespace fscsynth
