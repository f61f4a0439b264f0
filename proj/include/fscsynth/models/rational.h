#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fscsynth {

/// Exact arbitrary-precision rational used for all symbolic work.
using Rational = mpq_class;

using StateId = std::uint32_t;
using ActionId = std::uint32_t;
using ObservationId = std::uint32_t;
using ParamId = std::uint32_t;

/// Parses "3", "-2", "0.15", "1e-3", "3/4". Throws std::invalid_argument.
Rational parseRational(std::string_view text);

/// Canonical text: "3", "-1/2".
std::string toString(Rational const& value);

/// Shortest round-trippable decimal rendering of the double approximation.
std::string toDecimalString(Rational const& value, int digits = 17);

inline double toDouble(Rational const& value) { return value.get_d(); }

/// Exact conversion of a finite double.
Rational fromDouble(double value);

}  // namespace fscsynth
