#pragma once

#include <optional>

#include "fscsynth/models/polynomial.h"

namespace fscsynth::detail {

/// Monic gcd over Q via images modulo word-size primes, verified by exact division.
/// Empty when no verified candidate was found within the prime budget.
std::optional<Polynomial> modularGcd(Polynomial const& a, Polynomial const& b);

}  // namespace fscsynth::detail
