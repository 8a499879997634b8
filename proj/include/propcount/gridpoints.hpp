#pragma once

#include <array>
#include <functional>
#include <vector>

#include "propcount/rational.hpp"

namespace propcount {

// Fixed table of small rationals (numerators and denominators within
// [-9, 9]) used for identity testing by evaluation. The table and the
// tuple rule below are deterministic, so every run checks the same points.
const std::vector<Rat>& standard_rationals();

// Deterministic 4-tuples (a, b, c, u): candidate i draws table entries at
// rotating offsets, and the first `count` candidates accepted by
// `admissible` are returned. Throws if the table cannot supply enough.
std::vector<std::array<Rat, 4>> parameter_tuples(
    std::size_t count, const std::function<bool(const std::array<Rat, 4>&)>& admissible);

}  // namespace propcount
