#pragma once

#include <cstdint>
#include <vector>

#include "superchar/lattice.hpp"

namespace superchar {

// Every strictly dominant integral weight with entries in [lo, hi].
std::vector<ShiftedWeight> enumerate_strictly_dominant(AlgebraShape shape, std::int64_t lo,
                                                       std::int64_t hi);

// Deterministic sample of PDC weights from the same window.
std::vector<ShiftedWeight> sample_pdc(AlgebraShape shape, std::int64_t lo, std::int64_t hi,
                                      std::size_t count, std::uint64_t seed);

}  // namespace superchar
