// Deterministic example families. Every emitted descriptor builds into a
// validated faithful G-prime action of one of Z2, Z3, Z4, Z2xZ2 with total
// dimension <= 24.
#pragma once

#include <cstdint>
#include <vector>

#include "cstar/harness/descriptor.hpp"

namespace cstar::harness {

enum class Family { inner, block_permutation, gauge, mixed };

Family family_from_string(const std::string& name);
std::string family_name(Family f);
const std::vector<Family>& all_families();

/// deterministic under (family, seed, count)
std::vector<SystemDescriptor> generate_examples(Family family, std::uint64_t seed, int count);

}  // namespace cstar::harness
