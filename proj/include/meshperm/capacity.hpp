#pragma once

namespace meshperm {

inline constexpr int kDefaultCapacity = 10;

// Largest n for which n! fits in the signed 64-bit count type.
inline constexpr int kIntegerWidthCeiling = 20;

// The enumeration ceiling: kDefaultCapacity unless MESHPERM_NMAX is set.
// Throws InvalidInput if the variable is malformed or above
// kIntegerWidthCeiling.
int default_capacity();

// Throws CapacityError if n is negative or above limit.
void check_capacity(int n, int limit);

}  // namespace meshperm
