#pragma once

#include <cstddef>
#include <cstdint>

namespace crosscodes {

// Desk-scale budgets. Operations that would exceed them refuse instead of
// silently degrading to heuristics.
inline constexpr unsigned kMaxModulusBits = 30;      // residues fit uint32, products fit uint64
inline constexpr unsigned kMaxEnumerationBits = 24;  // full code enumeration: n*m <= 24
inline constexpr unsigned kMaxSearchBits = 12;       // exact max-code search: n*m <= 12

// Sphere-hash certification and decoder audits insert one entry per sphere
// member; disjoint spheres keep this below the space size anyway.
inline constexpr std::uint64_t kMaxSphereHashEntries = std::uint64_t{1} << kMaxEnumerationBits;

// Quadratic pairwise certification is a cross-check, not the workhorse.
inline constexpr std::size_t kMaxPairwiseWords = 8192;

}  // namespace crosscodes
