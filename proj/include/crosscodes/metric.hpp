#pragma once

#include <cstdint>
#include <vector>

#include "crosscodes/word.hpp"

namespace crosscodes {

/**
 * Distance value extended with a single infinite element. Infinity compares
 * greater than every finite value.
 */
class ExtendedDistance {
 public:
  static ExtendedDistance infinity() { return ExtendedDistance(true, 0); }
  static ExtendedDistance finite(std::uint64_t v) { return ExtendedDistance(false, v); }

  bool is_finite() const { return !infinite_; }
  std::uint64_t value() const {
    if (infinite_) throw std::domain_error("infinite distance has no finite value");
    return v_;
  }

  friend bool operator==(ExtendedDistance a, ExtendedDistance b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }
  friend bool operator!=(ExtendedDistance a, ExtendedDistance b) { return !(a == b); }
  friend bool operator<(ExtendedDistance a, ExtendedDistance b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(ExtendedDistance a, ExtendedDistance b) { return a < b || a == b; }
  friend bool operator>(ExtendedDistance a, ExtendedDistance b) { return b < a; }
  friend bool operator>=(ExtendedDistance a, ExtendedDistance b) { return b <= a; }

  // Convenience comparisons against finite thresholds.
  friend bool operator>=(ExtendedDistance a, std::uint64_t v) { return a >= finite(v); }
  friend bool operator<=(ExtendedDistance a, std::uint64_t v) { return a <= finite(v); }

 private:
  ExtendedDistance(bool inf, std::uint64_t v) : infinite_(inf), v_(v) {}
  bool infinite_;
  std::uint64_t v_;
};

/**
 * Cross distance: 0 for equal words, the cycle distance of the single
 * differing coordinate when exactly one differs, infinity otherwise.
 * Finite iff hamming_distance <= 1; no triangle inequality.
 */
ExtendedDistance cross_distance(const Word& a, const Word& b);

/**
 * All words reachable from the center by changing one coordinate by a
 * magnitude in [1, t], plus the center. Sorted, duplicate free.
 * Requires 0 <= t <= 2^{m-1} - 1 so +a and -a stay distinct.
 */
std::vector<Word> cross_sphere(const Word& center, unsigned t);

// Cross sphere cardinality 2nt + 1.
std::uint64_t cross_sphere_volume(unsigned n, unsigned t);

// Lee ball cardinality sum_i 2^i C(n,i) C(t,i); valid while the ball does not
// wrap, which holds for the t <= 2^{m-1} - 1 range enforced by the bound functions.
std::uint64_t lee_sphere_volume(unsigned n, unsigned t);

enum class Metric { cross, lee };

// floor(2^{nm} / sphere volume). Requires n*m <= 62 and 1 <= t <= 2^{m-1} - 1.
std::uint64_t sphere_packing_bound(unsigned n, unsigned m, unsigned t, Metric metric);

// Largest power of two strictly below the rational bound 2^{nm} / volume.
// Equality is impossible (volume is odd and > 1), so this is the largest
// 2^j <= sphere_packing_bound.
std::uint64_t linear_sphere_packing_bound(unsigned n, unsigned m, unsigned t, Metric metric);

struct BoundRow {
  std::uint64_t q = 0;
  std::uint64_t lee_bound = 0;
  std::uint64_t cross_bound = 0;
  std::uint64_t lee_linear_bound = 0;
  std::uint64_t cross_linear_bound = 0;

  friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

// One row per modulus exponent, in the given order.
std::vector<BoundRow> bound_table(unsigned n, unsigned t, const std::vector<unsigned>& ms);

struct PerfectCodeWitness {
  std::uint64_t sphere_volume = 0;    // 2nt + 1, odd and > 1
  bool volume_divides_space = false;  // 2nt+1 | 2^{nm}; never true
  bool impossible() const { return !volume_divides_space; }
};

// No code ever partitions Z_{2^m}^n into radius-t crosses: an odd volume
// greater than 1 cannot divide a power of two.
PerfectCodeWitness perfect_code_impossible(unsigned n, unsigned m, unsigned t);

}  // namespace crosscodes
