#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "crosscodes/limits.hpp"

namespace crosscodes {

/**
 * Power-of-two modulus 2^m. Carried by every value so mixed-modulus
 * arithmetic is rejected at operation boundaries.
 */
class Modulus {
 public:
  explicit Modulus(unsigned exponent) : m_(exponent) {
    if (exponent == 0 || exponent > kMaxModulusBits)
      throw std::invalid_argument("modulus exponent must be in [1, " +
                                  std::to_string(kMaxModulusBits) + "]");
  }

  unsigned exponent() const { return m_; }
  std::uint64_t size() const { return std::uint64_t{1} << m_; }

  // Canonical residue in [0, 2^m).
  std::uint32_t reduce(std::int64_t v) const {
    const std::int64_t q = static_cast<std::int64_t>(size());
    std::int64_t r = v % q;
    if (r < 0) r += q;
    return static_cast<std::uint32_t>(r);
  }

  friend bool operator==(Modulus a, Modulus b) { return a.m_ == b.m_; }
  friend bool operator!=(Modulus a, Modulus b) { return a.m_ != b.m_; }

 private:
  unsigned m_;
};

inline void require_same_modulus(Modulus a, Modulus b) {
  if (a != b) throw std::invalid_argument("operands have different moduli");
}

/** Immutable residue in Z_{2^m}, stored canonically in [0, 2^m). */
class RingElement {
 public:
  RingElement(std::int64_t value, Modulus mod) : v_(mod.reduce(value)), mod_(mod) {}

  std::uint32_t value() const { return v_; }
  Modulus modulus() const { return mod_; }

  friend RingElement operator+(RingElement a, RingElement b) {
    require_same_modulus(a.mod_, b.mod_);
    return RingElement(static_cast<std::int64_t>(a.v_) + b.v_, a.mod_);
  }
  friend RingElement operator-(RingElement a, RingElement b) {
    require_same_modulus(a.mod_, b.mod_);
    return RingElement(static_cast<std::int64_t>(a.v_) - b.v_, a.mod_);
  }
  friend RingElement operator*(RingElement a, RingElement b) {
    require_same_modulus(a.mod_, b.mod_);
    // v < 2^30 on both sides, product < 2^60 fits int64.
    return RingElement(static_cast<std::int64_t>(a.v_) * b.v_, a.mod_);
  }
  RingElement operator-() const { return RingElement(-static_cast<std::int64_t>(v_), mod_); }

  friend bool operator==(RingElement a, RingElement b) {
    return a.mod_ == b.mod_ && a.v_ == b.v_;
  }
  friend bool operator!=(RingElement a, RingElement b) { return !(a == b); }

 private:
  std::uint32_t v_;
  Modulus mod_;
};

// |x| = min(x, 2^m - x): distance to 0 on the cycle. Range [0, 2^{m-1}].
inline std::uint32_t abs_val(std::uint32_t canonical, Modulus mod) {
  const std::uint64_t q = mod.size();
  return static_cast<std::uint32_t>(canonical <= q - canonical ? canonical : q - canonical);
}
inline std::uint32_t abs_val(RingElement x) { return abs_val(x.value(), x.modulus()); }

// Representative of x in (-2^{m-1}, 2^{m-1}]; the positive boundary maps to itself.
inline std::int64_t signed_residue(std::uint32_t canonical, Modulus mod) {
  const std::int64_t q = static_cast<std::int64_t>(mod.size());
  const std::int64_t v = canonical;
  return v <= q / 2 ? v : v - q;
}
inline std::int64_t signed_residue(RingElement x) { return signed_residue(x.value(), x.modulus()); }

/**
 * Multiplicative inverse of an odd residue, by Newton lifting
 * (x <- x(2 - ax) doubles the number of correct low bits).
 * Throws std::domain_error for even inputs: they are zero divisors.
 */
inline RingElement inverse_odd(RingElement a) {
  if (a.value() % 2 == 0) throw std::domain_error("even residue has no inverse mod 2^m");
  const std::uint64_t q = a.modulus().size();
  const std::uint64_t mask = q - 1;
  std::uint64_t x = a.value() & 0x7u;  // a^{-1} mod 8 == a mod 8 for odd a
  for (unsigned bits = 3; bits < a.modulus().exponent(); bits *= 2)
    x = (x * (2 + mask + 1 - ((a.value() * x) & mask))) & mask;  // x(2 - ax) without signed wrap
  x &= mask;
  return RingElement(static_cast<std::int64_t>(x), a.modulus());
}

}  // namespace crosscodes
