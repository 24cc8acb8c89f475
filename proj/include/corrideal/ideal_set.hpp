#pragma once

#include <bit>
#include <compare>
#include <cstdint>

namespace corrideal {

/// An ideal of a multi-matrix algebra, encoded as the subset of block
/// indices it contains (bit i = block i). Every subset is an ideal, ideal
/// sum is union and ideal intersection is intersection, so the full ideal
/// lattice of an n-block algebra is the 2^n bitmasks.
struct ideal_set {
  std::uint32_t bits = 0;

  constexpr ideal_set() = default;
  constexpr explicit ideal_set(std::uint32_t b) : bits(b) {}

  static constexpr ideal_set empty() { return ideal_set{}; }
  static constexpr ideal_set full(unsigned n) {
    return ideal_set(n >= 32 ? ~std::uint32_t{0}
                             : (std::uint32_t{1} << n) - 1);
  }
  static constexpr ideal_set single(unsigned i) {
    return ideal_set(std::uint32_t{1} << i);
  }

  constexpr bool contains(unsigned i) const { return (bits >> i) & 1u; }
  constexpr bool is_empty() const { return bits == 0; }
  constexpr unsigned count() const { return std::popcount(bits); }

  constexpr ideal_set with(unsigned i) const {
    return ideal_set(bits | (std::uint32_t{1} << i));
  }
  constexpr ideal_set without(unsigned i) const {
    return ideal_set(bits & ~(std::uint32_t{1} << i));
  }

  constexpr bool subset_of(ideal_set other) const {
    return (bits & ~other.bits) == 0;
  }

  friend constexpr ideal_set operator|(ideal_set a, ideal_set b) {
    return ideal_set(a.bits | b.bits);
  }
  friend constexpr ideal_set operator&(ideal_set a, ideal_set b) {
    return ideal_set(a.bits & b.bits);
  }
  /// Set difference a \ b.
  friend constexpr ideal_set operator-(ideal_set a, ideal_set b) {
    return ideal_set(a.bits & ~b.bits);
  }

  friend constexpr bool operator==(ideal_set a, ideal_set b) = default;
  friend constexpr auto operator<=>(ideal_set a, ideal_set b) = default;
};

}  // namespace corrideal
