#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "corrideal/errors.hpp"

namespace corrideal {

/// Extended natural number: an element of N u {infinity} with saturating
/// arithmetic. All multiplicities and module sizes are ext_nat values.
///
/// Arithmetic rules: inf + n = inf, inf * n = inf for n > 0, inf * 0 = 0.
/// Finite overflow is an error rather than silent wraparound.
class ext_nat {
 public:
  constexpr ext_nat() = default;
  constexpr ext_nat(std::uint64_t n) : v_(n) {}

  static constexpr ext_nat infinity() {
    ext_nat x;
    x.v_ = kInf;
    return x;
  }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr bool is_finite() const { return v_ != kInf; }
  constexpr bool is_zero() const { return v_ == 0; }

  /// Finite value accessor; callers must check is_finite() first.
  constexpr std::uint64_t value() const { return v_; }

  friend ext_nat operator+(ext_nat a, ext_nat b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a.v_, b.v_, &r) || r == kInf)
      fail(errc::overflow, "extended natural addition overflow");
    return ext_nat(r);
  }

  friend ext_nat operator*(ext_nat a, ext_nat b) {
    if (a.is_zero() || b.is_zero()) return ext_nat(0);
    if (a.is_infinite() || b.is_infinite()) return infinity();
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a.v_, b.v_, &r) || r == kInf)
      fail(errc::overflow, "extended natural multiplication overflow");
    return ext_nat(r);
  }

  ext_nat& operator+=(ext_nat b) { return *this = *this + b; }
  ext_nat& operator*=(ext_nat b) { return *this = *this * b; }

  // inf is the sentinel UINT64_MAX, so raw comparison gives the total order
  // with every natural below infinity.
  friend constexpr auto operator<=>(ext_nat a, ext_nat b) { return a.v_ <=> b.v_; }
  friend constexpr bool operator==(ext_nat a, ext_nat b) { return a.v_ == b.v_; }

  std::string to_string() const {
    return is_infinite() ? "inf" : std::to_string(v_);
  }

 private:
  static constexpr std::uint64_t kInf = ~std::uint64_t{0};
  std::uint64_t v_ = 0;
};

}  // namespace corrideal
