#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pfsum/precision.hpp"

namespace pfsum {

/// Real number at the thread's working precision (see PrecisionScope).
///
/// Results of arithmetic are rounded to the working precision in effect when
/// they are produced (compound assignment included); copies keep the
/// precision of their source.
class BigReal {
 public:
  BigReal();
  template <std::integral I>
  BigReal(I v) : BigReal() {
    if constexpr (std::is_signed_v<I>) {
      mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
    } else {
      mpfr_set_ui(v_, static_cast<unsigned long>(v), MPFR_RNDN);
    }
  }
  explicit BigReal(double v);
  /// Parses a decimal literal such as "0.75" or "-1.5e-3"; throws
  /// std::invalid_argument on malformed input.
  explicit BigReal(std::string_view text);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal ratio(long num, long den);
  static BigReal pi();
  static BigReal euler_gamma();
  static BigReal ln2();
  /// 10^e at working precision.
  static BigReal pow10(long e);

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Base-2 exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent2() const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  /// Division by an exact zero throws DomainError.
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator+(long a, const BigReal& b) { return b + a; }
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator/(long a, const BigReal& b);

  // Other integer types forward to the long overloads (int would otherwise be
  // ambiguous against the deleted double overloads).
  template <std::integral I>
    requires(!std::same_as<I, long>)
  friend BigReal operator+(const BigReal& a, I b) { return a + static_cast<long>(b); }
  template <std::integral I>
    requires(!std::same_as<I, long>)
  friend BigReal operator-(const BigReal& a, I b) { return a - static_cast<long>(b); }
  template <std::integral I>
    requires(!std::same_as<I, long>)
  friend BigReal operator*(const BigReal& a, I b) { return a * static_cast<long>(b); }
  template <std::integral I>
    requires(!std::same_as<I, long>)
  friend BigReal operator/(const BigReal& a, I b) { return a / static_cast<long>(b); }
  template <std::integral I>
    requires(!std::same_as<I, long>)
  friend BigReal operator+(I a, const BigReal& b) { return static_cast<long>(a) + b; }
  template <std::integral I>
    requires(!std::same_as<I, long>)
  friend BigReal operator-(I a, const BigReal& b) { return static_cast<long>(a) - b; }
  template <std::integral I>
    requires(!std::same_as<I, long>)
  friend BigReal operator*(I a, const BigReal& b) { return static_cast<long>(a) * b; }
  template <std::integral I>
    requires(!std::same_as<I, long>)
  friend BigReal operator/(I a, const BigReal& b) { return static_cast<long>(a) / b; }

  // Doubles must go through the explicit constructor.
  friend BigReal operator+(const BigReal&, double) = delete;
  friend BigReal operator-(const BigReal&, double) = delete;
  friend BigReal operator*(const BigReal&, double) = delete;
  friend BigReal operator/(const BigReal&, double) = delete;
  friend BigReal operator+(double, const BigReal&) = delete;
  friend BigReal operator-(double, const BigReal&) = delete;
  friend BigReal operator*(double, const BigReal&) = delete;
  friend BigReal operator/(double, const BigReal&) = delete;

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, long b);

 private:
  // Compound assignment rounds the accumulator to the current working
  // precision, like the binary operators do.
  void adopt_working_precision();

  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
/// Natural logarithm; throws DomainError for x <= 0.
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal floor(const BigReal& x);
BigReal round(const BigReal& x);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);

/// Scientific notation with `significant` digits, e.g. "1.2345e-03".
std::string to_scientific(const BigReal& x, int significant);
/// Fixed notation with `places` digits after the decimal point.
std::string to_fixed(const BigReal& x, int places);

std::ostream& operator<<(std::ostream& os, const BigReal& x);

}  // namespace pfsum
