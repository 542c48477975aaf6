#pragma once

#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pfsum/bigreal.hpp"

namespace pfsum {

/// Complex number with BigReal parts.
class BigComplex {
 public:
  BigComplex() = default;
  BigComplex(BigReal re) : re_(std::move(re)) {}
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
  template <std::integral I>
  BigComplex(I v) : re_(v) {}

  /// Parses "re", "re+imi", "re-imi" or "imi" (e.g. "1+0.25i", "0.3-0.2i").
  static BigComplex parse(std::string_view text);
  static BigComplex i();

  const BigReal& real() const { return re_; }
  const BigReal& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  /// Division by an exact zero throws DomainError.
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

  friend BigComplex operator*(const BigComplex& a, const BigReal& b) { return {a.re_ * b, a.im_ * b}; }
  friend BigComplex operator*(const BigReal& a, const BigComplex& b) { return b * a; }
  friend BigComplex operator*(const BigComplex& a, long b) { return {a.re_ * b, a.im_ * b}; }
  friend BigComplex operator*(long a, const BigComplex& b) { return b * a; }
  friend BigComplex operator/(const BigComplex& a, const BigReal& b) { return {a.re_ / b, a.im_ / b}; }
  friend BigComplex operator/(const BigComplex& a, long b) { return {a.re_ / b, a.im_ / b}; }
  friend BigComplex operator+(const BigComplex& a, long b) { return {a.re_ + b, a.im_}; }
  friend BigComplex operator-(const BigComplex& a, long b) { return {a.re_ - b, a.im_}; }
  friend BigComplex operator+(long a, const BigComplex& b) { return {b.re_ + a, b.im_}; }
  friend BigComplex operator-(long a, const BigComplex& b) { return {a - b.re_, -b.im_}; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  BigReal re_;
  BigReal im_;
};

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
/// |z|^2
BigReal norm(const BigComplex& z);
/// Principal argument in (-pi, pi].
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal logarithm; throws DomainError at zero.
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);
/// Integer power by repeated squaring; negative n inverts.
BigComplex pow(const BigComplex& z, long n);
/// Principal power exp(w log z).
BigComplex pow(const BigComplex& z, const BigComplex& w);
/// 1/z
BigComplex inverse(const BigComplex& z);

/// Fixed notation "re+imi" (imaginary part omitted when exactly zero).
std::string to_fixed(const BigComplex& z, int places);
std::string to_scientific(const BigComplex& z, int significant);

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

}  // namespace pfsum
