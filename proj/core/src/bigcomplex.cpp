#include "pfsum/bigcomplex.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "pfsum/errors.hpp"

namespace pfsum {

BigComplex BigComplex::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') {
      s.push_back(c);
    }
  }
  if (s.empty()) {
    throw std::invalid_argument("empty complex literal");
  }
  if (s.back() != 'i') {
    return BigComplex(BigReal(s));
  }
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string t) {
    if (t.empty() || t == "+") {
      return BigReal(1);
    }
    if (t == "-") {
      return BigReal(-1);
    }
    return BigReal(t);
  };
  if (split == std::string::npos) {
    return BigComplex(BigReal(0), imag_part(s));
  }
  return BigComplex(BigReal(s.substr(0, split)), imag_part(s.substr(split)));
}

BigComplex BigComplex::i() { return BigComplex(BigReal(0), BigReal(1)); }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  *this = *this * o;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  *this = *this / o;
  return *this;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) {
    return BigComplex(a.re_ * b.re_);
  }
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  if (b.is_zero()) {
    throw DomainError("BigComplex: division by exact zero");
  }
  if (b.im_.is_zero()) {
    return {a.re_ / b.re_, a.im_ / b.re_};
  }
  const BigReal d = b.re_ * b.re_ + b.im_ * b.im_;
  return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
}

BigComplex conj(const BigComplex& z) { return {z.real(), -z.imag()}; }

BigReal abs(const BigComplex& z) { return hypot(z.real(), z.imag()); }

BigReal norm(const BigComplex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

BigReal arg(const BigComplex& z) { return atan2(z.imag(), z.real()); }

BigComplex exp(const BigComplex& z) {
  const BigReal m = exp(z.real());
  if (z.imag().is_zero()) {
    return BigComplex(m);
  }
  return {m * cos(z.imag()), m * sin(z.imag())};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) {
    throw DomainError("log of zero");
  }
  if (z.imag().is_zero() && z.real().sign() > 0) {
    return BigComplex(log(z.real()));
  }
  return {log(abs(z)), arg(z)};
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) {
    return BigComplex();
  }
  if (z.imag().is_zero() && z.real().sign() > 0) {
    return BigComplex(sqrt(z.real()));
  }
  const BigReal r = abs(z);
  BigReal re = sqrt((r + z.real()) / 2);
  BigReal im = sqrt((r - z.real()) / 2);
  if (z.imag().sign() < 0) {
    im = -im;
  }
  return {re, im};
}

BigComplex sin(const BigComplex& z) {
  if (z.imag().is_zero()) {
    return BigComplex(sin(z.real()));
  }
  return {sin(z.real()) * cosh(z.imag()), cos(z.real()) * sinh(z.imag())};
}

BigComplex cos(const BigComplex& z) {
  if (z.imag().is_zero()) {
    return BigComplex(cos(z.real()));
  }
  return {cos(z.real()) * cosh(z.imag()), -(sin(z.real()) * sinh(z.imag()))};
}

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) {
    return inverse(pow(z, -n));
  }
  BigComplex result(1);
  BigComplex base = z;
  auto e = static_cast<unsigned long>(n);
  while (e != 0) {
    if ((e & 1UL) != 0) {
      result *= base;
    }
    e >>= 1U;
    if (e != 0) {
      base *= base;
    }
  }
  return result;
}

BigComplex pow(const BigComplex& z, const BigComplex& w) {
  if (z.is_zero()) {
    if (w.real().sign() > 0) {
      return BigComplex();
    }
    throw DomainError("pow: zero base with non-positive exponent");
  }
  return exp(w * log(z));
}

BigComplex inverse(const BigComplex& z) { return BigComplex(1) / z; }

std::string to_fixed(const BigComplex& z, int places) {
  std::string s = to_fixed(z.real(), places);
  if (!z.imag().is_zero()) {
    std::string im = to_fixed(z.imag(), places);
    if (im.find_first_not_of("0.") != std::string::npos) {
      s += (im.front() == '-' ? "" : "+") + im + "i";
    }
  }
  return s;
}

std::string to_scientific(const BigComplex& z, int significant) {
  std::string s = to_scientific(z.real(), significant);
  if (!z.imag().is_zero()) {
    std::string im = to_scientific(z.imag(), significant);
    s += (im.front() == '-' ? "" : "+") + im + "i";
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
  return os << to_scientific(z, static_cast<int>(os.precision()));
}

}  // namespace pfsum
