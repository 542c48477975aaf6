#include "pfsum/bigreal.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

#include "pfsum/errors.hpp"

namespace pfsum {

BigReal::BigReal() {
  mpfr_init2(v_, working_bits());
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(double v) : BigReal() { mpfr_set_d(v_, v, MPFR_RNDN); }

BigReal::BigReal(std::string_view text) : BigReal() {
  std::string buf(text);
  if (buf.empty() || mpfr_set_str(v_, buf.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: '" + buf + "'");
  }
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    if (v_[0]._mpfr_d == nullptr) {
      mpfr_init2(v_, mpfr_get_prec(other.v_));
    } else {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    }
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) {
    if (other.v_[0]._mpfr_d == nullptr) {
      mpfr_set_zero(v_, 1);
    } else if (v_[0]._mpfr_d == nullptr) {
      v_[0] = other.v_[0];
      other.v_[0]._mpfr_d = nullptr;
    } else {
      mpfr_swap(v_, other.v_);
    }
  }
  return *this;
}

BigReal::~BigReal() {
  if (v_[0]._mpfr_d != nullptr) {
    mpfr_clear(v_);
  }
}

BigReal BigReal::ratio(long num, long den) {
  if (den == 0) {
    throw DomainError("BigReal::ratio: zero denominator");
  }
  BigReal r(num);
  mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
  return r;
}

BigReal BigReal::pi() {
  BigReal r;
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::euler_gamma() {
  BigReal r;
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::ln2() {
  BigReal r;
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow10(long e) {
  BigReal r;
  mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) {
    mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
  }
  return r;
}

long BigReal::exponent2() const {
  if (!mpfr_regular_p(v_)) {
    return mpfr_zero_p(v_) ? -(1L << 40) : (1L << 40);
  }
  return mpfr_get_exp(v_);
}

void BigReal::adopt_working_precision() {
  if (mpfr_get_prec(v_) != working_bits()) {
    mpfr_prec_round(v_, working_bits(), MPFR_RNDN);
  }
}

BigReal BigReal::operator-() const {
  BigReal r;
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& o) {
  adopt_working_precision();
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  adopt_working_precision();
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  adopt_working_precision();
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  if (o.is_zero()) {
    throw DomainError("BigReal: division by exact zero");
  }
  adopt_working_precision();
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r;
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r;
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r;
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  if (b.is_zero()) {
    throw DomainError("BigReal: division by exact zero");
  }
  BigReal r;
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal r;
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal r;
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, long b) {
  BigReal r;
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, long b) {
  if (b == 0) {
    throw DomainError("BigReal: division by exact zero");
  }
  BigReal r;
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal r;
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  if (b.is_zero()) {
    throw DomainError("BigReal: division by exact zero");
  }
  BigReal r;
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.v_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

namespace {

template <typename Fn>
BigReal unary(const BigReal& x, Fn fn) {
  BigReal r;
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) {
    throw DomainError("sqrt of a negative BigReal");
  }
  return unary(x, mpfr_sqrt);
}
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) {
  if (x.sign() <= 0) {
    throw DomainError("log of a non-positive BigReal");
  }
  return unary(x, mpfr_log);
}
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal sinh(const BigReal& x) { return unary(x, mpfr_sinh); }
BigReal cosh(const BigReal& x) { return unary(x, mpfr_cosh); }

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r;
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r;
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  if (n < 0 && x.is_zero()) {
    throw DomainError("BigReal: negative power of zero");
  }
  BigReal r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

BigReal floor(const BigReal& x) {
  BigReal r;
  mpfr_floor(r.get(), x.get());
  return r;
}

BigReal round(const BigReal& x) {
  BigReal r;
  mpfr_round(r.get(), x.get());
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

namespace {

std::string format(const char* spec, int digits, const BigReal& x) {
  char* out = nullptr;
  if (mpfr_asprintf(&out, spec, digits, x.get()) < 0 || out == nullptr) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

}  // namespace

std::string to_scientific(const BigReal& x, int significant) {
  if (significant < 1) {
    significant = 1;
  }
  return format("%.*Re", significant - 1, x);
}

std::string to_fixed(const BigReal& x, int places) {
  if (places < 0) {
    places = 0;
  }
  std::string s = format("%.*Rf", places, x);
  // "-0.000" would make byte-level output depend on the sign of a rounding error.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
  return os << to_scientific(x, static_cast<int>(os.precision()));
}

}  // namespace pfsum
