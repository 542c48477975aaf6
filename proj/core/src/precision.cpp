#include "pfsum/precision.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pfsum {

namespace {

constexpr long kGuardBits = 32;
constexpr long kDefaultBits = 50 * 3322 / 1000 + 1 + kGuardBits;

thread_local long t_working_bits = kDefaultBits;

}  // namespace

void Precision::validate() const {
  if (digits < 20) {
    throw std::invalid_argument("precision: digits must be >= 20, got " + std::to_string(digits));
  }
  if (n_max < 100) {
    throw std::invalid_argument("precision: n_max must be >= 100, got " + std::to_string(n_max));
  }
  if (!(tol > 0.0 && tol < 1.0)) {
    throw std::invalid_argument("precision: tol must lie in (0, 1)");
  }
  // Ten decimal guard digits stay reserved below the tolerance.
  if (std::log10(tol) < 10.0 - digits - 1e-9) {
    throw std::invalid_argument("precision: tol must be >= 10^(10 - digits)");
  }
}

long Precision::bits() const {
  return static_cast<long>(std::ceil(digits * 3.321928094887362)) + kGuardBits;
}

long working_bits() { return t_working_bits; }

int working_digits() { return static_cast<int>(static_cast<double>(t_working_bits - kGuardBits) * 0.30102999566398); }

PrecisionScope::PrecisionScope(const Precision& prec) : PrecisionScope(prec.bits()) {}

PrecisionScope::PrecisionScope(long bits) : saved_(t_working_bits) { t_working_bits = bits; }

PrecisionScope::~PrecisionScope() { t_working_bits = saved_; }

}  // namespace pfsum
