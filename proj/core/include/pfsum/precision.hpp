#pragma once

#include <cstdint>

namespace pfsum {

/// Working-precision settings carried by every computation.
///
/// `digits` is the number of significant decimal digits of the working
/// precision, `n_max` caps the number of summation terms and `tol` is the
/// absolute residual an identity check must reach.
struct Precision {
  int digits = 50;
  std::int64_t n_max = 20000;
  double tol = 1e-20;

  /// Throws std::invalid_argument unless digits >= 20, n_max >= 100,
  /// 0 < tol < 1 and tol >= 10^(10 - digits).
  void validate() const;

  /// Binary precision (bits) used for BigReal values, including guard bits.
  long bits() const;
};

/// Precision in bits currently used when BigReal values are created on this
/// thread.
long working_bits();

/// Decimal digits represented by working_bits(), excluding guard bits.
int working_digits();

/// Sets the thread's working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(const Precision& prec);
  explicit PrecisionScope(long bits);
  ~PrecisionScope();

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

}  // namespace pfsum
