#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "pfsum/bigcomplex.hpp"
#include "pfsum/precision.hpp"

namespace pfsum {

enum class SeriesStatus { Converged, HitTermCap, Diverging };

enum class SummationStrategy {
  Direct,
  PairwiseAlternating,
  /// Direct head plus an Euler-van Wijngaarden tail on the alternating
  /// amplitudes (-1)^k term(k).
  EulerTransform,
  /// Polynomial extrapolation in 1/N of the partial sums at N = 16 * 2^i;
  /// for slowly decaying series of one sign.
  Richardson,
};

struct SeriesResult {
  BigComplex value;
  std::int64_t terms_used = 0;
  BigReal tail_estimate;
  SeriesStatus status = SeriesStatus::Converged;

  bool converged() const { return status == SeriesStatus::Converged; }
};

using TermFn = std::function<BigComplex(std::int64_t)>;

/// Sums term(0) + term(1) + ... at the working precision of `prec`.
///
/// term is called at most once per index and in increasing order, so it may
/// advance internal recurrences.
SeriesResult sum_series(const TermFn& term, SummationStrategy strategy, const Precision& prec);

std::string_view to_string(SeriesStatus s);
std::string_view to_string(SummationStrategy s);

}  // namespace pfsum
