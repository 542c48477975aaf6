#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pfsum/bigcomplex.hpp"
#include "pfsum/precision.hpp"
#include "pfsum/product_engine.hpp"
#include "pfsum/series.hpp"

// Brute-force reference sums. Nothing here calls the Gamma family or the
// residue machinery; the point is to be slow and obviously right.

namespace pfsum::oracle {

enum class TailMode {
  None,
  /// Integral of the summand past the cut plus Euler-Maclaurin corrections.
  IntegralBound,
  /// Repeated averaging of the trailing partial sums (alternating series).
  PairBound,
};

struct OracleConfig {
  std::int64_t terms = 20000;
  TailMode tail_mode = TailMode::None;
};

/// sum_{k < terms} (a+k)^-m with the configured tail treatment. terms may be
/// up to 10 * n_max.
SeriesResult direct_zeta(int m, const BigComplex& a, const OracleConfig& cfg, const Precision& prec = {});

using SignFn = std::function<int(std::int64_t)>;
using PartFn = std::function<BigComplex(std::int64_t)>;

/// sum_{k < terms} sign(k) num(k) / den(k). With PairBound the partial sums
/// sampled every `stride` terms are averaged repeatedly; stride should make
/// consecutive blocks alternate in sign.
SeriesResult direct_alt_series(const SignFn& sign, const PartFn& numerator, const PartFn& denominator,
                               const OracleConfig& cfg, const Precision& prec = {}, int stride = 1);

/// prod over the first N base nodes (all rotations) of 1 - z/node.
BigComplex finite_product_F(const SequenceSpec& spec, std::int64_t N, const BigComplex& z);

/// Central difference of order 1 or 2 with h = 10^(-digits/3). Throws
/// PoleError when z is within 10h of one of `poles`.
BigComplex numeric_derivative(const std::function<BigComplex(const BigComplex&)>& fn, const BigComplex& z, int order,
                              const std::vector<BigComplex>& poles = {});

}  // namespace pfsum::oracle
