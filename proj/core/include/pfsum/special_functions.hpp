#pragma once

#include <string_view>

#include "pfsum/bigcomplex.hpp"
#include "pfsum/precision.hpp"
#include "pfsum/series.hpp"

namespace pfsum {

// Gamma family. These evaluate at the thread's working precision; wrap calls
// in a PrecisionScope to change it. Non-positive integers throw PoleError.

/// Principal branch of log Gamma (analytic off the negative real axis).
BigComplex ln_gamma(const BigComplex& z);
BigComplex gamma(const BigComplex& z);
BigComplex digamma(const BigComplex& z);
BigComplex trigamma(const BigComplex& z);
/// n-th derivative of digamma, n >= 0.
BigComplex polygamma(int n, const BigComplex& z);

// Zeta and beta family.

/// zeta(m, a) = sum_k (a+k)^-m by Euler-Maclaurin.
/// Throws PoleError for a in {0, -1, -2, ...} and DomainError for m < 2 or
/// Re(a) <= -n_max/2.
SeriesResult hurwitz_zeta(int m, const BigComplex& a, const Precision& prec = {});
/// Real order s > 1.
SeriesResult riemann_zeta(const BigReal& s, const Precision& prec = {});
/// sum_{k>=1} (-1)^(k-1) / k^s, s > 0.
SeriesResult alternating_zeta(const BigReal& s, const Precision& prec = {});
/// sum_{k>=1} (-1)^(k-1) H_k / k^s, integer s >= 2.
SeriesResult zeta_AH(int s, const Precision& prec = {});
/// sum_{k>=0} (-1)^k / (2k+1)^s, s > 0.
SeriesResult dirichlet_beta(const BigReal& s, const Precision& prec = {});
/// beta(2n+1) = (-1)^n E_2n pi^(2n+1) / (2^(2n+2) (2n)!).
BigReal dirichlet_beta_odd(int n);
/// sum_{k>=1} (-1)^(k-1) H_{k-1} / (2k-1)^s, integer s >= 2.
SeriesResult beta_H(int s, const Precision& prec = {});

enum class ZetaKind {
  HurwitzZeta,
  RiemannZeta,
  AlternatingZeta,
  AlternatingHarmonicZeta,
  DirichletBeta,
  DirichletBetaHarmonic,
};

struct ZetaFamilyValue {
  ZetaKind kind;
  BigComplex s_or_m;
  BigComplex a;  // only meaningful for HurwitzZeta
  SeriesResult result;
};

/// Dispatches to the function for `kind`. Integer-order kinds require an
/// integral real s.
ZetaFamilyValue evaluate_zeta(ZetaKind kind, const BigComplex& s, const BigComplex& a, const Precision& prec = {});

std::string_view to_string(ZetaKind kind);

}  // namespace pfsum
