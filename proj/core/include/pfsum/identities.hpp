#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pfsum/bigcomplex.hpp"
#include "pfsum/precision.hpp"
#include "pfsum/product_engine.hpp"
#include "pfsum/series.hpp"

namespace pfsum {

enum class ReportStatus { Pass, Fail, NonConvergent };

std::string_view to_string(ReportStatus s);

/// One numerical identity evaluated two independent ways.
struct IdentityReport {
  std::string identity_id;
  std::map<std::string, std::string> params;
  BigComplex lhs;
  BigComplex rhs;
  BigReal abs_residual;
  BigReal rel_residual;
  std::int64_t terms_used = 0;
  std::int64_t elapsed_ms = 0;
  ReportStatus status = ReportStatus::Fail;

  /// Route tags seen while computing each side (see trace.hpp).
  std::set<std::string> lhs_routes;
  std::set<std::string> rhs_routes;
};

/// zeta(2, a) against its residue series. Re(a) < 2, 2a not in {0, -1, ...}.
IdentityReport zeta2_pfs(const BigComplex& a, const Precision& prec = {});

/// zeta(m, a) against the cyclotomic residue series. By default requires
/// 0 < Re(a) < 2; `guard = false` lifts that restriction.
IdentityReport zeta_m_pfs(int m, const BigComplex& a, const Precision& prec = {}, bool guard = true);

/// zeta(3) from sum 3 (-1)^(n-1) Gamma(1 - w n) Gamma(1 - w^2 n) / (n! n^3).
/// The real-argument variant with (1 +- sqrt 3)/2 is summed for 30 terms and
/// its residual is recorded in params only.
IdentityReport zeta3_apery(const Precision& prec = {});

/// Gamma(a+z) Gamma(a-z) against its order-1 partial fraction expansion.
IdentityReport gamma_pfd_order1(const BigComplex& a, const BigComplex& z, const Precision& prec = {});

/// The three double-factorial sums over the nodes 2k-1, -2k.
std::vector<IdentityReport> example1_sums(const Precision& prec = {});

/// Gamma(a) Gamma(b) [1/F]_J from power sums against
/// sum (-1)^k Gamma(a+b+k)/k! ((a+k)^-(J+1) + (-1)^J (b+k)^-(J+1)).
IdentityReport example2_coeff(const BigComplex& a, const BigComplex& b, int J, const Precision& prec = {});

/// The residue series of example2_coeff with sign (-1)^(J + sign_shift).
SeriesResult example2_series(const BigComplex& a, const BigComplex& b, int J, int sign_shift,
                             const Precision& prec = {});

/// sum (-1)^(k(k+1)/2) / (2k+1)^2 = sqrt(2) pi^2 / 16.
IdentityReport lemniscatic_sum(const Precision& prec = {});

/// z^(2n) coefficient of Gamma(a+z) Gamma(a-z) (psi(a+z) + psi(a-z)): Taylor
/// composition from polygamma values against the residue series.
IdentityReport gamma_psi_coeff(const BigComplex& a, int n, const Precision& prec = {});

IdentityReport zetaAH_recursion(int n, const Precision& prec = {});
IdentityReport betaH_recursion(int n, const Precision& prec = {});

/// (2m+3) zeta(2m+2) = 2 sum zeta(2i) zeta(2m+2-2i), right side from exact
/// Bernoulli numbers.
IdentityReport zeta_even_recursion(int m, const Precision& prec = {});

/// (m+1/2) zeta(2m+2,a) - sum zeta(2i,a) zeta(2m+2-2i,a)
///   = sum (psi(1+k) - psi(2a+k)) / (a+k)^(2m+1).
IdentityReport hurwitz_even_recursion(int m, const BigComplex& a, const Precision& prec = {});

/// (2m+3) c_{m+1} - 2 sum c_i c_{m+1-i} = sum delta_k / a_k^(2m+1) with
/// c_n = sum a_k^-2n.
IdentityReport power_sum_recursion(const SequenceSpec& spec, int m, const Precision& prec = {});

/// [G''/G]_J from power sums against the node-curvature series.
IdentityReport differential_relation_check(const SequenceSpec& spec, int J, const Precision& prec = {});

// Conjecture probe.

struct ProbeSample {
  BigComplex z;
  BigComplex lhs;
  BigComplex rhs;
  BigReal residual;
  std::int64_t terms_used = 0;
  bool converged = true;
};

struct ProbeReport {
  BigComplex a;
  int L = 0;
  /// L = 2: the series sum 2 delta_k / a_k - 6 zeta(2, a). L >= 3: mean of
  /// lhs minus the pole series over the converged samples.
  BigComplex constant;
  BigReal constant_variance;
  std::vector<ProbeSample> samples;
};

/// G^(L)(z)/G(z) against C_L + sum_k G^(L)(a_k)/G'(a_k) 2 a_k / (z^2 - a_k^2)
/// for G(z) = z Gamma(a)^2 / (Gamma(a+z) Gamma(a-z)). No pass/fail.
ProbeReport conjecture_probe(const BigComplex& a, int L, const std::vector<BigComplex>& z_samples,
                             const Precision& prec = {});

/// `count` sample points in the disc |z| < |a|/2, away from 0.
std::vector<BigComplex> probe_samples(const BigComplex& a, int count, std::uint64_t seed);

// Catalog.

/// Identity ids known to run_identity, in sorted order.
const std::vector<std::string>& catalog_ids();

/// The documented default case of `id` followed by three seeded random draws
/// inside its domain (where it has continuous parameters). Throws
/// std::invalid_argument for an unknown id.
std::vector<IdentityReport> run_identity(std::string_view id, std::uint64_t seed, const Precision& prec = {});

/// Runs the ids concurrently and returns the reports sorted by identity_id.
std::vector<IdentityReport> run_suite(const std::vector<std::string>& ids, std::uint64_t seed,
                                      const Precision& prec = {});

/// Decimal text of a parameter, trailing zeros removed ("0.75", "0.3+0.2i").
std::string param_string(const BigComplex& z);

}  // namespace pfsum
