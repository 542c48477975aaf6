#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfsum/bigcomplex.hpp"
#include "pfsum/precision.hpp"
#include "pfsum/series.hpp"

namespace pfsum {

enum class SequenceKind {
  /// a_k = a + k, k >= 0, with power m >= 2.
  ArithmeticHurwitz,
  /// a_k = s(a + k) and b_k = -s(b + k), k >= 0, with power 1.
  InterleavedSigned,
  /// An explicit list of nodes with any power m >= 1.
  ExplicitFinite,
};

/// Pole sequence of F(z) = prod_n (1 - (z/a_n)^m).
///
/// Effective nodes are a_n w^r for r < m, w = e^(2 pi i/m). They are
/// enumerated by base index n (interleaved specs alternate a_0, b_0, a_1,
/// b_1, ...) and then by r.
struct SequenceSpec {
  SequenceKind kind = SequenceKind::ArithmeticHurwitz;
  BigComplex a{1};
  BigComplex b{1};
  BigReal scale{1};
  std::vector<BigComplex> nodes;
  int power_m = 2;

  static SequenceSpec hurwitz(const BigComplex& a, int m);
  static SequenceSpec interleaved(const BigComplex& a, const BigComplex& b, const BigReal& scale = BigReal(1));
  /// Nodes 2k-1 and -2k (k >= 1), i.e. interleaved(1/2, 1, 2).
  static SequenceSpec example_one();
  static SequenceSpec finite(std::vector<BigComplex> nodes, int m = 1);

  /// Throws DomainError (or DuplicateNodeError) when the spec violates its
  /// kind's constraints.
  void validate() const;
  bool is_finite() const { return kind == SequenceKind::ExplicitFinite; }
  /// Number of base nodes of a finite spec.
  std::int64_t finite_size() const { return static_cast<std::int64_t>(nodes.size()); }
  std::string describe() const;
};

struct NodeIndex {
  std::int64_t n = 0;
  int r = 0;
};

/// Effective node a_n w^r.
BigComplex node(const SequenceSpec& spec, NodeIndex idx);

/// Smallest node modulus (the radius of convergence of 1/F about 0).
BigReal min_node_modulus(const SequenceSpec& spec);

// Finite partial fractions.

struct DecompositionResult {
  int order_L = 0;
  std::vector<BigComplex> head_coeffs;
  std::vector<BigComplex> residue_weights;
  std::int64_t node_count = 0;
};

/// prod 1/(x - a_i) = sum mu_i/(x - a_i) with mu_i = prod_{j != i} 1/(a_i - a_j).
DecompositionResult decompose_homogeneous(const std::vector<BigComplex>& nodes);

struct LiftResult {
  BigComplex lhs;
  BigComplex rhs;
};

/// x^-L prod 1/(x - a_n) against its expansion with an order-L pole at 0:
/// sum_{j=1..L} sum_n (-mu_n / a_n^(L-j+1)) x^-j + sum_n (mu_n / a_n^L) / (x - a_n).
LiftResult lift_one_point(const std::vector<BigComplex>& nodes, int L, const BigComplex& x);

// Two expansions of 1/F.

/// Entry j is p_j = sum over effective nodes of node^-j (entry 0 is unused).
std::vector<BigComplex> power_sums(const SequenceSpec& spec, int j_max, const Precision& prec = {});

/// c_0..c_K from k c_k = sum_{j=1..k} p_j c_{k-j}.
std::vector<BigComplex> taylor_coeffs_inverse(const SequenceSpec& spec, int K, const Precision& prec = {});

/// lambda = 1/F'(node) from the Gamma closed form of the spec kind (exact
/// product rule for finite specs).
BigComplex residue_weight(const SequenceSpec& spec, NodeIndex idx, const Precision& prec = {});

/// Generates -m/F'(a+k) for k = 0, 1, 2, ... of a Hurwitz spec. For m = 2
/// the Gamma ratio is advanced by its recurrence; for m >= 3 each weight is
/// one exponential of a sum of log-Gamma values.
class HurwitzWeights {
 public:
  HurwitzWeights(const BigComplex& a, int m);
  BigComplex next();

 private:
  BigComplex a_;
  int m_;
  std::int64_t k_ = 0;
  BigComplex ratio_;  // m = 2: Gamma(2a+k) / (Gamma(a)^2 k!)
  BigComplex ln_gamma_a_;
};

/// [1/F]_J as the residue series sum -m/(F'(a_n) a_n^(J+1)); exactly 0 when
/// m does not divide J.
SeriesResult pfs_coeff(const SequenceSpec& spec, int J, const Precision& prec = {});

struct PfdEvaluation {
  BigComplex direct;
  BigComplex expansion;
  SeriesResult expansion_series;
};

/// Truncated product with a zeta-tail correction for 1/F(z).
BigComplex pfd_direct(const SequenceSpec& spec, const BigComplex& z, const Precision& prec = {});

/// Order-L expansion of 1/F(z); the value includes the Taylor head.
SeriesResult pfd_expansion(const SequenceSpec& spec, int L, const BigComplex& z, const Precision& prec = {});

/// 1/F(z) twice: as a truncated product with a zeta-tail correction and as
/// the order-L expansion sum_{j<L} c_j z^j + sum_n lambda_n (z/a_n)^L/(z - a_n).
PfdEvaluation pfd_evaluate(const SequenceSpec& spec, int L, const BigComplex& z, const Precision& prec = {});

/// Order-L decomposition data: c_0..c_{L-1} and the first `nodes` weights.
DecompositionResult order_decomposition(const SequenceSpec& spec, int L, std::int64_t nodes,
                                        const Precision& prec = {});

// Differential relation for G(z) = z prod (1 - (z/a_k)^2).

/// delta_k = G''(a_k)/G'(a_k); needs a symmetric (m = 2) Hurwitz or finite spec.
BigComplex node_curvature(const SequenceSpec& spec, std::int64_t k);

struct DifferentialRelation {
  BigComplex lhs;    // [H' + H^2]_J from the power sums
  SeriesResult rhs;  // residue side
};

/// [G''/G]_J two ways: from H = 1/z - 2 sum c_n z^(2n-1) with
/// c_n = sum a_k^-2n, and as sum -2 delta_k / a_k^(J+1) (J >= 2) or
/// -6 sum a_k^-2 (J = 0). Odd J gives zero on both sides.
DifferentialRelation differential_relation(const SequenceSpec& spec, int J, const Precision& prec = {});

/// The power-sum side of differential_relation on its own.
BigComplex differential_lhs(const SequenceSpec& spec, int J, const Precision& prec = {});
/// The residue side of differential_relation on its own.
SeriesResult differential_rhs(const SequenceSpec& spec, int J, const Precision& prec = {});

/// G^(L)(z)/G(z) for the Hurwitz spec (complete Bell polynomial in H and its
/// derivatives, each in closed polygamma form).
BigComplex log_derivative_ratio(const BigComplex& a, int L, const BigComplex& z);

/// G^(L)(a_k)/G'(a_k) for the Hurwitz spec; L = 2 gives delta_k.
BigComplex node_derivative_ratio(const BigComplex& a, int L, std::int64_t k);

}  // namespace pfsum
