#include <gtest/gtest.h>

#include <algorithm>

#include "pfsum/errors.hpp"
#include "pfsum/identities.hpp"
#include "pfsum/sequences.hpp"
#include "pfsum/special_functions.hpp"

namespace pfsum {
namespace {

BigReal pi() { return BigReal::pi(); }
BigReal tol() { return BigReal(Precision{}.tol); }
BigComplex q(long n, long d) { return BigComplex(BigReal::ratio(n, d)); }

bool disjoint(const IdentityReport& r) {
  std::vector<std::string> both;
  std::set_intersection(r.lhs_routes.begin(), r.lhs_routes.end(), r.rhs_routes.begin(), r.rhs_routes.end(),
                        std::back_inserter(both));
  return both.empty() && !r.lhs_routes.empty() && !r.rhs_routes.empty();
}

void expect_pass(const IdentityReport& r) {
  std::string params;
  for (const auto& [k, v] : r.params) {
    params += k + "=" + v + " ";
  }
  EXPECT_EQ(r.status, ReportStatus::Pass) << r.identity_id << " " << params << to_scientific(r.abs_residual, 4);
  EXPECT_TRUE(disjoint(r)) << r.identity_id;
}

TEST(Zeta2Pfs, ClassicalValues) {
  const auto one = zeta2_pfs(1);
  expect_pass(one);
  EXPECT_LT(abs(one.rhs - pi() * pi() / 6), BigReal(1e-30));
  const auto half = zeta2_pfs(q(1, 2));
  expect_pass(half);
  EXPECT_LT(abs(half.rhs - pi() * pi() / 2), tol());
  expect_pass(zeta2_pfs(q(3, 4)));
  expect_pass(zeta2_pfs(BigComplex(BigReal("0.3"), BigReal("0.2"))));
  expect_pass(zeta2_pfs(BigComplex(BigReal("-0.3"))));
}

TEST(Zeta2Pfs, Domain) {
  EXPECT_THROW(zeta2_pfs(2), DomainError);
  EXPECT_THROW(zeta2_pfs(q(-1, 2)), DomainError);
  EXPECT_THROW(zeta2_pfs(0), DomainError);
}

TEST(ZetaMPfs, Values) {
  const auto m2 = zeta_m_pfs(2, 1);
  EXPECT_EQ(m2.rhs, zeta2_pfs(1).rhs);  // same residue terms
  const auto m3 = zeta_m_pfs(3, 1);
  expect_pass(m3);
  EXPECT_LT(abs(m3.lhs - BigComplex(BigReal("1.2020569031595942853997381615114499907649862923405"))), BigReal(1e-45));
  expect_pass(zeta_m_pfs(4, q(1, 2)));
  expect_pass(zeta_m_pfs(3, BigComplex(BigReal("0.7"), BigReal("0.25"))));
  EXPECT_THROW(zeta_m_pfs(3, BigComplex(BigReal("2.5"))), DomainError);
  EXPECT_THROW(zeta_m_pfs(1, 1), DomainError);
}

TEST(Zeta3Apery, GeneralFormPassesPrintedFormLogged) {
  const auto r = zeta3_apery();
  expect_pass(r);
  const BigComplex apery(BigReal("1.2020569031595942853997381615114499907649862923405"));
  EXPECT_LT(abs(r.rhs - apery), tol());
  Precision tight;
  tight.tol = 1e-35;
  EXPECT_LT(abs(zeta3_apery(tight).rhs - apery), BigReal(1e-35));
  ASSERT_TRUE(r.params.count("printed_form_residual"));
  // The real-argument form does not converge to zeta(3).
  EXPECT_GT(BigReal(r.params.at("printed_form_residual")), BigReal(1));
}

TEST(Zeta3Apery, FirstTermIsRealPositive) {
  const BigComplex w(BigReal::ratio(-1, 2), sqrt(BigReal(3)) / 2);
  const BigComplex t = gamma(BigComplex(1) - w) * gamma(BigComplex(1) - conj(w)) * 3;
  EXPECT_LT(abs(t.imag()), BigReal::pow10(-45));
  EXPECT_GT(t.real(), BigReal(0));
  EXPECT_LT(abs(t - BigComplex(norm(gamma(BigComplex(1) - w)) * 3)), BigReal::pow10(-45));
}

TEST(GammaPfdOrder1, Values) {
  const auto zero = gamma_pfd_order1(q(3, 4), 0);
  expect_pass(zero);
  EXPECT_LT(abs(zero.rhs - gamma(q(3, 4)) * gamma(q(3, 4))), tol());
  const auto half = gamma_pfd_order1(1, q(1, 2));
  expect_pass(half);
  EXPECT_LT(abs(half.lhs - pi() / 2), BigReal::pow10(-45));
  expect_pass(gamma_pfd_order1(q(3, 4), BigComplex(0, BigReal("0.2"))));
  EXPECT_THROW(gamma_pfd_order1(q(3, 4), 1), DomainError);
}

TEST(DoubleFactorialSums, Sums) {
  const auto reports = example1_sums();
  ASSERT_EQ(reports.size(), 3u);
  for (const auto& r : reports) {
    expect_pass(r);
  }
  const BigReal ln2 = BigReal::ln2();
  EXPECT_LT(abs(reports[0].lhs - 1), tol());
  EXPECT_LT(abs(reports[1].lhs - ln2), tol());
  EXPECT_LT(abs(reports[2].lhs - BigComplex(BigReal("1.0626935403832139305697588464863450804749"))), tol());
  // Printed constants: sums 1 and 2 are off by a factor of two, sum 3 holds.
  EXPECT_LT(abs(BigReal(reports[0].params.at("printed_form_residual")) - BigReal("0.5")), BigReal(1e-5));
  EXPECT_LT(abs(BigReal(reports[1].params.at("printed_form_residual")) - ln2 / 2), BigReal(1e-5));
  EXPECT_LT(BigReal(reports[2].params.at("printed_form_residual")), tol());
}

TEST(DoubleFactorialSums, GammaFormIsHalfTheDoubleFactorialForm) {
  // Gamma(k+1/2)/(k-1)! = (sqrt(pi)/2) (2k-1)!!/(2k-2)!!.
  for (int k = 1; k <= 8; ++k) {
    const BigComplex g = gamma(BigComplex(BigReal(k) + BigReal::ratio(1, 2))) / factorial(k - 1);
    EXPECT_LT(abs(g - BigComplex(sqrt(pi()) / 2 * double_factorial_ratio(k))), BigReal::pow10(-45));
  }
}

TEST(GammaProductSeries, GammaProductAtZero) {
  for (const auto& [a, b] : std::vector<std::pair<BigComplex, BigComplex>>{
           {q(1, 4), q(3, 4)}, {BigComplex(BigReal("0.3")), BigComplex(BigReal("0.6"))}}) {
    const auto r = example2_coeff(a, b, 0);
    expect_pass(r);
    EXPECT_LT(abs(r.lhs - gamma(a) * gamma(b)), BigReal::pow10(-40));
  }
}

TEST(GammaProductSeries, LemniscaticCase) {
  const auto r = example2_coeff(q(1, 4), q(3, 4), 1);
  expect_pass(r);
  EXPECT_LT(abs(r.rhs - sqrt(BigReal(2)) * pi() * pi()), tol());
}

TEST(GammaProductSeries, SymmetricCaseVanishes) {
  const auto r = example2_coeff(q(1, 2), q(1, 2), 1);
  expect_pass(r);
  EXPECT_LT(abs(r.lhs), tol());
}

TEST(GammaProductSeries, SignReadingAdjudication) {
  for (int J = 0; J <= 3; ++J) {
    const auto r = example2_coeff(BigComplex(BigReal("0.3")), BigComplex(BigReal("0.6")), J);
    expect_pass(r);
    const BigReal alt(r.params.at("alt_sign_residual"));
    EXPECT_GT(alt, r.abs_residual * BigReal(1e10)) << J;
    EXPECT_GT(alt, BigReal(1e-10)) << J;
  }
}

TEST(Lemniscatic, Value) {
  const auto r = lemniscatic_sum();
  expect_pass(r);
  EXPECT_LT(abs(r.rhs - BigComplex(BigReal("0.872358024954859941769695117021"))), BigReal(1e-19));
}

TEST(GammaPsiCoeff, Cases) {
  const auto zero = gamma_psi_coeff(q(3, 4), 0);
  expect_pass(zero);
  EXPECT_LT(abs(zero.lhs - digamma(q(3, 4)) * gamma(q(3, 4)) * gamma(q(3, 4)) * 2), BigReal::pow10(-40));
  for (const BigComplex& a : {BigComplex(1), q(1, 2), q(3, 4), BigComplex(BigReal("0.6"), BigReal("0.2"))}) {
    for (int n = 1; n <= 3; ++n) {
      expect_pass(gamma_psi_coeff(a, n));
    }
  }
}

TEST(Recursions, ZetaAH) {
  const auto one = zetaAH_recursion(1);
  expect_pass(one);
  const auto z3 = riemann_zeta(BigReal(3)).value;
  EXPECT_LT(abs(one.lhs - z3 * BigReal::ratio(5, 8)), BigReal(1e-18));
  EXPECT_LT(abs(one.lhs - BigComplex(BigReal("0.75128556447474642837483635094465624422811643"))), tol());
  for (int n = 2; n <= 4; ++n) {
    expect_pass(zetaAH_recursion(n));
  }
}

TEST(Recursions, BetaH) {
  for (int n = 1; n <= 3; ++n) {
    expect_pass(betaH_recursion(n));
  }
}

TEST(Recursions, ZetaEven) {
  for (int m = 1; m <= 6; ++m) {
    const auto r = zeta_even_recursion(m);
    expect_pass(r);
    EXPECT_LT(r.abs_residual, BigReal(1e-25));
  }
  const auto one = zeta_even_recursion(1);
  EXPECT_LT(abs(one.lhs / 5 - pow(pi(), 4) / 90), BigReal(1e-40));
}

TEST(Recursions, HurwitzEven) {
  const auto one = hurwitz_even_recursion(1, 1);
  expect_pass(one);
  EXPECT_LT(abs(one.lhs + pow(pi(), 4) / 90), BigReal(1e-25));
  EXPECT_LT(abs(one.rhs + pow(pi(), 4) / 90), BigReal(1e-25));
  for (const BigComplex& a : {q(3, 4), q(1, 2), BigComplex(BigReal("1.3"), BigReal("-0.2"))}) {
    for (int m = 1; m <= 2; ++m) {
      expect_pass(hurwitz_even_recursion(m, a));
    }
  }
}

TEST(Recursions, PowerSumsAndDifferentialRelation) {
  expect_pass(power_sum_recursion(SequenceSpec::hurwitz(q(1, 2), 2), 1));
  expect_pass(power_sum_recursion(SequenceSpec::hurwitz(1, 2), 2));
  expect_pass(power_sum_recursion(SequenceSpec::finite({2, BigComplex(3, 1), 5}, 2), 3));
  for (int J : {0, 2, 4}) {
    expect_pass(differential_relation_check(SequenceSpec::hurwitz(q(3, 4), 2), J));
  }
}

TEST(ConjectureProbe, OrderTwoIsTheProvenCase) {
  const BigComplex a = q(3, 4);
  const auto samples = probe_samples(a, 4, 1);
  const auto r = conjecture_probe(a, 2, samples);
  ASSERT_EQ(r.samples.size(), 4u);
  for (const auto& s : r.samples) {
    EXPECT_TRUE(s.converged);
    EXPECT_LT(s.residual, BigReal(1e-18));
  }
  const auto sine = conjecture_probe(1, 2, probe_samples(1, 3, 2));
  EXPECT_LT(abs(sine.constant + pi() * pi()), tol());
}

TEST(ConjectureProbe, OrderThreeCompletes) {
  const auto r = conjecture_probe(1, 3, {BigComplex(BigReal("0.3"))});
  ASSERT_EQ(r.samples.size(), 1u);
  EXPECT_LT(abs(r.samples[0].lhs + pow(pi(), 3) * cos(pi() * BigReal("0.3")) / sin(pi() * BigReal("0.3"))),
            BigReal(1e-40));
}

TEST(ConjectureProbe, OrderFourAtHalf) {
  const BigComplex a = q(1, 2);
  const auto r = conjecture_probe(a, 4, probe_samples(a, 5, 3));
  ASSERT_EQ(r.samples.size(), 5u);
  for (const auto& s : r.samples) {
    EXPECT_TRUE(s.converged);
  }
}

TEST(ConjectureProbe, EmptyAndErrors) {
  EXPECT_TRUE(conjecture_probe(1, 3, {}).samples.empty());
  EXPECT_THROW(conjecture_probe(1, 1, {}), DomainError);
  EXPECT_THROW(conjecture_probe(1, 3, {BigComplex(0)}), DomainError);
  EXPECT_THROW(conjecture_probe(1, 3, {BigComplex(2)}), DomainError);
}

TEST(Catalog, IdsAndUnknown) {
  const auto& ids = catalog_ids();
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_NE(std::find(ids.begin(), ids.end(), "zeta2-pfs"), ids.end());
  EXPECT_THROW(run_identity("nonexistent-id", 0), std::invalid_argument);
  EXPECT_EQ(run_identity("zeta2-pfs", 0).size(), 4u);
}

TEST(Catalog, SeededDrawsAreDeterministicAndPass) {
  for (const auto& id : catalog_ids()) {
    const auto first = run_identity(id, 7);
    const auto second = run_identity(id, 7);
    ASSERT_EQ(first.size(), second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      EXPECT_EQ(first[i].params, second[i].params);
      EXPECT_EQ(first[i].lhs, second[i].lhs);
      EXPECT_EQ(first[i].rhs, second[i].rhs);
      expect_pass(first[i]);
    }
  }
}

TEST(Catalog, SuiteIsSortedAndMatchesSerialRuns) {
  const std::vector<std::string> ids{"zetaAH-recursion", "zeta2-pfs", "lemniscatic-sum"};
  const auto suite = run_suite(ids, 3);
  EXPECT_TRUE(std::is_sorted(suite.begin(), suite.end(), [](const auto& x, const auto& y) {
    return x.identity_id < y.identity_id;
  }));
  const auto serial = run_identity("zeta2-pfs", 3);
  std::vector<IdentityReport> from_suite;
  std::copy_if(suite.begin(), suite.end(), std::back_inserter(from_suite),
               [](const auto& r) { return r.identity_id == "zeta2-pfs"; });
  ASSERT_EQ(from_suite.size(), serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(from_suite[i].rhs, serial[i].rhs);
  }
}

TEST(Refinement, ResidualsShrinkWithPrecision) {
  Precision hi;
  hi.digits = 80;
  hi.tol = 1e-50;
  hi.n_max = 200000;
  const auto lo1 = zeta2_pfs(q(3, 4));
  const auto hi1 = zeta2_pfs(q(3, 4), hi);
  EXPECT_LT(hi1.abs_residual * BigReal(1e10), max(lo1.abs_residual, BigReal(1e-45)));
  const auto lo2 = zetaAH_recursion(2);
  const auto hi2 = zetaAH_recursion(2, hi);
  EXPECT_LT(hi2.abs_residual * BigReal(1e10), max(lo2.abs_residual, BigReal(1e-45)));
}

TEST(ParamString, Formatting) {
  EXPECT_EQ(param_string(q(3, 4)), "0.75");
  EXPECT_EQ(param_string(BigComplex(BigReal("0.3"), BigReal("0.2"))), "0.3+0.2i");
  EXPECT_EQ(param_string(BigComplex(BigReal(1), BigReal("-0.25"))), "1-0.25i");
  EXPECT_EQ(param_string(BigComplex(2)), "2");
}

}  // namespace
}  // namespace pfsum
