#include <gtest/gtest.h>

#include <random>

#include "pfsum/bigcomplex.hpp"
#include "pfsum/errors.hpp"
#include "pfsum/precision.hpp"
#include "pfsum/sequences.hpp"
#include "pfsum/series.hpp"

namespace pfsum {
namespace {

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

TEST(Precision, ValidateRejectsOutOfRange) {
  EXPECT_NO_THROW(Precision{}.validate());
  EXPECT_THROW((Precision{19, 20000, 1e-5}.validate()), std::invalid_argument);
  EXPECT_THROW((Precision{50, 99, 1e-20}.validate()), std::invalid_argument);
  EXPECT_THROW((Precision{50, 20000, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((Precision{50, 20000, 1e-45}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((Precision{50, 20000, 1e-40}.validate()));
}

TEST(Precision, ScopeRestoresBits) {
  const long before = working_bits();
  {
    PrecisionScope scope(Precision{80, 20000, 1e-20});
    EXPECT_GT(working_bits(), before);
  }
  EXPECT_EQ(working_bits(), before);
}

TEST(BigReal, DivisionByExactZeroThrows) {
  EXPECT_THROW(BigReal(1) / BigReal(0), DomainError);
  EXPECT_THROW(BigComplex(1) / BigComplex(0), DomainError);
}

TEST(BigReal, ParsesDecimalLiterals) {
  EXPECT_EQ(BigReal("0.75"), BigReal::ratio(3, 4));
  EXPECT_EQ(BigReal("-1.5e-3") * 1000, BigReal::ratio(-3, 2));
  EXPECT_THROW(BigReal("abc"), std::invalid_argument);
}

TEST(BigComplex, ParsesComplexLiterals) {
  const BigComplex z = BigComplex::parse("1+0.25i");
  EXPECT_EQ(z.real(), BigReal(1));
  EXPECT_EQ(z.imag(), BigReal::ratio(1, 4));
  const BigComplex w = BigComplex::parse("0.3-0.2i");
  EXPECT_EQ(w.imag(), -BigReal("0.2"));
  EXPECT_EQ(BigComplex::parse("2i"), BigComplex(0, 2));
  EXPECT_EQ(BigComplex::parse("1e-2"), BigComplex(BigReal("0.01")));
  EXPECT_THROW(BigComplex::parse("1+"), std::invalid_argument);
}

TEST(BigReal, ExpLogRoundTrip) {
  std::mt19937_64 rng(1);
  const BigReal bound = BigReal::pow10(-45);
  for (int i = 0; i < 1000; ++i) {
    const BigReal x = exp(BigReal(-3 * std::log(10.0) + 6 * std::log(10.0) * uniform(rng)));
    EXPECT_LT(abs(exp(log(x)) - x) / x, bound);
  }
}

TEST(BigComplex, TranscendentalsAgree) {
  const BigComplex z(BigReal("0.3"), BigReal("-1.7"));
  const BigReal bound = BigReal::pow10(-45);
  EXPECT_LT(abs(exp(log(z)) - z), bound);
  const BigComplex s = sin(z);
  const BigComplex c = cos(z);
  EXPECT_LT(abs(s * s + c * c - 1), bound);
  EXPECT_LT(abs(pow(z, 5) - z * z * z * z * z), bound);
  EXPECT_LT(abs(pow(z, -2) * z * z - 1), bound);
  EXPECT_LT(abs(sqrt(z) * sqrt(z) - z), bound);
}

TEST(EulerNumbers, KnownValues) {
  const auto e = euler_numbers(8);
  ASSERT_EQ(e.size(), 9u);
  EXPECT_EQ(e[0], 1);
  EXPECT_EQ(e[2], -1);
  EXPECT_EQ(e[4], 5);
  EXPECT_EQ(e[6], -61);
  EXPECT_EQ(e[8], 1385);
  EXPECT_EQ(e[3], 0);
  EXPECT_EQ(euler_numbers(0), std::vector<BigInt>{1});
  EXPECT_THROW(euler_numbers(3), DomainError);
}

TEST(EulerNumbers, SatisfyDefiningRecurrence) {
  const auto e = euler_numbers(60);
  for (int n = 1; n <= 30; ++n) {
    BigInt acc = 0;
    BigInt c = 1;
    for (int j = 0; j <= 2 * n; ++j) {
      if (j % 2 == 0) {
        acc += c * e[static_cast<std::size_t>(j)];
      }
      c = c * (2 * n - j) / (j + 1);
    }
    EXPECT_EQ(acc, 0) << "n=" << n;
  }
}

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(bernoulli_exact(1), BigRational(-1, 2));
  EXPECT_EQ(bernoulli_exact(2), BigRational(1, 6));
  EXPECT_EQ(bernoulli_exact(12), BigRational(-691, 2730));
  EXPECT_EQ(bernoulli_exact(13), 0);
}

TEST(Harmonic, Values) {
  EXPECT_TRUE(harmonic(0).is_zero());
  EXPECT_LT(abs(harmonic(3) - BigReal::ratio(11, 6)), BigReal::pow10(-48));
  EXPECT_LT(abs(harmonic(10) - BigReal::ratio(7381, 2520)), BigReal::pow10(-48));
}

TEST(RootOfUnity, Values) {
  EXPECT_EQ(root_of_unity(4, 1), BigComplex::i());
  const BigComplex w = root_of_unity(3, 1);
  EXPECT_EQ(w.real(), BigReal::ratio(-1, 2));
  EXPECT_LT(abs(w.imag() - sqrt(BigReal(3)) / 2), BigReal::pow10(-48));
  for (int m = 1; m <= 12; ++m) {
    EXPECT_EQ(root_of_unity(m, m), BigComplex(1));
    EXPECT_EQ(root_of_unity(m, 0), BigComplex(1));
    for (int r = 0; r < m; ++r) {
      EXPECT_LT(abs(pow(root_of_unity(m, r), m) - 1), BigReal::pow10(-45)) << m << "," << r;
    }
  }
  EXPECT_LT(abs(root_of_unity(7, -1) - conj(root_of_unity(7, 1))), BigReal::pow10(-48));
}

TEST(DoubleFactorialRatio, Values) {
  EXPECT_EQ(double_factorial_ratio(1), BigReal(1));
  EXPECT_EQ(double_factorial_ratio(2), BigReal::ratio(3, 2));
  EXPECT_EQ(double_factorial_ratio(5), BigReal::ratio(945, 384));
}

TEST(SumSeries, GeometricDirect) {
  const Precision prec;
  const auto r = sum_series([](std::int64_t k) { return BigComplex(pow(BigReal::ratio(1, 2), k)); },
                            SummationStrategy::Direct, prec);
  EXPECT_EQ(r.status, SeriesStatus::Converged);
  EXPECT_LT(abs(r.value - 2), BigReal(prec.tol));
  EXPECT_LE(r.tail_estimate, BigReal(prec.tol / 10));
  EXPECT_LE(r.terms_used, prec.n_max);
}

TEST(SumSeries, ZeroSeries) {
  for (auto strategy : {SummationStrategy::Direct, SummationStrategy::PairwiseAlternating,
                        SummationStrategy::EulerTransform, SummationStrategy::Richardson}) {
    const auto r = sum_series([](std::int64_t) { return BigComplex(); }, strategy, Precision{});
    EXPECT_EQ(r.status, SeriesStatus::Converged) << to_string(strategy);
    EXPECT_TRUE(r.value.is_zero());
    EXPECT_LE(r.terms_used, 300);
  }
}

TEST(SumSeries, RandomGeometricRatios) {
  std::mt19937_64 rng(2);
  const Precision prec;
  for (int i = 0; i < 100; ++i) {
    const BigComplex q(BigReal(1.8 * uniform(rng) - 0.9), BigReal(0.6 * uniform(rng) - 0.3));
    BigComplex power(1);
    const auto r = sum_series(
        [&](std::int64_t) {
          BigComplex t = power;
          power *= q;
          return t;
        },
        SummationStrategy::Direct, prec);
    ASSERT_EQ(r.status, SeriesStatus::Converged);
    EXPECT_LT(abs(r.value - inverse(1 - q)), BigReal(prec.tol));
  }
}

TEST(SumSeries, Log2ViaEulerTransform) {
  const Precision prec;
  auto term = [](std::int64_t k) { return BigComplex(BigReal(k % 2 == 0 ? 1 : -1) / (k + 1)); };
  const auto r = sum_series(term, SummationStrategy::EulerTransform, prec);
  EXPECT_EQ(r.status, SeriesStatus::Converged);
  EXPECT_LT(abs(r.value - log(BigReal(2))), BigReal(prec.tol));
  EXPECT_LT(r.terms_used, 1000);
}

TEST(SumSeries, Log2PairwiseIsTooSlowForTightTolerance) {
  // Pairs decay like 1/(4j^2); the naive stopping rule needs ~1e10 terms.
  const Precision prec;
  auto term = [](std::int64_t k) { return BigComplex(BigReal(k % 2 == 0 ? 1 : -1) / (k + 1)); };
  const auto r = sum_series(term, SummationStrategy::PairwiseAlternating, prec);
  EXPECT_EQ(r.status, SeriesStatus::HitTermCap);
  EXPECT_LT(abs(r.value - log(BigReal(2))), BigReal(1e-4));
  const auto loose = sum_series(term, SummationStrategy::PairwiseAlternating, Precision{20, 20000, 1e-7});
  EXPECT_EQ(loose.status, SeriesStatus::Converged);
  EXPECT_LT(abs(loose.value - log(BigReal(2))), BigReal(1e-3));
}

TEST(SumSeries, EulerTransformRegularizesGrandiSeries) {
  const auto r = sum_series([](std::int64_t k) { return BigComplex(k % 2 == 0 ? 1 : -1); },
                            SummationStrategy::EulerTransform, Precision{});
  EXPECT_EQ(r.status, SeriesStatus::Converged);
  EXPECT_LT(abs(r.value - BigReal::ratio(1, 2)), BigReal(1e-40));
}

TEST(SumSeries, RichardsonOnInverseSquares) {
  const Precision prec;
  const auto r = sum_series([](std::int64_t k) { return BigComplex(BigReal(1) / ((k + 1) * (k + 1))); },
                            SummationStrategy::Richardson, prec);
  EXPECT_EQ(r.status, SeriesStatus::Converged);
  EXPECT_LT(abs(r.value - BigReal::pi() * BigReal::pi() / 6), BigReal(prec.tol));
}

TEST(SumSeries, DirectFlagsGrowth) {
  const auto r = sum_series([](std::int64_t k) { return BigComplex(k); }, SummationStrategy::Direct, Precision{});
  EXPECT_EQ(r.status, SeriesStatus::Diverging);
}

TEST(SumSeries, DirectHitsCap) {
  const auto r = sum_series([](std::int64_t) { return BigComplex(1); }, SummationStrategy::Direct,
                            Precision{20, 100, 1e-5});
  EXPECT_EQ(r.status, SeriesStatus::HitTermCap);
  EXPECT_EQ(r.terms_used, 100);
}

}  // namespace
}  // namespace pfsum
