#include <gtest/gtest.h>

#include "pfsum/errors.hpp"
#include "pfsum/oracles.hpp"
#include "pfsum/trace.hpp"

namespace pfsum::oracle {
namespace {

BigReal pi() { return BigReal::pi(); }

TEST(DirectZeta, IntegralTailCorrection) {
  const BigReal zeta2 = pi() * pi() / 6;
  const auto raw = direct_zeta(2, 1, {5000, TailMode::None});
  // The raw tail is about 1/terms.
  EXPECT_LT(abs(raw.value - zeta2), BigReal("2.1e-4"));
  EXPECT_GT(abs(raw.value - zeta2), BigReal("1.9e-4"));
  EXPECT_EQ(raw.status, SeriesStatus::HitTermCap);
  const auto corrected = direct_zeta(2, 1, {5000, TailMode::IntegralBound});
  EXPECT_EQ(corrected.status, SeriesStatus::Converged);
  EXPECT_LT(abs(corrected.value - zeta2), BigReal(1e-20));
}

TEST(DirectZeta, ComplexShiftAndHigherOrder) {
  const BigComplex a(BigReal("0.3"), BigReal("0.2"));
  const auto lo = direct_zeta(3, a, {2000, TailMode::IntegralBound});
  const auto hi = direct_zeta(3, a, {4000, TailMode::IntegralBound});
  EXPECT_LT(abs(lo.value - hi.value), BigReal(1e-30));
}

TEST(DirectZeta, MonotoneInTerms) {
  const BigReal zeta2 = pi() * pi() / 6;
  BigReal previous(1);
  for (std::int64_t n : {500, 1000, 2000, 4000, 8000}) {
    const BigReal err = abs(direct_zeta(2, 1, {n, TailMode::None}).value - zeta2);
    EXPECT_LT(err, previous);
    previous = err;
  }
}

TEST(DirectZeta, Errors) {
  EXPECT_THROW(direct_zeta(1, 1, {}), DomainError);
  EXPECT_THROW(direct_zeta(2, -3, {}), PoleError);
  EXPECT_THROW(direct_zeta(2, 1, {300000, TailMode::None}), DomainError);
}

TEST(DirectAltSeries, AlternatingZetaTwo) {
  const auto r = direct_alt_series([](std::int64_t k) { return k % 2 == 0 ? 1 : -1; },
                                   [](std::int64_t) { return BigComplex(1); },
                                   [](std::int64_t k) { return BigComplex(BigReal(k + 1) * BigReal(k + 1)); },
                                   {10000, TailMode::PairBound});
  EXPECT_EQ(r.status, SeriesStatus::Converged);
  EXPECT_LT(abs(r.value - pi() * pi() / 12), BigReal(1e-20));
}

TEST(DirectAltSeries, ZeroNumerator) {
  const auto r = direct_alt_series([](std::int64_t) { return 1; }, [](std::int64_t) { return BigComplex(); },
                                   [](std::int64_t) { return BigComplex(); }, {100, TailMode::None});
  EXPECT_TRUE(r.value.is_zero());
}

TEST(DirectAltSeries, PeriodFourPattern) {
  const auto sign = [](std::int64_t k) { return (k * (k + 1) / 2) % 2 == 0 ? 1 : -1; };
  const auto one = [](std::int64_t) { return BigComplex(1); };
  const auto odd_sq = [](std::int64_t k) { return BigComplex(BigReal(2 * k + 1) * BigReal(2 * k + 1)); };
  const auto head = direct_alt_series(sign, one, odd_sq, {4, TailMode::None});
  const BigReal expect = BigReal(1) - BigReal::ratio(1, 9) - BigReal::ratio(1, 25) + BigReal::ratio(1, 49);
  EXPECT_LT(abs(head.value - expect), BigReal::pow10(-45));
  const auto full = direct_alt_series(sign, one, odd_sq, {20000, TailMode::PairBound}, {}, 2);
  EXPECT_LT(abs(full.value - sqrt(BigReal(2)) * pi() * pi() / 16), BigReal(1e-20));
}

TEST(FiniteProduct, SineProduct) {
  const auto spec = SequenceSpec::hurwitz(1, 2);
  const BigComplex f = finite_product_F(spec, 10000, BigComplex(BigReal::ratio(1, 2)));
  EXPECT_LT(abs(f - BigComplex(BigReal(2) / pi())), BigReal(1e-3));
}

TEST(FiniteProduct, FiniteSpecIsExact) {
  const auto spec = SequenceSpec::finite({1, 2}, 1);
  EXPECT_EQ(finite_product_F(spec, 50, BigComplex(BigReal::ratio(1, 2))),
            BigComplex(BigReal::ratio(3, 8)));
}

TEST(NumericDerivative, Polynomials) {
  const auto sq = [](const BigComplex& z) { return z * z; };
  EXPECT_LT(abs(numeric_derivative(sq, 3, 1) - 6), BigReal(1e-10));
  const auto s = [](const BigComplex& z) { return sin(z); };
  EXPECT_LT(abs(numeric_derivative(s, 0, 2)), BigReal(1e-8));
  EXPECT_THROW(numeric_derivative(sq, 1, 3), DomainError);
  EXPECT_THROW(numeric_derivative(sq, 1, 1, {BigComplex(1)}), PoleError);
}

TEST(NumericDerivative, ChecksClosedFormResidueWeight) {
  const auto fin = SequenceSpec::finite({2, 3, 5}, 2);
  const auto f = [&](const BigComplex& z) { return finite_product_F(fin, 3, z); };
  const BigComplex x = node(fin, {1, 0});
  const BigComplex fprime = numeric_derivative(f, x, 1);
  EXPECT_LT(abs(inverse(fprime) - residue_weight(fin, {1, 0})) / abs(inverse(fprime)), BigReal(1e-5));
}

TEST(Oracles, RouteTags) {
  trace::Recorder rec;
  direct_zeta(2, 1, {100, TailMode::IntegralBound});
  for (const auto& r : rec.routes()) {
    EXPECT_EQ(r.rfind("oracle.", 0), 0u) << r;
  }
}

}  // namespace
}  // namespace pfsum::oracle
