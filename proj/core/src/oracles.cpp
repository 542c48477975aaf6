#include "pfsum/oracles.hpp"

#include <string>

#include "pfsum/errors.hpp"
#include "pfsum/sequences.hpp"
#include "pfsum/trace.hpp"

namespace pfsum::oracle {

namespace {

void check_terms(const OracleConfig& cfg, const Precision& prec) {
  if (cfg.terms < 1) {
    throw DomainError("oracle: terms must be positive");
  }
  if (cfg.terms > prec.n_max * 10) {
    throw DomainError("oracle: terms exceeds 10 * n_max");
  }
}

SeriesStatus status_for(const BigReal& tail, const Precision& prec) {
  return tail <= BigReal(prec.tol) ? SeriesStatus::Converged : SeriesStatus::HitTermCap;
}

}  // namespace

SeriesResult direct_zeta(int m, const BigComplex& a, const OracleConfig& cfg, const Precision& prec) {
  prec.validate();
  check_terms(cfg, prec);
  if (m < 2) {
    throw DomainError("direct_zeta: m must be >= 2");
  }
  PrecisionScope scope(prec);
  trace::mark("oracle.direct_zeta");

  BigComplex sum;
  for (std::int64_t k = 0; k < cfg.terms; ++k) {
    const BigComplex x = a + k;
    if (x.is_zero()) {
      throw PoleError("direct_zeta: a + k = 0");
    }
    sum += inverse(pow(x, m));
  }

  const BigComplex x = a + cfg.terms;
  const BigComplex head = inverse(pow(x, m - 1)) / (m - 1);
  SeriesResult out;
  out.terms_used = cfg.terms;
  switch (cfg.tail_mode) {
    case TailMode::None:
      out.value = sum;
      out.tail_estimate = abs(head);
      break;
    case TailMode::PairBound:
      // Terms of one sign: the integral is a bound, not a correction.
      out.value = sum;
      out.tail_estimate = abs(head);
      break;
    case TailMode::IntegralBound: {
      // f(x) = x^-m; sum_{k>=N} f = int_N f + f(N)/2 - sum B_2j/(2j)! f^(2j-1)(N).
      BigComplex tail = head + inverse(pow(x, m)) / 2;
      BigComplex rising(m);  // m (m+1) ... (m+2j-2)
      BigComplex xp = inverse(pow(x, m + 1));
      const BigComplex x2inv = inverse(x * x);
      const BigReal eps = BigReal::pow10(-working_digits());
      BigReal last = abs(head);
      for (int j = 1; j < 200; ++j) {
        const BigComplex t = xp * rising * (bernoulli_2k(j) / factorial(2 * j));
        if (abs(t) > last) {
          break;
        }
        tail += t;
        last = abs(t);
        if (last < eps * abs(sum)) {
          break;
        }
        rising *= BigComplex(BigReal(m + 2 * j - 1) * BigReal(m + 2 * j));
        xp *= x2inv;
      }
      out.value = sum + tail;
      out.tail_estimate = last;
      break;
    }
  }
  out.status = status_for(out.tail_estimate, prec);
  return out;
}

SeriesResult direct_alt_series(const SignFn& sign, const PartFn& numerator, const PartFn& denominator,
                               const OracleConfig& cfg, const Precision& prec, int stride) {
  prec.validate();
  check_terms(cfg, prec);
  if (stride < 1) {
    throw DomainError("direct_alt_series: stride must be positive");
  }
  PrecisionScope scope(prec);
  trace::mark("oracle.direct_alt_series");

  constexpr int kRounds = 40;
  std::vector<BigComplex> samples;  // partial sums at multiples of stride
  BigComplex sum;
  BigComplex last_term;
  for (std::int64_t k = 0; k < cfg.terms; ++k) {
    const int s = sign(k);
    if (s != 0) {
      const BigComplex num = numerator(k);
      last_term = num.is_zero() ? BigComplex() : num / denominator(k) * s;
      sum += last_term;
    }
    if ((k + 1) % stride == 0) {
      samples.push_back(sum);
    }
  }

  SeriesResult out;
  out.terms_used = cfg.terms;
  out.value = sum;
  out.tail_estimate = abs(last_term);
  if (cfg.tail_mode == TailMode::PairBound && samples.size() > kRounds + 1) {
    std::vector<BigComplex> row(samples.end() - (kRounds + 1), samples.end());
    BigComplex previous = row.back();
    for (int round = 0; round < kRounds; ++round) {
      for (std::size_t i = 0; i + 1 < row.size(); ++i) {
        row[i] = (row[i] + row[i + 1]) / 2;
      }
      row.pop_back();
      out.tail_estimate = abs(row.back() - previous);
      previous = row.back();
    }
    out.value = row.back();
  } else if (cfg.tail_mode == TailMode::IntegralBound) {
    // Alternating tails are bounded by the first omitted term.
    out.tail_estimate = abs(last_term);
  }
  out.status = status_for(out.tail_estimate, prec);
  return out;
}

BigComplex finite_product_F(const SequenceSpec& spec, std::int64_t N, const BigComplex& z) {
  spec.validate();
  trace::mark("oracle.finite_product_F");
  const std::int64_t count = spec.is_finite() ? std::min(N, spec.finite_size()) : N;
  const int rotations = spec.kind == SequenceKind::InterleavedSigned ? 1 : spec.power_m;
  BigComplex prod(1);
  for (std::int64_t n = 0; n < count; ++n) {
    for (int r = 0; r < rotations; ++r) {
      prod *= BigComplex(1) - z / node(spec, {n, r});
    }
  }
  return prod;
}

BigComplex numeric_derivative(const std::function<BigComplex(const BigComplex&)>& fn, const BigComplex& z, int order,
                              const std::vector<BigComplex>& poles) {
  if (order < 1 || order > 2) {
    throw DomainError("numeric_derivative: order must be 1 or 2");
  }
  trace::mark("oracle.numeric_derivative");
  const BigReal h = BigReal::pow10(-(working_digits() / 3));
  for (const auto& p : poles) {
    if (abs(z - p) < h * 10) {
      throw PoleError("numeric_derivative: z is within 10h of a pole");
    }
  }
  const BigComplex hc(h);
  const BigComplex fp = fn(z + hc);
  const BigComplex fm = fn(z - hc);
  if (order == 1) {
    return (fp - fm) / (h * 2);
  }
  return (fp - fn(z) * 2 + fm) / (h * h);
}

}  // namespace pfsum::oracle
