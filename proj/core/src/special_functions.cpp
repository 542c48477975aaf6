#include "pfsum/special_functions.hpp"

#include <cmath>
#include <string>

#include "pfsum/errors.hpp"
#include "pfsum/sequences.hpp"
#include "pfsum/trace.hpp"

namespace pfsum {

namespace {

bool is_nonpositive_integer(const BigComplex& z) {
  return z.is_real() && z.real().is_integer() && z.real().sign() <= 0;
}

void check_pole(const BigComplex& z, const char* what) {
  if (is_nonpositive_integer(z)) {
    throw PoleError(std::string(what) + ": pole at non-positive integer " + to_fixed(z.real(), 0));
  }
}

/// Number of unit shifts that move Re(z) to at least `target`.
long shift_count(const BigComplex& z, double target) {
  const double re = z.real().to_double();
  return re >= target ? 0 : static_cast<long>(std::ceil(target - re));
}

BigReal epsilon() { return pow(BigReal(2), -working_bits()); }

double asymptotic_threshold() { return 10.0 + working_digits() / 3.0; }

}  // namespace

BigComplex ln_gamma(const BigComplex& z) {
  check_pole(z, "ln_gamma");
  const long n = shift_count(z, asymptotic_threshold());
  // Each log(z+j) is cut only along z <= -j, so the sum keeps the principal branch.
  BigComplex shift_logs;
  for (long j = 0; j < n; ++j) {
    shift_logs += log(z + j);
  }
  const BigComplex w = z + n;
  const BigComplex winv = inverse(w);
  const BigComplex winv2 = winv * winv;
  BigComplex s = (w - BigReal::ratio(1, 2)) * log(w) - w + log(2 * BigReal::pi()) / 2;
  const BigReal eps = epsilon() * abs(s);
  BigComplex p = winv;
  BigReal last(-1);
  for (int k = 1;; ++k) {
    const BigComplex t = p * bernoulli_2k(k) / ((2 * k) * (2 * k - 1));
    const BigReal mag = abs(t);
    if (last.sign() >= 0 && mag > last) {
      break;  // asymptotic series past its smallest term
    }
    s += t;
    if (mag < eps) {
      break;
    }
    last = mag;
    p *= winv2;
  }
  return s - shift_logs;
}

BigComplex gamma(const BigComplex& z) { return exp(ln_gamma(z)); }

BigComplex digamma(const BigComplex& z) { return polygamma(0, z); }

BigComplex trigamma(const BigComplex& z) { return polygamma(1, z); }

BigComplex polygamma(int n, const BigComplex& z) {
  if (n < 0) {
    throw DomainError("polygamma: order must be >= 0");
  }
  check_pole(z, "polygamma");
  const long shifts = shift_count(z, asymptotic_threshold() + n);
  // psi^(n)(z) = psi^(n)(z+N) - (-1)^n n! sum_{j<N} (z+j)^-(n+1)
  BigComplex shift_sum;
  for (long j = 0; j < shifts; ++j) {
    shift_sum += pow(z + j, -(n + 1));
  }
  const BigReal n_fact = factorial(n);
  const BigComplex w = z + shifts;
  const BigComplex winv = inverse(w);
  const BigComplex winv2 = winv * winv;
  BigComplex s;
  BigComplex p;  // w^-(2k+n)
  BigReal coeff;  // (2k+n-1)!/(2k)! for k >= 1
  if (n == 0) {
    s = log(w) - winv / 2;
    p = winv2;
    coeff = BigReal::ratio(1, 2);  // B_2k / (2k)
  } else {
    s = factorial(n - 1) * pow(winv, n) + n_fact * pow(winv, n + 1) / 2;
    p = pow(winv, n + 2);
    coeff = factorial(n + 1) / 2;
  }
  const BigReal eps = epsilon() * abs(s);
  BigReal last(-1);
  for (int k = 1;; ++k) {
    const BigComplex t = p * bernoulli_2k(k) * coeff;
    const BigReal mag = abs(t);
    if (last.sign() >= 0 && mag > last) {
      break;
    }
    if (n == 0) {
      s -= t;
    } else {
      s += t;
    }
    if (mag < eps) {
      break;
    }
    last = mag;
    p *= winv2;
    if (n == 0) {
      coeff = BigReal(1) / (2 * (k + 1));
    } else {
      coeff = coeff * ((2 * k + n) * (2 * k + n + 1)) / ((2 * k + 1) * (2 * k + 2));
    }
  }
  if (n == 0) {
    return s - shift_sum;
  }
  // Asymptotic part carries (-1)^(n+1); the shift sum carries -(-1)^n = (-1)^(n+1).
  const BigComplex total = s + n_fact * shift_sum;
  return (n % 2 == 1) ? total : -total;
}

namespace {

/// Euler-Maclaurin for sum_k (a+k)^-s with integer or real s.
SeriesResult euler_maclaurin_zeta(const BigComplex& s, const BigComplex& a, const Precision& prec) {
  const bool integral = s.is_real() && s.real().is_integer();
  const long m = integral ? s.real().to_long() : 0;
  auto power = [&](const BigComplex& x, const BigComplex& e, long ie) {
    return integral ? pow(x, ie) : exp(e * log(x));
  };
  const long k_cut = shift_count(a, 10.0 + prec.digits / 2.0);
  if (k_cut > prec.n_max) {
    throw DomainError("hurwitz_zeta: Re(a) too negative for n_max");
  }
  SeriesResult r;
  BigComplex sum;
  for (long k = 0; k < k_cut; ++k) {
    sum += power(a + k, -s, -m);
  }
  const BigComplex n = a + k_cut;
  const BigComplex ninv = inverse(n);
  const BigComplex ninv2 = ninv * ninv;
  const BigComplex n_pow = power(n, -s, -m);  // N^-s
  sum += n_pow * n / (s - 1) + n_pow / 2;
  // Corrections B_2j/(2j)! s(s+1)...(s+2j-2) N^(-s-2j+1).
  BigComplex rising = s;
  BigComplex p = n_pow * ninv;
  BigReal fact(2);
  const BigReal eps = epsilon() * abs(sum);
  BigReal last(-1);
  std::int64_t used = k_cut + 2;
  for (int j = 1;; ++j) {
    const BigComplex t = rising * p * bernoulli_2k(j) / fact;
    const BigReal mag = abs(t);
    if (last.sign() >= 0 && mag > last) {
      r.tail_estimate = mag;
      break;
    }
    sum += t;
    ++used;
    if (mag < eps) {
      r.tail_estimate = mag;
      break;
    }
    last = mag;
    rising *= (s + (2 * j - 1)) * (s + 2 * j);
    p *= ninv2;
    fact *= BigReal((2 * j + 1) * (2 * j + 2));
  }
  r.value = sum;
  r.terms_used = used;
  r.status = r.tail_estimate <= BigReal(prec.tol / 10) ? SeriesStatus::Converged : SeriesStatus::HitTermCap;
  return r;
}

}  // namespace

SeriesResult hurwitz_zeta(int m, const BigComplex& a, const Precision& prec) {
  trace::mark("special.hurwitz_zeta");
  prec.validate();
  PrecisionScope scope(prec);
  if (m < 2) {
    throw DomainError("hurwitz_zeta: order must be >= 2");
  }
  check_pole(a, "hurwitz_zeta");
  if (a.real().to_double() <= -static_cast<double>(prec.n_max) / 2) {
    throw DomainError("hurwitz_zeta: requires Re(a) > -n_max/2");
  }
  return euler_maclaurin_zeta(BigComplex(m), a, prec);
}

SeriesResult riemann_zeta(const BigReal& s, const Precision& prec) {
  trace::mark("special.riemann_zeta");
  prec.validate();
  PrecisionScope scope(prec);
  if (s <= 1) {
    throw DomainError("riemann_zeta: requires s > 1");
  }
  return euler_maclaurin_zeta(BigComplex(s), BigComplex(1), prec);
}

SeriesResult alternating_zeta(const BigReal& s, const Precision& prec) {
  trace::mark("special.alternating_zeta");
  if (s <= 0) {
    throw DomainError("alternating_zeta: requires s > 0");
  }
  PrecisionScope scope(prec);
  const bool integral = s.is_integer();
  const long m = integral ? s.to_long() : 0;
  return sum_series(
      [&](std::int64_t k) {
        const BigReal mag = integral ? pow(BigReal(k + 1), -m) : exp(-s * log(BigReal(k + 1)));
        return BigComplex(k % 2 == 0 ? mag : -mag);
      },
      SummationStrategy::EulerTransform, prec);
}

SeriesResult zeta_AH(int s, const Precision& prec) {
  trace::mark("special.zeta_AH");
  if (s < 2) {
    throw DomainError("zeta_AH: requires integer s >= 2");
  }
  PrecisionScope scope(prec);
  BigReal h;
  return sum_series(
      [&](std::int64_t idx) {
        const std::int64_t k = idx + 1;
        h += BigReal(1) / k;
        const BigReal t = h * pow(BigReal(k), -s);
        return BigComplex(idx % 2 == 0 ? t : -t);
      },
      SummationStrategy::EulerTransform, prec);
}

SeriesResult dirichlet_beta(const BigReal& s, const Precision& prec) {
  trace::mark("special.dirichlet_beta");
  if (s <= 0) {
    throw DomainError("dirichlet_beta: requires s > 0");
  }
  PrecisionScope scope(prec);
  const bool integral = s.is_integer();
  const long m = integral ? s.to_long() : 0;
  return sum_series(
      [&](std::int64_t k) {
        const BigReal base(2 * k + 1);
        const BigReal mag = integral ? pow(base, -m) : exp(-s * log(base));
        return BigComplex(k % 2 == 0 ? mag : -mag);
      },
      SummationStrategy::EulerTransform, prec);
}

BigReal dirichlet_beta_odd(int n) {
  trace::mark("special.dirichlet_beta_odd");
  if (n < 0) {
    throw DomainError("dirichlet_beta_odd: requires n >= 0");
  }
  const auto e = euler_numbers(2 * n);
  const BigReal e2n = to_bigreal(e[static_cast<std::size_t>(2 * n)]);
  const BigReal value = e2n * pow(BigReal::pi(), 2L * n + 1) / (pow(BigReal(2), 2L * n + 2) * factorial(2 * n));
  return n % 2 == 0 ? value : -value;
}

SeriesResult beta_H(int s, const Precision& prec) {
  trace::mark("special.beta_H");
  if (s < 2) {
    throw DomainError("beta_H: requires integer s >= 2");
  }
  PrecisionScope scope(prec);
  BigReal h;  // H_{k-1}
  return sum_series(
      [&](std::int64_t idx) {
        const std::int64_t k = idx + 1;
        if (k > 1) {
          h += BigReal(1) / (k - 1);
        }
        const BigReal t = h * pow(BigReal(2 * k - 1), -s);
        return BigComplex(idx % 2 == 0 ? t : -t);
      },
      SummationStrategy::EulerTransform, prec);
}

ZetaFamilyValue evaluate_zeta(ZetaKind kind, const BigComplex& s, const BigComplex& a, const Precision& prec) {
  PrecisionScope scope(prec);
  if (!s.is_real()) {
    throw DomainError("zeta family: complex order is not supported");
  }
  auto integer_order = [&]() {
    if (!s.real().is_integer()) {
      throw DomainError(std::string(to_string(kind)) + ": integer order required");
    }
    return static_cast<int>(s.real().to_long());
  };
  ZetaFamilyValue v{kind, s, a, {}};
  switch (kind) {
    case ZetaKind::HurwitzZeta: v.result = hurwitz_zeta(integer_order(), a, prec); break;
    case ZetaKind::RiemannZeta: v.result = riemann_zeta(s.real(), prec); break;
    case ZetaKind::AlternatingZeta: v.result = alternating_zeta(s.real(), prec); break;
    case ZetaKind::AlternatingHarmonicZeta: v.result = zeta_AH(integer_order(), prec); break;
    case ZetaKind::DirichletBeta: v.result = dirichlet_beta(s.real(), prec); break;
    case ZetaKind::DirichletBetaHarmonic: v.result = beta_H(integer_order(), prec); break;
  }
  return v;
}

std::string_view to_string(ZetaKind kind) {
  switch (kind) {
    case ZetaKind::HurwitzZeta: return "HurwitzZeta";
    case ZetaKind::RiemannZeta: return "RiemannZeta";
    case ZetaKind::AlternatingZeta: return "AlternatingZeta";
    case ZetaKind::AlternatingHarmonicZeta: return "AlternatingHarmonicZeta";
    case ZetaKind::DirichletBeta: return "DirichletBeta";
    case ZetaKind::DirichletBetaHarmonic: return "DirichletBetaHarmonic";
  }
  return "?";
}

}  // namespace pfsum
