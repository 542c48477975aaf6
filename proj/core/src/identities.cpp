#include "pfsum/identities.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <stdexcept>

#include "pfsum/errors.hpp"
#include "pfsum/oracles.hpp"
#include "pfsum/sequences.hpp"
#include "pfsum/special_functions.hpp"
#include "pfsum/trace.hpp"

namespace pfsum {

std::string_view to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Pass:
      return "Pass";
    case ReportStatus::Fail:
      return "Fail";
    case ReportStatus::NonConvergent:
      return "NonConvergent";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

/// Runs fn under a fresh recorder and stores the routes it touched.
template <class Fn>
auto traced(std::set<std::string>& routes, Fn&& fn) {
  trace::Recorder rec;
  auto value = fn();
  routes = rec.routes();
  return value;
}

void finish(IdentityReport& r, bool converged, const Precision& prec, Clock::time_point start) {
  r.abs_residual = abs(r.lhs - r.rhs);
  const BigReal mag = abs(r.lhs);
  r.rel_residual = mag.is_zero() ? r.abs_residual : r.abs_residual / mag;
  const BigReal tol(prec.tol);
  if (!converged) {
    r.status = ReportStatus::NonConvergent;
  } else if (r.abs_residual <= tol || (mag > BigReal(1) && r.rel_residual <= tol)) {
    r.status = ReportStatus::Pass;
  } else {
    r.status = ReportStatus::Fail;
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string sci(const BigReal& x) { return to_scientific(x, 6); }

bool is_nonpositive_half_integer(const BigComplex& a) {
  const BigReal two_a = a.real() * 2;
  return a.imag().is_zero() && two_a.is_integer() && two_a.sign() <= 0;
}

void require_zeta2_domain(const BigComplex& a, const char* who) {
  if (!(a.real() < BigReal(2))) {
    throw DomainError(std::string(who) + ": requires Re(a) < 2");
  }
  if (is_nonpositive_half_integer(a)) {
    throw DomainError(std::string(who) + ": a must avoid 0, -1/2, -1, ...");
  }
}

BigComplex closed(const BigComplex& v) {
  trace::mark("identities.closed_form");
  return v;
}

}  // namespace

std::string param_string(const BigComplex& z) {
  const auto trim = [](std::string s) {
    if (s.find('.') != std::string::npos) {
      while (s.back() == '0') {
        s.pop_back();
      }
      if (s.back() == '.') {
        s.pop_back();
      }
    }
    return s == "-0" ? std::string("0") : s;
  };
  std::string out = trim(to_fixed(z.real(), 12));
  if (!z.imag().is_zero()) {
    std::string im = trim(to_fixed(z.imag(), 12));
    if (im.front() != '-') {
      im = "+" + im;
    }
    out += im + "i";
  }
  return out;
}

IdentityReport zeta2_pfs(const BigComplex& a, const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  require_zeta2_domain(a, "zeta2_pfs");
  const auto start = Clock::now();
  IdentityReport r;
  r.identity_id = "zeta2-pfs";
  r.params["a"] = param_string(a);
  const auto lhs = traced(r.lhs_routes, [&] { return hurwitz_zeta(2, a, prec); });
  const auto rhs = traced(r.rhs_routes, [&] { return pfs_coeff(SequenceSpec::hurwitz(a, 2), 2, prec); });
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  r.terms_used = rhs.terms_used;
  finish(r, lhs.converged() && rhs.converged(), prec, start);
  return r;
}

IdentityReport zeta_m_pfs(int m, const BigComplex& a, const Precision& prec, bool guard) {
  prec.validate();
  PrecisionScope scope(prec);
  if (m < 2) {
    throw DomainError("zeta_m_pfs: m must be >= 2");
  }
  if (guard && !(a.real().sign() > 0 && a.real() < BigReal(2))) {
    throw DomainError("zeta_m_pfs: requires 0 < Re(a) < 2 (pass guard = false to override)");
  }
  const auto start = Clock::now();
  IdentityReport r;
  r.identity_id = "zeta-m-pfs";
  r.params["m"] = std::to_string(m);
  r.params["a"] = param_string(a);
  const auto lhs = traced(r.lhs_routes, [&] { return hurwitz_zeta(m, a, prec); });
  const auto rhs = traced(r.rhs_routes, [&] { return pfs_coeff(SequenceSpec::hurwitz(a, m), m, prec); });
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  r.terms_used = rhs.terms_used;
  finish(r, lhs.converged() && rhs.converged(), prec, start);
  return r;
}

IdentityReport zeta3_apery(const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  const auto start = Clock::now();
  IdentityReport r;
  r.identity_id = "zeta3-apery";
  const auto lhs = traced(r.lhs_routes, [&] { return riemann_zeta(BigReal(3), prec); });
  const auto rhs = traced(r.rhs_routes, [&] {
    trace::mark("identities.apery_general");
    const BigComplex w = root_of_unity(3, 1);
    const BigComplex w2 = root_of_unity(3, 2);
    return sum_series(
        [&](std::int64_t k) {
          const std::int64_t n = k + 1;
          const BigComplex ln = ln_gamma(BigComplex(1) - w * n) + ln_gamma(BigComplex(1) - w2 * n) -
                                ln_gamma(BigComplex(BigReal(n + 1)));
          const BigComplex t = exp(ln) * 3 / pow(BigReal(n), 3);
          return k % 2 == 0 ? t : -t;
        },
        SummationStrategy::Direct, prec);
  });
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  r.terms_used = rhs.terms_used;

  // Printed variant: Gamma((1+sqrt3) n/2) Gamma((1-sqrt3) n/2) / (n n!).
  const BigReal s3 = sqrt(BigReal(3));
  BigComplex partial;
  BigReal last;
  constexpr int kPrintedTerms = 30;
  for (int n = 1; n <= kPrintedTerms; ++n) {
    const BigComplex g = gamma(BigComplex((BigReal(1) + s3) * n / 2)) * gamma(BigComplex((BigReal(1) - s3) * n / 2));
    const BigComplex t = g * 3 / (factorial(n) * n);
    partial += n % 2 == 1 ? t : -t;
    last = abs(t);
  }
  r.params["printed_form_terms"] = std::to_string(kPrintedTerms);
  r.params["printed_form_partial_sum"] = sci(partial.real());
  r.params["printed_form_last_term"] = sci(last);
  r.params["printed_form_residual"] = sci(abs(partial - lhs.value));
  finish(r, lhs.converged() && rhs.converged(), prec, start);
  return r;
}

IdentityReport gamma_pfd_order1(const BigComplex& a, const BigComplex& z, const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  require_zeta2_domain(a, "gamma_pfd_order1");
  if (!(abs(z) < abs(a))) {
    throw DomainError("gamma_pfd_order1: requires |z| < |a|");
  }
  const auto start = Clock::now();
  IdentityReport r;
  r.identity_id = "gamma-pfd-order1";
  r.params["a"] = param_string(a);
  r.params["z"] = param_string(z);
  r.lhs = traced(r.lhs_routes, [&] {
    trace::mark("identities.gamma_product");
    return gamma(a + z) * gamma(a - z);
  });
  const auto rhs = traced(r.rhs_routes, [&] { return pfd_expansion(SequenceSpec::hurwitz(a, 2), 1, z, prec); });
  const BigComplex ga = gamma(a);
  r.rhs = ga * ga * rhs.value;
  r.terms_used = rhs.terms_used;
  finish(r, rhs.converged(), prec, start);
  return r;
}

std::vector<IdentityReport> example1_sums(const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  const BigReal ln2 = BigReal::ln2();
  const BigReal zeta2 = BigReal::pi() * BigReal::pi() / 6;
  struct Row {
    int power;
    int sign;  // sign of the 1/(2k)^power part
    BigReal value;
    std::string closed_form;
    BigReal printed;
  };
  // Summing the double-factorial form gives twice the Gamma-form constants
  // divided by sqrt(pi).
  const std::vector<Row> rows{
      {1, 1, BigReal(1), "1", BigReal::ratio(1, 2)},
      {2, -1, ln2, "log(2)", ln2 / 2},
      {3, 1, (ln2 * ln2 + zeta2) / 2, "(log^2 2 + zeta(2))/2", (ln2 * ln2 + zeta2) / 2},
  };
  std::vector<IdentityReport> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    const auto start = Clock::now();
    IdentityReport r;
    r.identity_id = "example1-sums";
    r.params["sum"] = std::to_string(i + 1);
    r.params["closed_form"] = row.closed_form;
    const auto lhs = traced(r.lhs_routes, [&] {
      trace::mark("identities.example1_series");
      BigReal ratio = double_factorial_ratio(1);
      return sum_series(
          [&](std::int64_t k) {
            const std::int64_t n = k + 1;
            if (n > 1) {
              ratio = ratio * BigReal(2 * n - 1) / BigReal(2 * n - 2);
            }
            const BigReal t = ratio * (BigReal(1) / pow(BigReal(2 * n - 1), row.power) +
                                       BigReal(row.sign) / pow(BigReal(2 * n), row.power));
            return BigComplex(k % 2 == 0 ? t : -t);
          },
          SummationStrategy::EulerTransform, prec);
    });
    r.lhs = lhs.value;
    r.rhs = traced(r.rhs_routes, [&] { return closed(BigComplex(row.value)); });
    r.terms_used = lhs.terms_used;
    r.params["printed_form_residual"] = sci(abs(lhs.value - BigComplex(row.printed)));
    finish(r, lhs.converged(), prec, start);
    out.push_back(std::move(r));
  }
  return out;
}

SeriesResult example2_series(const BigComplex& a, const BigComplex& b, int J, int sign_shift, const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  trace::mark("identities.example2_series");
  const int sign = (J + sign_shift) % 2 == 0 ? 1 : -1;
  BigComplex g = gamma(a + b);  // Gamma(a+b+k)/k!
  return sum_series(
      [&](std::int64_t k) {
        if (k > 0) {
          g = g * (a + b + (k - 1)) / k;
        }
        const BigComplex t = g * (inverse(pow(a + k, J + 1)) + inverse(pow(b + k, J + 1)) * sign);
        return k % 2 == 0 ? t : -t;
      },
      SummationStrategy::EulerTransform, prec);
}

IdentityReport example2_coeff(const BigComplex& a, const BigComplex& b, int J, const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  const auto in_strip = [](const BigComplex& x) {
    return x.real().sign() >= 0 && x.real() < BigReal(1) && !x.is_zero();
  };
  if (!in_strip(a) || !in_strip(b)) {
    throw DomainError("example2_coeff: requires 0 <= Re(a), Re(b) < 1 and a, b != 0");
  }
  if (J < 0) {
    throw DomainError("example2_coeff: J must be >= 0");
  }
  const auto start = Clock::now();
  IdentityReport r;
  r.identity_id = "example2-coeff";
  r.params["a"] = param_string(a);
  r.params["b"] = param_string(b);
  r.params["J"] = std::to_string(J);
  r.lhs = traced(r.lhs_routes, [&] {
    const auto c = taylor_coeffs_inverse(SequenceSpec::interleaved(a, b), J, prec);
    return gamma(a) * gamma(b) * c[static_cast<std::size_t>(J)];
  });
  const auto rhs = traced(r.rhs_routes, [&] { return example2_series(a, b, J, 0, prec); });
  r.rhs = rhs.value;
  r.terms_used = rhs.terms_used;
  const auto alt = example2_series(a, b, J, 1, prec);
  r.params["alt_sign_residual"] = sci(abs(r.lhs - alt.value));
  finish(r, rhs.converged(), prec, start);
  return r;
}

IdentityReport lemniscatic_sum(const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  const auto start = Clock::now();
  IdentityReport r;
  r.identity_id = "lemniscatic-sum";
  const auto lhs = traced(r.lhs_routes, [&] {
    return oracle::direct_alt_series([](std::int64_t k) { return (k * (k + 1) / 2) % 2 == 0 ? 1 : -1; },
                                     [](std::int64_t) { return BigComplex(1); },
                                     [](std::int64_t k) { return BigComplex(BigReal(2 * k + 1) * BigReal(2 * k + 1)); },
                                     {prec.n_max, oracle::TailMode::PairBound}, prec, 2);
  });
  r.lhs = lhs.value;
  r.rhs = traced(r.rhs_routes,
                 [&] { return closed(BigComplex(sqrt(BigReal(2)) * BigReal::pi() * BigReal::pi() / 16)); });
  r.terms_used = lhs.terms_used;
  finish(r, lhs.converged(), prec, start);
  return r;
}

IdentityReport gamma_psi_coeff(const BigComplex& a, int n, const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  require_zeta2_domain(a, "gamma_psi_coeff");
  if (n < 0) {
    throw DomainError("gamma_psi_coeff: n must be >= 0");
  }
  const auto start = Clock::now();
  IdentityReport r;
  r.identity_id = "gamma-psi-coeff";
  r.params["a"] = param_string(a);
  r.params["n"] = std::to_string(n);
  const auto sz = static_cast<std::size_t>(n) + 1;
  r.lhs = traced(r.lhs_routes, [&] {
    trace::mark("identities.gamma_psi_taylor");
    // Series in w = z^2. log(Gamma(a+z) Gamma(a-z) / Gamma(a)^2) = sum g_j w^j.
    std::vector<BigComplex> g(sz);
    std::vector<BigComplex> p(sz);
    for (std::size_t j = 0; j < sz; ++j) {
      const int jj = static_cast<int>(j);
      p[j] = polygamma(2 * jj, a) * 2 / factorial(2 * jj);
      if (j > 0) {
        g[j] = polygamma(2 * jj - 1, a) * 2 / factorial(2 * jj);
      }
    }
    std::vector<BigComplex> e(sz);
    e[0] = BigComplex(1);
    for (std::size_t j = 1; j < sz; ++j) {
      BigComplex acc;
      for (std::size_t i = 1; i <= j; ++i) {
        acc += g[i] * e[j - i] * static_cast<long>(i);
      }
      e[j] = acc / static_cast<long>(j);
    }
    BigComplex coeff;
    for (std::size_t i = 0; i < sz; ++i) {
      coeff += e[i] * p[sz - 1 - i];
    }
    const BigComplex ga = gamma(a);
    return ga * ga * coeff;
  });
  const auto rhs = traced(r.rhs_routes, [&] {
    trace::mark("identities.gamma_psi_residue");
    if (n == 0) {
      const BigComplex ga = gamma(a);
      SeriesResult s;
      s.value = digamma(a) * ga * ga * 2;
      return s;
    }
    BigComplex g = gamma(a * 2);  // Gamma(2a+k)/k!
    BigComplex psi = digamma(a * 2);
    return sum_series(
        [&](std::int64_t k) {
          if (k > 0) {
            const BigComplex prev = a * 2 + (k - 1);
            g = g * prev / k;
            psi += inverse(prev);
          }
          const BigComplex x = a + k;
          const BigComplex xp = inverse(pow(x, 2 * n + 1));
          const BigComplex t = g * xp * (psi * 4 - BigComplex(BigReal(2 * (2 * n + 1))) / x);
          return k % 2 == 0 ? t : -t;
        },
        SummationStrategy::EulerTransform, prec);
  });
  r.rhs = rhs.value;
  r.terms_used = rhs.terms_used;
  finish(r, rhs.converged(), prec, start);
  return r;
}

IdentityReport zetaAH_recursion(int n, const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  if (n < 1) {
    throw DomainError("zetaAH_recursion: n must be >= 1");
  }
  const auto start = Clock::now();
  IdentityReport r;
  r.identity_id = "zetaAH-recursion";
  r.params["n"] = std::to_string(n);
  const auto lhs = traced(r.lhs_routes, [&] { return zeta_AH(2 * n, prec); });
  bool ok = lhs.converged();
  r.rhs = traced(r.rhs_routes, [&] {
    const BigReal four_n = pow(BigReal(4), n);
    const BigReal coef = BigReal(n) - BigReal(n) / four_n - BigReal(1) / (four_n * 2);
    const auto z = riemann_zeta(BigReal(2 * n + 1), prec);
    ok = ok && z.converged();
    BigComplex acc = z.value * coef;
    for (int j = 1; j < n; ++j) {
      const auto zj = riemann_zeta(BigReal(2 * j + 1), prec);
      const auto aj = alternating_zeta(BigReal(2 * n - 2 * j), prec);
      ok = ok && zj.converged() && aj.converged();
      acc -= zj.value * aj.value;
    }
    return acc;
  });
  r.lhs = lhs.value;
  r.terms_used = lhs.terms_used;
  finish(r, ok, prec, start);
  return r;
}

IdentityReport betaH_recursion(int n, const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  if (n < 1) {
    throw DomainError("betaH_recursion: n must be >= 1");
  }
  const auto start = Clock::now();
  IdentityReport r;
  r.identity_id = "betaH-recursion";
  r.params["n"] = std::to_string(n);
  const auto lhs = traced(r.lhs_routes, [&] { return beta_H(2 * n + 1, prec); });
  bool ok = lhs.converged();
  r.rhs = traced(r.rhs_routes, [&] {
    const auto even = dirichlet_beta(BigReal(2 * n + 2), prec);
    ok = ok && even.converged();
    BigComplex acc = even.value * (2 * n + 1) - BigComplex(dirichlet_beta_odd(n) * log(BigReal(4)));
    for (int j = 0; j < n; ++j) {
      const auto z = riemann_zeta(BigReal(2 * n - 2 * j + 1), prec);
      ok = ok && z.converged();
      const BigReal w = BigReal(1) - BigReal(1) / pow(BigReal(2), 2 * n - 2 * j + 1);
      acc -= z.value * (w * dirichlet_beta_odd(j) * 2);
    }
    return acc;
  });
  r.lhs = lhs.value;
  r.terms_used = lhs.terms_used;
  finish(r, ok, prec, start);
  return r;
}

IdentityReport zeta_even_recursion(int m, const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  if (m < 1) {
    throw DomainError("zeta_even_recursion: m must be >= 1");
  }
  const auto start = Clock::now();
  IdentityReport r;
  r.identity_id = "zeta-even-recursion";
  r.params["m"] = std::to_string(m);
  const auto lhs = traced(r.lhs_routes, [&] { return riemann_zeta(BigReal(2 * m + 2), prec); });
  r.lhs = lhs.value * (2 * m + 3);
  r.rhs = traced(r.rhs_routes, [&] {
    trace::mark("identities.bernoulli_zeta");
    // zeta(2n) = |B_2n| (2 pi)^2n / (2 (2n)!).
    const auto zeta_even = [](int n) {
      return abs(bernoulli_2k(n)) * pow(BigReal::pi() * 2, 2 * n) / (factorial(2 * n) * 2);
    };
    BigReal acc;
    for (int i = 1; i <= m; ++i) {
      acc += zeta_even(i) * zeta_even(m + 1 - i);
    }
    return BigComplex(acc * 2);
  });
  r.terms_used = lhs.terms_used;
  finish(r, lhs.converged(), prec, start);
  return r;
}

IdentityReport hurwitz_even_recursion(int m, const BigComplex& a, const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  if (m < 1) {
    throw DomainError("hurwitz_even_recursion: m must be >= 1");
  }
  if (is_nonpositive_half_integer(a)) {
    throw DomainError("hurwitz_even_recursion: a must avoid 0, -1/2, -1, ...");
  }
  const auto start = Clock::now();
  IdentityReport r;
  r.identity_id = "hurwitz-even-recursion";
  r.params["m"] = std::to_string(m);
  r.params["a"] = param_string(a);
  bool ok = true;
  r.lhs = traced(r.lhs_routes, [&] {
    std::vector<BigComplex> z(static_cast<std::size_t>(m) + 2);
    for (int i = 1; i <= m + 1; ++i) {
      const auto zi = hurwitz_zeta(2 * i, a, prec);
      ok = ok && zi.converged();
      z[static_cast<std::size_t>(i)] = zi.value;
    }
    BigComplex acc = z[static_cast<std::size_t>(m) + 1] * (BigReal(m) + BigReal::ratio(1, 2));
    for (int i = 1; i <= m; ++i) {
      acc -= z[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(m + 1 - i)];
    }
    return acc;
  });
  const auto rhs = traced(r.rhs_routes, [&] {
    trace::mark("identities.psi_difference_series");
    BigComplex d = digamma(BigComplex(1)) - digamma(a * 2);  // psi(1+k) - psi(2a+k)
    return sum_series(
        [&](std::int64_t k) {
          if (k > 0) {
            d += BigComplex(BigReal::ratio(1, k)) - inverse(a * 2 + (k - 1));
          }
          return d / pow(a + k, 2 * m + 1);
        },
        SummationStrategy::Richardson, prec);
  });
  r.rhs = rhs.value;
  r.terms_used = rhs.terms_used;
  finish(r, ok && rhs.converged(), prec, start);
  return r;
}

IdentityReport power_sum_recursion(const SequenceSpec& spec, int m, const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  if (m < 1) {
    throw DomainError("power_sum_recursion: m must be >= 1");
  }
  const auto start = Clock::now();
  IdentityReport r;
  r.identity_id = "power-sum-recursion";
  r.params["spec"] = spec.describe();
  r.params["m"] = std::to_string(m);
  // Both sides of the differential relation at J = 2m, divided by -2.
  r.lhs = traced(r.lhs_routes, [&] { return differential_lhs(spec, 2 * m, prec) / -2; });
  const auto rhs = traced(r.rhs_routes, [&] { return differential_rhs(spec, 2 * m, prec); });
  r.rhs = rhs.value / -2;
  r.terms_used = rhs.terms_used;
  finish(r, rhs.converged(), prec, start);
  return r;
}

IdentityReport differential_relation_check(const SequenceSpec& spec, int J, const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  const auto start = Clock::now();
  IdentityReport r;
  r.identity_id = "differential-relation";
  r.params["spec"] = spec.describe();
  r.params["J"] = std::to_string(J);
  r.lhs = traced(r.lhs_routes, [&] { return differential_lhs(spec, J, prec); });
  const auto rhs = traced(r.rhs_routes, [&] { return differential_rhs(spec, J, prec); });
  r.rhs = rhs.value;
  r.terms_used = rhs.terms_used;
  finish(r, rhs.converged(), prec, start);
  return r;
}

// -- conjecture probe ----------------------------------------------------------

namespace {

/// Y_n(x_1, ..., x_n) for n = 0..x.size().
std::vector<BigComplex> complete_bell(const std::vector<BigComplex>& x) {
  std::vector<BigComplex> y(x.size() + 1);
  y[0] = BigComplex(1);
  for (std::size_t k = 0; k < x.size(); ++k) {
    BigComplex acc;
    for (std::size_t i = 0; i <= k; ++i) {
      acc += y[k - i] * x[i] * binomial(static_cast<long>(k), static_cast<long>(i));
    }
    y[k + 1] = acc;
  }
  return y;
}

/// G^(L)(a_k)/G'(a_k) for k = 0, 1, ... advanced by polygamma recurrences.
class NodeRatios {
 public:
  NodeRatios(const BigComplex& a, int L) : a_(a), L_(L), diff_(static_cast<std::size_t>(std::max(L - 1, 1))) {
    for (std::size_t j = 0; j < diff_.size(); ++j) {
      const int jj = static_cast<int>(j);
      diff_[j] = polygamma(jj, BigComplex(1)) - polygamma(jj, a * 2);
      if (jj % 2 == 1) {
        diff_[j] -= polygamma(jj, BigComplex(1)) * 2;
      }
    }
  }

  const BigComplex& at(std::int64_t k) {
    while (static_cast<std::int64_t>(cache_.size()) <= k) {
      cache_.push_back(compute(static_cast<std::int64_t>(cache_.size())));
    }
    return cache_[static_cast<std::size_t>(k)];
  }

 private:
  BigComplex compute(std::int64_t k) {
    if (k > 0) {
      // psi^(j)(x+1) = psi^(j)(x) + (-1)^j j!/x^(j+1).
      const BigComplex one = BigComplex(BigReal(k));
      const BigComplex two = a_ * 2 + (k - 1);
      for (std::size_t j = 0; j < diff_.size(); ++j) {
        const int jj = static_cast<int>(j);
        BigComplex step = (inverse(pow(one, jj + 1)) - inverse(pow(two, jj + 1))) * factorial(jj);
        diff_[j] += jj % 2 == 0 ? step : -step;
      }
    }
    const BigComplex x = a_ + k;
    std::vector<BigComplex> h(static_cast<std::size_t>(L_ - 1));
    for (std::size_t j = 0; j < h.size(); ++j) {
      const int jj = static_cast<int>(j);
      const BigComplex pole = inverse(pow(x, jj + 1)) * factorial(jj);
      h[j] = (jj % 2 == 0 ? pole : -pole) + diff_[j];
    }
    return complete_bell(h).back() * L_;
  }

  BigComplex a_;
  int L_;
  std::vector<BigComplex> diff_;  // psi^(j)(1+k) - psi^(j)(2a+k) - [j odd] 2 psi^(j)(1)
  std::vector<BigComplex> cache_;
};

}  // namespace

ProbeReport conjecture_probe(const BigComplex& a, int L, const std::vector<BigComplex>& z_samples,
                             const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  if (L < 2) {
    throw DomainError("conjecture_probe: L must be >= 2");
  }
  SequenceSpec::hurwitz(a, 2).validate();
  for (const auto& z : z_samples) {
    if (z.is_zero() || !(abs(z) < abs(a))) {
      throw DomainError("conjecture_probe: samples must satisfy 0 < |z| < |a|");
    }
  }
  trace::mark("identities.conjecture_probe");
  ProbeReport out;
  out.a = a;
  out.L = L;
  if (z_samples.empty()) {
    return out;
  }

  NodeRatios ratios(a, L);
  std::vector<SeriesResult> poles;
  for (const auto& z : z_samples) {
    const BigComplex z2 = z * z;
    poles.push_back(sum_series(
        [&](std::int64_t k) {
          const BigComplex x = a + k;
          return ratios.at(k) * x * 2 / (z2 - x * x);
        },
        SummationStrategy::Richardson, prec));
  }

  std::vector<BigComplex> lhs;
  for (const auto& z : z_samples) {
    lhs.push_back(log_derivative_ratio(a, L, z));
  }

  if (L == 2) {
    NodeRatios curvature(a, 2);
    const auto s = sum_series([&](std::int64_t k) { return curvature.at(k) * 2 / (a + k); },
                              SummationStrategy::Richardson, prec);
    out.constant = s.value - hurwitz_zeta(2, a, prec).value * 6;
  } else {
    BigComplex mean;
    long count = 0;
    for (std::size_t i = 0; i < z_samples.size(); ++i) {
      if (poles[i].converged()) {
        mean += lhs[i] - poles[i].value;
        ++count;
      }
    }
    if (count > 0) {
      mean /= count;
      BigReal var;
      for (std::size_t i = 0; i < z_samples.size(); ++i) {
        if (poles[i].converged()) {
          var += norm(lhs[i] - poles[i].value - mean);
        }
      }
      out.constant_variance = var / count;
    }
    out.constant = mean;
  }

  for (std::size_t i = 0; i < z_samples.size(); ++i) {
    ProbeSample s;
    s.z = z_samples[i];
    s.lhs = lhs[i];
    s.rhs = out.constant + poles[i].value;
    s.residual = abs(s.lhs - s.rhs);
    s.terms_used = poles[i].terms_used;
    s.converged = poles[i].converged();
    out.samples.push_back(std::move(s));
  }
  return out;
}

// -- catalog -------------------------------------------------------------------

namespace {

/// A grid value lo + i/1000 in [lo, hi].
BigReal draw(std::mt19937_64& rng, long lo_milli, long hi_milli) {
  std::uniform_int_distribution<long> dist(lo_milli, hi_milli);
  return BigReal::ratio(dist(rng), 1000);
}

int draw_int(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(rng);
}

BigComplex q(long n, long d) { return BigComplex(BigReal::ratio(n, d)); }

using Runner = std::function<std::vector<IdentityReport>(std::mt19937_64&, const Precision&)>;

template <class Default, class Random>
Runner with_draws(Default def, Random rnd) {
  return [def, rnd](std::mt19937_64& rng, const Precision& prec) {
    std::vector<IdentityReport> out{def(prec)};
    for (int i = 0; i < 3; ++i) {
      out.push_back(rnd(rng, prec));
    }
    return out;
  };
}

SequenceSpec random_symmetric_finite(std::mt19937_64& rng) {
  std::vector<BigComplex> nodes;
  for (int i = 0; i < 5; ++i) {
    nodes.emplace_back(draw(rng, 500, 4000) + i, draw(rng, -500, 500));
  }
  return SequenceSpec::finite(nodes, 2);
}

const std::map<std::string, Runner, std::less<>>& catalog() {
  static const std::map<std::string, Runner, std::less<>> table{
      {"zeta2-pfs", with_draws([](const Precision& p) { return zeta2_pfs(1, p); },
                               [](std::mt19937_64& rng, const Precision& p) {
                                 return zeta2_pfs(BigComplex(draw(rng, 100, 1900), draw(rng, -500, 500)), p);
                               })},
      {"zeta-m-pfs", with_draws([](const Precision& p) { return zeta_m_pfs(3, 1, p); },
                                [](std::mt19937_64& rng, const Precision& p) {
                                  const int m = draw_int(rng, 2, 4);
                                  return zeta_m_pfs(m, BigComplex(draw(rng, 200, 1800), draw(rng, -300, 300)), p);
                                })},
      {"zeta3-apery", [](std::mt19937_64&, const Precision& p) { return std::vector{zeta3_apery(p)}; }},
      {"gamma-pfd-order1",
       with_draws([](const Precision& p) { return gamma_pfd_order1(q(3, 4), BigComplex(0, BigReal("0.2")), p); },
                  [](std::mt19937_64& rng, const Precision& p) {
                    const BigComplex a(draw(rng, 300, 1900), draw(rng, -300, 300));
                    const BigReal r = draw(rng, 50, 450) * a.real();
                    const BigReal t = draw(rng, 0, 6283);
                    const BigComplex z(round(r * cos(t) * 1000) / 1000, round(r * sin(t) * 1000) / 1000);
                    return gamma_pfd_order1(a, z, p);
                  })},
      {"example1-sums", [](std::mt19937_64&, const Precision& p) { return example1_sums(p); }},
      {"example2-coeff", with_draws([](const Precision& p) { return example2_coeff(q(1, 4), q(3, 4), 0, p); },
                                    [](std::mt19937_64& rng, const Precision& p) {
                                      const BigComplex a(draw(rng, 100, 900));
                                      const BigComplex b(draw(rng, 100, 900));
                                      return example2_coeff(a, b, draw_int(rng, 0, 2), p);
                                    })},
      {"lemniscatic-sum", [](std::mt19937_64&, const Precision& p) { return std::vector{lemniscatic_sum(p)}; }},
      {"gamma-psi-coeff", with_draws([](const Precision& p) { return gamma_psi_coeff(1, 1, p); },
                                     [](std::mt19937_64& rng, const Precision& p) {
                                       const BigComplex a(draw(rng, 300, 1700), draw(rng, -300, 300));
                                       return gamma_psi_coeff(a, draw_int(rng, 1, 3), p);
                                     })},
      {"zetaAH-recursion", with_draws([](const Precision& p) { return zetaAH_recursion(1, p); },
                                      [](std::mt19937_64& rng, const Precision& p) {
                                        return zetaAH_recursion(draw_int(rng, 1, 4), p);
                                      })},
      {"betaH-recursion", with_draws([](const Precision& p) { return betaH_recursion(1, p); },
                                     [](std::mt19937_64& rng, const Precision& p) {
                                       return betaH_recursion(draw_int(rng, 1, 3), p);
                                     })},
      {"zeta-even-recursion", with_draws([](const Precision& p) { return zeta_even_recursion(1, p); },
                                         [](std::mt19937_64& rng, const Precision& p) {
                                           return zeta_even_recursion(draw_int(rng, 1, 6), p);
                                         })},
      {"hurwitz-even-recursion",
       with_draws([](const Precision& p) { return hurwitz_even_recursion(1, q(3, 4), p); },
                  [](std::mt19937_64& rng, const Precision& p) {
                    const BigComplex a(draw(rng, 200, 1800), draw(rng, -300, 300));
                    return hurwitz_even_recursion(draw_int(rng, 1, 3), a, p);
                  })},
      {"power-sum-recursion",
       with_draws([](const Precision& p) { return power_sum_recursion(SequenceSpec::hurwitz(q(1, 2), 2), 1, p); },
                  [](std::mt19937_64& rng, const Precision& p) {
                    return power_sum_recursion(random_symmetric_finite(rng), draw_int(rng, 1, 3), p);
                  })},
      {"differential-relation",
       with_draws(
           [](const Precision& p) { return differential_relation_check(SequenceSpec::hurwitz(q(3, 4), 2), 2, p); },
           [](std::mt19937_64& rng, const Precision& p) {
             const BigComplex a(draw(rng, 200, 1800), draw(rng, -300, 300));
             return differential_relation_check(SequenceSpec::hurwitz(a, 2), 2 * draw_int(rng, 0, 2), p);
           })},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : catalog()) {
      out.push_back(id);
    }
    return out;
  }();
  return ids;
}

std::vector<IdentityReport> run_identity(std::string_view id, std::uint64_t seed, const Precision& prec) {
  const auto& table = catalog();
  const auto it = table.find(id);
  if (it == table.end()) {
    throw std::invalid_argument("unknown identity: " + std::string(id));
  }
  const auto index = static_cast<std::uint64_t>(std::distance(table.begin(), it));
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  PrecisionScope scope(prec);
  return it->second(rng, prec);
}

std::vector<IdentityReport> run_suite(const std::vector<std::string>& ids, std::uint64_t seed,
                                      const Precision& prec) {
  for (const auto& id : ids) {
    if (catalog().find(id) == catalog().end()) {
      throw std::invalid_argument("unknown identity: " + id);
    }
  }
  std::vector<std::future<std::vector<IdentityReport>>> jobs;
  for (const auto& id : ids) {
    jobs.push_back(std::async(std::launch::async, [id, seed, prec] { return run_identity(id, seed, prec); }));
  }
  std::vector<IdentityReport> out;
  for (auto& job : jobs) {
    auto part = job.get();
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const IdentityReport& x, const IdentityReport& y) { return x.identity_id < y.identity_id; });
  return out;
}

std::vector<BigComplex> probe_samples(const BigComplex& a, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const BigReal radius = abs(a);
  std::vector<BigComplex> out;
  for (int i = 0; i < count; ++i) {
    const BigReal r = draw(rng, 150, 450) * radius;
    const BigReal t = draw(rng, 0, 6283);
    out.emplace_back(round(r * cos(t) * 1000) / 1000, round(r * sin(t) * 1000) / 1000);
  }
  return out;
}

}  // namespace pfsum
