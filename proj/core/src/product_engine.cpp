#include "pfsum/product_engine.hpp"

#include <cmath>
#include <sstream>

#include "pfsum/errors.hpp"
#include "pfsum/sequences.hpp"
#include "pfsum/special_functions.hpp"
#include "pfsum/trace.hpp"

namespace pfsum {

namespace {

bool is_nonpositive_integer(const BigComplex& z) {
  return z.is_real() && z.real().is_integer() && z.real().sign() <= 0;
}

BigReal near_zero() { return BigReal::pow10(-(working_digits() / 2)); }

std::vector<BigComplex> roots(int m) {
  std::vector<BigComplex> w;
  w.reserve(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    w.push_back(root_of_unity(m, r));
  }
  return w;
}

/// Integer pair (j, k) >= 0 with a + j = u (a + k), if any.
bool collides(const BigComplex& a, const BigComplex& u) {
  const BigComplex w = a * (1 - u);  // = u k - j
  const BigReal tiny = near_zero();
  BigReal k;
  if (abs(u.imag()) > tiny) {
    k = w.imag() / u.imag();
  } else {
    // u = -1: need -(j + k) = w.
    if (abs(w.imag()) > tiny) {
      return false;
    }
    const BigReal total = -w.real();
    return total > -tiny && abs(total - round(total)) < tiny;
  }
  const BigReal j = k * u.real() - w.real();
  auto whole = [&](const BigReal& x) { return x > -tiny && abs(x - round(x)) < tiny; };
  return whole(k) && whole(j) && abs(round(k) - round(j)) > tiny;
}

std::int64_t ceil_nonneg(double x) { return x <= 0 ? 0 : static_cast<std::int64_t>(std::ceil(x)); }

/// Gamma(c+k)/k! for k = 0, 1, ... scaled by exp(ln_scale).
class GammaRatio {
 public:
  GammaRatio(const BigComplex& c, const BigComplex& ln_scale) : c_(c), value_(exp(ln_gamma(c) + ln_scale)) {}
  BigComplex next() {
    BigComplex out = value_;
    value_ = value_ * (c_ + k_) / (k_ + 1);
    ++k_;
    return out;
  }

 private:
  BigComplex c_;
  BigComplex value_;
  std::int64_t k_ = 0;
};

void require_prec(const Precision& prec) { prec.validate(); }

}  // namespace

SequenceSpec SequenceSpec::hurwitz(const BigComplex& a, int m) {
  SequenceSpec s;
  s.kind = SequenceKind::ArithmeticHurwitz;
  s.a = a;
  s.power_m = m;
  return s;
}

SequenceSpec SequenceSpec::interleaved(const BigComplex& a, const BigComplex& b, const BigReal& scale) {
  SequenceSpec s;
  s.kind = SequenceKind::InterleavedSigned;
  s.a = a;
  s.b = b;
  s.scale = scale;
  s.power_m = 1;
  return s;
}

SequenceSpec SequenceSpec::example_one() {
  return interleaved(BigComplex(BigReal::ratio(1, 2)), BigComplex(1), BigReal(2));
}

SequenceSpec SequenceSpec::finite(std::vector<BigComplex> nodes, int m) {
  SequenceSpec s;
  s.kind = SequenceKind::ExplicitFinite;
  s.nodes = std::move(nodes);
  s.power_m = m;
  return s;
}

void SequenceSpec::validate() const {
  switch (kind) {
    case SequenceKind::ArithmeticHurwitz: {
      if (power_m < 2) {
        throw DomainError("hurwitz spec: power m must be >= 2 for convergence");
      }
      if (is_nonpositive_integer(a)) {
        throw DomainError("hurwitz spec: a node sits at zero");
      }
      for (int r = 1; r < power_m; ++r) {
        if (collides(a, root_of_unity(power_m, r))) {
          throw DuplicateNodeError("hurwitz spec: effective nodes coincide for a = " + to_fixed(a, 6));
        }
      }
      return;
    }
    case SequenceKind::InterleavedSigned: {
      if (power_m != 1) {
        throw DomainError("interleaved spec: power m must be 1");
      }
      if (scale.is_zero()) {
        throw DomainError("interleaved spec: zero scale");
      }
      if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
        throw DomainError("interleaved spec: a node sits at zero");
      }
      if (is_nonpositive_integer(a + b)) {
        throw DuplicateNodeError("interleaved spec: a + b is a non-positive integer");
      }
      return;
    }
    case SequenceKind::ExplicitFinite: {
      if (nodes.empty()) {
        throw DomainError("finite spec: no nodes");
      }
      if (power_m < 1) {
        throw DomainError("finite spec: power m must be >= 1");
      }
      std::vector<BigComplex> powered;
      for (const auto& x : nodes) {
        if (x.is_zero()) {
          throw DomainError("finite spec: zero node");
        }
        powered.push_back(pow(x, power_m));
      }
      const BigReal tiny = near_zero();
      for (std::size_t i = 0; i < powered.size(); ++i) {
        for (std::size_t j = i + 1; j < powered.size(); ++j) {
          if (abs(powered[i] - powered[j]) <= tiny * abs(powered[i])) {
            throw DuplicateNodeError("finite spec: nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                     " give coinciding effective nodes");
          }
        }
      }
      return;
    }
  }
}

std::string SequenceSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case SequenceKind::ArithmeticHurwitz:
      os << "hurwitz(a=" << to_fixed(a, 6) << ",m=" << power_m << ")";
      break;
    case SequenceKind::InterleavedSigned:
      os << "interleaved(a=" << to_fixed(a, 6) << ",b=" << to_fixed(b, 6) << ",s=" << to_fixed(scale, 6) << ")";
      break;
    case SequenceKind::ExplicitFinite:
      os << "finite(n=" << nodes.size() << ",m=" << power_m << ")";
      break;
  }
  return os.str();
}

BigComplex node(const SequenceSpec& spec, NodeIndex idx) {
  if (idx.n < 0 || idx.r < 0 || idx.r >= spec.power_m) {
    throw DomainError("node: index out of range");
  }
  switch (spec.kind) {
    case SequenceKind::ArithmeticHurwitz:
      return (spec.a + idx.n) * root_of_unity(spec.power_m, idx.r);
    case SequenceKind::InterleavedSigned: {
      const std::int64_t k = idx.n / 2;
      return idx.n % 2 == 0 ? (spec.a + k) * spec.scale : -(spec.b + k) * spec.scale;
    }
    case SequenceKind::ExplicitFinite:
      if (idx.n >= spec.finite_size()) {
        throw DomainError("node: index out of range");
      }
      return spec.nodes[static_cast<std::size_t>(idx.n)] * root_of_unity(spec.power_m, idx.r);
  }
  return {};
}

BigReal min_node_modulus(const SequenceSpec& spec) {
  auto scan = [](const BigComplex& c) {
    BigReal best = abs(c);
    const std::int64_t last = ceil_nonneg(-c.real().to_double()) + 1;
    for (std::int64_t k = 1; k <= last; ++k) {
      best = min(best, abs(c + k));
    }
    return best;
  };
  switch (spec.kind) {
    case SequenceKind::ArithmeticHurwitz:
      return scan(spec.a);
    case SequenceKind::InterleavedSigned:
      return abs(spec.scale) * min(scan(spec.a), scan(spec.b));
    case SequenceKind::ExplicitFinite: {
      BigReal best = abs(spec.nodes.front());
      for (const auto& x : spec.nodes) {
        best = min(best, abs(x));
      }
      return best;
    }
  }
  return {};
}

namespace {

std::vector<BigComplex> mu_weights(const std::vector<BigComplex>& nodes) {
  std::vector<BigComplex> mu;
  mu.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    BigComplex prod(1);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j != i) {
        const BigComplex d = nodes[i] - nodes[j];
        if (d.is_zero()) {
          throw DuplicateNodeError("partial fractions: duplicate node " + to_fixed(nodes[i], 6));
        }
        prod *= d;
      }
    }
    mu.push_back(inverse(prod));
  }
  return mu;
}

}  // namespace

DecompositionResult decompose_homogeneous(const std::vector<BigComplex>& nodes) {
  trace::mark("engine.decompose_homogeneous");
  if (nodes.size() < 2) {
    throw DomainError("decompose_homogeneous: needs at least two nodes");
  }
  for (const auto& x : nodes) {
    if (x.is_zero()) {
      throw DomainError("decompose_homogeneous: zero node");
    }
  }
  DecompositionResult d;
  d.residue_weights = mu_weights(nodes);
  d.node_count = static_cast<std::int64_t>(nodes.size());
  return d;
}

LiftResult lift_one_point(const std::vector<BigComplex>& nodes, int L, const BigComplex& x) {
  trace::mark("engine.lift_one_point");
  if (nodes.empty() || L < 0) {
    throw DomainError("lift_one_point: needs nodes and L >= 0");
  }
  for (const auto& a : nodes) {
    if (a.is_zero()) {
      throw DomainError("lift_one_point: zero node");
    }
    if (a == x) {
      throw PoleError("lift_one_point: x is a node");
    }
  }
  if (L > 0 && x.is_zero()) {
    throw PoleError("lift_one_point: x = 0 is the lifted pole");
  }
  const auto mu = mu_weights(nodes);
  LiftResult out;
  BigComplex prod(1);
  for (const auto& a : nodes) {
    prod *= x - a;
  }
  out.lhs = inverse(prod * pow(x, L));
  const BigComplex xinv = L > 0 ? inverse(x) : BigComplex(1);
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    const BigComplex ainv = inverse(nodes[n]);
    BigComplex xpow = xinv;
    for (int j = 1; j <= L; ++j) {
      out.rhs -= mu[n] * pow(ainv, L - j + 1) * xpow;
      xpow *= xinv;
    }
    out.rhs += mu[n] * pow(ainv, L) / (x - nodes[n]);
  }
  return out;
}

std::vector<BigComplex> power_sums(const SequenceSpec& spec, int j_max, const Precision& prec) {
  trace::mark("engine.power_sums");
  require_prec(prec);
  PrecisionScope scope(prec);
  spec.validate();
  if (j_max < 0) {
    throw DomainError("power_sums: j_max must be >= 0");
  }
  std::vector<BigComplex> p(static_cast<std::size_t>(j_max) + 1);
  auto zeta = [&](int j, const BigComplex& shift) {
    const auto r = hurwitz_zeta(j, shift, prec);
    if (!r.converged()) {
      throw DivergenceError("power_sums: zeta(" + std::to_string(j) + ", a) did not converge");
    }
    return r.value;
  };
  for (int j = 1; j <= j_max; ++j) {
    BigComplex& out = p[static_cast<std::size_t>(j)];
    if (j % spec.power_m != 0) {
      continue;
    }
    switch (spec.kind) {
      case SequenceKind::ArithmeticHurwitz:
        out = zeta(j, spec.a) * spec.power_m;
        break;
      case SequenceKind::InterleavedSigned: {
        const BigComplex sj = pow(BigComplex(spec.scale), -j);
        if (j == 1) {
          out = (digamma(spec.b) - digamma(spec.a)) * sj;
        } else {
          const BigComplex zb = zeta(j, spec.b);
          out = (zeta(j, spec.a) + (j % 2 == 0 ? zb : -zb)) * sj;
        }
        break;
      }
      case SequenceKind::ExplicitFinite:
        for (const auto& x : spec.nodes) {
          out += pow(x, -j);
        }
        out *= spec.power_m;
        break;
    }
  }
  return p;
}

std::vector<BigComplex> taylor_coeffs_inverse(const SequenceSpec& spec, int K, const Precision& prec) {
  trace::mark("engine.taylor_coeffs_inverse");
  if (K < 0) {
    throw DomainError("taylor_coeffs_inverse: K must be >= 0");
  }
  const auto p = power_sums(spec, K, prec);
  PrecisionScope scope(prec);
  std::vector<BigComplex> c(static_cast<std::size_t>(K) + 1);
  c[0] = BigComplex(1);
  for (int k = 1; k <= K; ++k) {
    BigComplex acc;
    for (int j = 1; j <= k; ++j) {
      if (!p[static_cast<std::size_t>(j)].is_zero()) {
        acc += p[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
      }
    }
    c[static_cast<std::size_t>(k)] = acc / k;
  }
  return c;
}

BigComplex residue_weight(const SequenceSpec& spec, NodeIndex idx, const Precision& prec) {
  trace::mark("engine.residue_weight");
  require_prec(prec);
  PrecisionScope scope(prec);
  spec.validate();
  const BigComplex x = node(spec, idx);  // range check
  switch (spec.kind) {
    case SequenceKind::ArithmeticHurwitz: {
      const int m = spec.power_m;
      const std::int64_t k = idx.n;
      BigComplex ln_sum = -ln_gamma(spec.a) * m - ln_gamma(k + 1);
      for (int r = 1; r < m; ++r) {
        ln_sum += ln_gamma(spec.a - root_of_unity(m, r) * (spec.a + k));
      }
      const BigComplex base = exp(ln_sum);
      // F'(a w^r) = w^-r F'(a)
      return (k % 2 == 1 ? base : -base) * root_of_unity(m, idx.r);
    }
    case SequenceKind::InterleavedSigned: {
      const std::int64_t k = idx.n / 2;
      const BigComplex w =
          exp(ln_gamma(spec.a + spec.b + k) - ln_gamma(k + 1) - ln_gamma(spec.a) - ln_gamma(spec.b)) * spec.scale;
      const BigComplex a_weight = k % 2 == 1 ? w : -w;
      return idx.n % 2 == 0 ? a_weight : -a_weight;
    }
    case SequenceKind::ExplicitFinite: {
      const int m = spec.power_m;
      const BigComplex& an = spec.nodes[static_cast<std::size_t>(idx.n)];
      BigComplex deriv = BigComplex(-m) / an;
      for (std::size_t s = 0; s < spec.nodes.size(); ++s) {
        if (static_cast<std::int64_t>(s) != idx.n) {
          deriv *= 1 - pow(an / spec.nodes[s], m);
        }
      }
      (void)x;
      return root_of_unity(m, idx.r) / deriv;
    }
  }
  return {};
}

HurwitzWeights::HurwitzWeights(const BigComplex& a, int m) : a_(a), m_(m), ln_gamma_a_(ln_gamma(a)) {
  if (m_ == 2) {
    ratio_ = exp(ln_gamma(a * 2) - ln_gamma_a_ * 2);
  }
}

BigComplex HurwitzWeights::next() {
  const std::int64_t k = k_++;
  BigComplex w;
  if (m_ == 2) {
    w = ratio_ * 2;
    ratio_ = ratio_ * (a_ * 2 + k) / (k + 1);
  } else {
    BigComplex ln_sum = -ln_gamma_a_ * m_ - ln_gamma(k + 1);
    for (int r = 1; r < m_; ++r) {
      ln_sum += ln_gamma(a_ - root_of_unity(m_, r) * (a_ + k));
    }
    w = exp(ln_sum) * m_;
  }
  return k % 2 == 0 ? w : -w;
}

namespace {

SummationStrategy hurwitz_strategy(int m) {
  // m = 2 weights grow like k^(2a-1) with alternating sign; m >= 3 weights
  // decay geometrically.
  return m == 2 ? SummationStrategy::EulerTransform : SummationStrategy::Direct;
}

SeriesResult exact_result(const BigComplex& v, std::int64_t terms) {
  SeriesResult r;
  r.value = v;
  r.terms_used = terms;
  return r;
}

}  // namespace

SeriesResult pfs_coeff(const SequenceSpec& spec, int J, const Precision& prec) {
  trace::mark("engine.pfs_coeff");
  require_prec(prec);
  PrecisionScope scope(prec);
  spec.validate();
  if (J < 0) {
    throw DomainError("pfs_coeff: J must be >= 0");
  }
  if (J % spec.power_m != 0) {
    return exact_result(BigComplex(), 0);
  }
  switch (spec.kind) {
    case SequenceKind::ArithmeticHurwitz: {
      HurwitzWeights weights(spec.a, spec.power_m);
      return sum_series([&](std::int64_t k) { return weights.next() * pow(spec.a + k, -(J + 1)); },
                        hurwitz_strategy(spec.power_m), prec);
    }
    case SequenceKind::InterleavedSigned: {
      GammaRatio g(spec.a + spec.b, -ln_gamma(spec.a) - ln_gamma(spec.b));
      const BigComplex sj = pow(BigComplex(spec.scale), -J);
      return sum_series(
          [&](std::int64_t k) {
            const BigComplex gk = g.next();
            const BigComplex tb = pow(spec.b + k, -(J + 1));
            const BigComplex bracket = pow(spec.a + k, -(J + 1)) + (J % 2 == 0 ? tb : -tb);
            const BigComplex t = gk * bracket * sj;
            return k % 2 == 0 ? t : -t;
          },
          SummationStrategy::EulerTransform, prec);
    }
    case SequenceKind::ExplicitFinite: {
      BigComplex acc;
      for (std::int64_t n = 0; n < spec.finite_size(); ++n) {
        const BigComplex lambda = residue_weight(spec, {n, 0}, prec);
        acc -= lambda * pow(spec.nodes[static_cast<std::size_t>(n)], -(J + 1));
      }
      return exact_result(acc * spec.power_m, spec.finite_size() * spec.power_m);
    }
  }
  return {};
}

namespace {

/// log prod_{k >= N} (1 - (z/(a+k))^m) = -sum_j z^(mj) zeta(mj, a+N) / j.
BigComplex hurwitz_tail_log(const BigComplex& shift, int m, const BigComplex& z, const Precision& prec) {
  BigComplex acc;
  const BigReal eps = pow(BigReal(2), -working_bits());
  const BigComplex zm = pow(z, m);
  BigComplex zp = zm;
  for (int j = 1; j < 100000; ++j) {
    const BigComplex t = zp * hurwitz_zeta(m * j, shift, prec).value / j;
    acc -= t;
    if (abs(t) < eps) {
      break;
    }
    zp *= zm;
  }
  return acc;
}

BigComplex direct_inverse(const SequenceSpec& spec, const BigComplex& z, const Precision& prec) {
  const BigReal zabs = abs(z);
  switch (spec.kind) {
    case SequenceKind::ArithmeticHurwitz: {
      const int m = spec.power_m;
      const std::int64_t n = std::max<std::int64_t>(8, ceil_nonneg(2 * zabs.to_double() - spec.a.real().to_double()) + 1);
      BigComplex prod(1);
      for (std::int64_t k = 0; k < n; ++k) {
        prod *= 1 - pow(z / (spec.a + k), m);
      }
      return inverse(prod * exp(hurwitz_tail_log(spec.a + n, m, z, prec)));
    }
    case SequenceKind::InterleavedSigned: {
      const BigComplex zs = z / spec.scale;
      const double reach = 2 * abs(zs).to_double();
      const std::int64_t n = std::max<std::int64_t>(
          8, std::max(ceil_nonneg(reach - spec.a.real().to_double()), ceil_nonneg(reach - spec.b.real().to_double())) + 1);
      BigComplex prod(1);
      for (std::int64_t k = 0; k < n; ++k) {
        prod *= (1 - zs / (spec.a + k)) * (1 + zs / (spec.b + k));
      }
      // log of the tail: -sum_j (zs^j / j) [zeta(j, a+N) + (-1)^j zeta(j, b+N)],
      // with the j = 1 bracket psi(b+N) - psi(a+N).
      const BigComplex an = spec.a + n;
      const BigComplex bn = spec.b + n;
      BigComplex tail = -zs * (digamma(bn) - digamma(an));
      const BigReal eps = pow(BigReal(2), -working_bits());
      BigComplex zp = zs;
      for (int j = 2; j < 100000; ++j) {
        zp *= zs;
        const BigComplex zb = hurwitz_zeta(j, bn, prec).value;
        const BigComplex t = zp * (hurwitz_zeta(j, an, prec).value + (j % 2 == 0 ? zb : -zb)) / j;
        tail -= t;
        if (abs(t) < eps) {
          break;
        }
      }
      return inverse(prod * exp(tail));
    }
    case SequenceKind::ExplicitFinite: {
      BigComplex prod(1);
      for (const auto& x : spec.nodes) {
        prod *= 1 - pow(z / x, spec.power_m);
      }
      return inverse(prod);
    }
  }
  return {};
}

/// lambda (z/x)^L / (z - x)
BigComplex lifted_pole(const BigComplex& lambda, const BigComplex& x, const BigComplex& z, int L) {
  return lambda * pow(z / x, L) / (z - x);
}

}  // namespace

namespace {

void check_pfd_args(const SequenceSpec& spec, int L, const BigComplex& z) {
  spec.validate();
  if (L < 0) {
    throw DomainError("pfd_evaluate: L must be >= 0");
  }
  if (abs(z) >= min_node_modulus(spec)) {
    throw DomainError("pfd_evaluate: requires |z| < min |a_n|");
  }
}

}  // namespace

BigComplex pfd_direct(const SequenceSpec& spec, const BigComplex& z, const Precision& prec) {
  require_prec(prec);
  PrecisionScope scope(prec);
  check_pfd_args(spec, 0, z);
  trace::mark("engine.pfd_direct");
  return direct_inverse(spec, z, prec);
}

SeriesResult pfd_expansion(const SequenceSpec& spec, int L, const BigComplex& z, const Precision& prec) {
  require_prec(prec);
  PrecisionScope scope(prec);
  check_pfd_args(spec, L, z);
  trace::mark("engine.pfd_expansion");
  BigComplex head;
  BigComplex zp(1);
  for (int j = 0; j < L; ++j) {
    head += pfs_coeff(spec, j, prec).value * zp;
    zp *= z;
  }
  SeriesResult out;
  switch (spec.kind) {
    case SequenceKind::ArithmeticHurwitz: {
      const int m = spec.power_m;
      const auto w = roots(m);
      HurwitzWeights weights(spec.a, m);
      out = sum_series(
          [&](std::int64_t k) {
            const BigComplex lambda0 = -weights.next() / m;
            const BigComplex x0 = spec.a + k;
            BigComplex t;
            for (int r = 0; r < m; ++r) {
              t += lifted_pole(lambda0 * w[static_cast<std::size_t>(r)], x0 * w[static_cast<std::size_t>(r)], z, L);
            }
            return t;
          },
          hurwitz_strategy(m), prec);
      break;
    }
    case SequenceKind::InterleavedSigned: {
      GammaRatio g(spec.a + spec.b, -ln_gamma(spec.a) - ln_gamma(spec.b));
      out = sum_series(
          [&](std::int64_t k) {
            const BigComplex gk = g.next() * spec.scale;
            const BigComplex lambda = k % 2 == 1 ? gk : -gk;  // 1/F'(a_k)
            return lifted_pole(lambda, (spec.a + k) * spec.scale, z, L) -
                   lifted_pole(lambda, -(spec.b + k) * spec.scale, z, L);
          },
          SummationStrategy::EulerTransform, prec);
      break;
    }
    case SequenceKind::ExplicitFinite: {
      BigComplex acc;
      for (std::int64_t n = 0; n < spec.finite_size(); ++n) {
        for (int r = 0; r < spec.power_m; ++r) {
          acc += lifted_pole(residue_weight(spec, {n, r}, prec), node(spec, {n, r}), z, L);
        }
      }
      out = exact_result(acc, spec.finite_size() * spec.power_m);
      break;
    }
  }
  out.value += head;
  return out;
}

PfdEvaluation pfd_evaluate(const SequenceSpec& spec, int L, const BigComplex& z, const Precision& prec) {
  PfdEvaluation out;
  out.direct = pfd_direct(spec, z, prec);
  out.expansion_series = pfd_expansion(spec, L, z, prec);
  out.expansion = out.expansion_series.value;
  return out;
}

DecompositionResult order_decomposition(const SequenceSpec& spec, int L, std::int64_t nodes, const Precision& prec) {
  require_prec(prec);
  PrecisionScope scope(prec);
  spec.validate();
  if (L < 0 || nodes < 0) {
    throw DomainError("order_decomposition: L and node count must be >= 0");
  }
  DecompositionResult d;
  d.order_L = L;
  for (int j = 0; j < L; ++j) {
    d.head_coeffs.push_back(pfs_coeff(spec, j, prec).value);
  }
  for (std::int64_t i = 0; i < nodes; ++i) {
    const NodeIndex idx{i / spec.power_m, static_cast<int>(i % spec.power_m)};
    if (spec.is_finite() && idx.n >= spec.finite_size()) {
      break;
    }
    d.residue_weights.push_back(residue_weight(spec, idx, prec));
  }
  d.node_count = static_cast<std::int64_t>(d.residue_weights.size());
  return d;
}

namespace {

void require_symmetric(const SequenceSpec& spec) {
  spec.validate();
  if (spec.power_m != 2 || spec.kind == SequenceKind::InterleavedSigned) {
    throw DomainError("differential relation: needs a symmetric (m = 2) Hurwitz or finite spec");
  }
}

}  // namespace

BigComplex node_curvature(const SequenceSpec& spec, std::int64_t k) {
  require_symmetric(spec);
  if (spec.kind == SequenceKind::ArithmeticHurwitz) {
    const BigComplex ak = spec.a + k;
    return (digamma(BigComplex(k + 1)) + inverse(ak) - digamma(spec.a * 2 + k)) * 2;
  }
  // Roots of z prod (1 - z^2/a_n^2) are 0 and +-a_n; G''/G' = 2 sum 1/(a_k - rho).
  const BigComplex& ak = spec.nodes.at(static_cast<std::size_t>(k));
  BigComplex acc = inverse(ak);
  for (std::size_t s = 0; s < spec.nodes.size(); ++s) {
    acc += inverse(ak + spec.nodes[s]);
    if (static_cast<std::int64_t>(s) != k) {
      acc += inverse(ak - spec.nodes[s]);
    }
  }
  return acc * 2;
}

BigComplex differential_lhs(const SequenceSpec& spec, int J, const Precision& prec) {
  trace::mark("engine.differential_lhs");
  require_symmetric(spec);
  if (J < 0) {
    throw DomainError("differential relation: J must be >= 0");
  }
  if (J % 2 == 1) {
    return {};
  }
  const auto p = power_sums(spec, J + 2, prec);
  PrecisionScope scope(prec);
  auto c = [&](int n) { return p[static_cast<std::size_t>(2 * n)] / 2; };
  const int M = J / 2;
  BigComplex lhs = c(M + 1) * (-2 * (2 * M + 3));
  for (int i = 1; i <= M; ++i) {
    lhs += c(i) * c(M + 1 - i) * 4;
  }
  return lhs;
}

SeriesResult differential_rhs(const SequenceSpec& spec, int J, const Precision& prec) {
  trace::mark("engine.differential_rhs");
  require_symmetric(spec);
  require_prec(prec);
  PrecisionScope scope(prec);
  if (J < 0) {
    throw DomainError("differential relation: J must be >= 0");
  }
  if (J % 2 == 1) {
    return exact_result(BigComplex(), 0);
  }
  if (spec.kind == SequenceKind::ExplicitFinite) {
    BigComplex acc;
    for (std::int64_t k = 0; k < spec.finite_size(); ++k) {
      const BigComplex& ak = spec.nodes[static_cast<std::size_t>(k)];
      acc += J == 0 ? pow(ak, -2) * -6 : node_curvature(spec, k) * pow(ak, -(J + 1)) * -2;
    }
    return exact_result(acc, spec.finite_size());
  }
  if (J == 0) {
    auto r = sum_series([&](std::int64_t k) { return pow(spec.a + k, -2) * -6; }, SummationStrategy::Richardson, prec);
    return r;
  }
  // delta_k = 2 (psi(1+k) + 1/(a+k) - psi(2a+k)), both psi advanced by recurrence.
  BigComplex psi_one = digamma(1);
  BigComplex psi_two = digamma(spec.a * 2);
  return sum_series(
      [&](std::int64_t k) {
        const BigComplex ak = spec.a + k;
        const BigComplex delta = (psi_one + inverse(ak) - psi_two) * 2;
        psi_one += BigComplex(BigReal(1) / (k + 1));
        psi_two += inverse(spec.a * 2 + k);
        return delta * pow(ak, -(J + 1)) * -2;
      },
      SummationStrategy::Richardson, prec);
}

DifferentialRelation differential_relation(const SequenceSpec& spec, int J, const Precision& prec) {
  return {differential_lhs(spec, J, prec), differential_rhs(spec, J, prec)};
}

namespace {

/// Complete Bell polynomial Y_n(x_1, ..., x_n); x[i] holds x_{i+1}.
BigComplex complete_bell(const std::vector<BigComplex>& x, int n) {
  std::vector<BigComplex> y(static_cast<std::size_t>(n) + 1);
  y[0] = BigComplex(1);
  for (int k = 0; k < n; ++k) {
    BigComplex acc;
    for (int i = 0; i <= k; ++i) {
      acc += binomial(k, i) * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(k - i)];
    }
    y[static_cast<std::size_t>(k) + 1] = acc;
  }
  return y[static_cast<std::size_t>(n)];
}

}  // namespace

BigComplex log_derivative_ratio(const BigComplex& a, int L, const BigComplex& z) {
  if (L < 0) {
    throw DomainError("log_derivative_ratio: L must be >= 0");
  }
  if (z.is_zero()) {
    throw PoleError("log_derivative_ratio: z = 0 is a zero of G");
  }
  // H^(j)(z) = (-1)^j j!/z^(j+1) - psi^(j)(a+z) + (-1)^j psi^(j)(a-z)
  std::vector<BigComplex> h;
  for (int j = 0; j < L; ++j) {
    const BigComplex pole = factorial(j) * pow(z, -(j + 1));
    const BigComplex back = polygamma(j, a - z);
    h.push_back((j % 2 == 0 ? pole + back : -pole - back) - polygamma(j, a + z));
  }
  return complete_bell(h, L);
}

BigComplex node_derivative_ratio(const BigComplex& a, int L, std::int64_t k) {
  if (L < 1 || k < 0) {
    throw DomainError("node_derivative_ratio: needs L >= 1 and k >= 0");
  }
  // Regular part of H at a_k: the psi(a - z) pole is removed through its
  // expansion about -k (regular value psi^(j)(1+k), minus 2 psi^(j)(1) for odd j).
  const BigComplex ak = a + k;
  std::vector<BigComplex> h;
  for (int j = 0; j + 1 < L; ++j) {
    const BigComplex pole = factorial(j) * pow(ak, -(j + 1));
    BigComplex v = (j % 2 == 0 ? pole : -pole) - polygamma(j, a * 2 + k) + polygamma(j, BigComplex(k + 1));
    if (j % 2 == 1) {
      v -= polygamma(j, 1) * 2;
    }
    h.push_back(v);
  }
  return complete_bell(h, L - 1) * L;
}

}  // namespace pfsum
