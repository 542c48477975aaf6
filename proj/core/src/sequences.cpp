#include "pfsum/sequences.hpp"

#include <map>
#include <mutex>
#include <string>

#include "pfsum/errors.hpp"

namespace pfsum {

std::vector<BigInt> euler_numbers(int n_max) {
  if (n_max < 0 || n_max % 2 != 0) {
    throw DomainError("euler_numbers: n_max must be even and non-negative");
  }
  std::vector<BigInt> e(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  e[0] = 1;
  for (int n = 2; n <= n_max; n += 2) {
    // sum_j C(n, 2j) E_{2j} = 0
    BigInt acc = 0;
    BigInt c = 1;  // C(n, j) updated incrementally
    for (int j = 0; j < n; ++j) {
      if (j % 2 == 0) {
        acc += c * e[static_cast<std::size_t>(j)];
      }
      c = c * (n - j) / (j + 1);
    }
    e[static_cast<std::size_t>(n)] = -acc;
  }
  return e;
}

namespace {

std::mutex g_bernoulli_mutex;
std::vector<BigRational> g_bernoulli{BigRational(1)};

}  // namespace

BigRational bernoulli_exact(int n) {
  if (n < 0) {
    throw DomainError("bernoulli_exact: negative index");
  }
  std::lock_guard lock(g_bernoulli_mutex);
  while (static_cast<int>(g_bernoulli.size()) <= n) {
    const int m = static_cast<int>(g_bernoulli.size());
    if (m > 1 && m % 2 == 1) {
      g_bernoulli.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k
    BigRational acc = 0;
    BigInt c = 1;
    for (int k = 0; k < m; ++k) {
      acc += BigRational(c) * g_bernoulli[static_cast<std::size_t>(k)];
      c = c * (m + 1 - k) / (k + 1);
    }
    g_bernoulli.push_back(-acc / (m + 1));
  }
  return g_bernoulli[static_cast<std::size_t>(n)];
}

BigReal to_bigreal(const BigInt& n) { return BigReal(n.str()); }

BigReal to_bigreal(const BigRational& q) {
  return to_bigreal(boost::multiprecision::numerator(q)) / to_bigreal(boost::multiprecision::denominator(q));
}

BigReal bernoulli_2k(int k) {
  thread_local std::map<long, std::vector<BigReal>> cache;
  auto& values = cache[working_bits()];
  while (static_cast<int>(values.size()) <= k) {
    values.push_back(to_bigreal(bernoulli_exact(2 * static_cast<int>(values.size()))));
  }
  return values[static_cast<std::size_t>(k)];
}

BigReal harmonic(std::int64_t k) {
  if (k < 0) {
    throw DomainError("harmonic: negative index");
  }
  BigReal h;
  for (std::int64_t j = 1; j <= k; ++j) {
    h += BigReal(1) / j;
  }
  return h;
}

BigComplex root_of_unity(int m, long r) {
  if (m < 1) {
    throw DomainError("root_of_unity: m must be >= 1");
  }
  r %= m;
  if (r < 0) {
    r += m;
  }
  if ((12 * r) % m == 0) {
    const long k = 12 * r / m;
    const BigReal half = BigReal::ratio(1, 2);
    const BigReal s3 = sqrt(BigReal(3)) / 2;
    auto c = [&](long idx) -> BigReal {
      switch (((idx % 12) + 12) % 12) {
        case 0: return BigReal(1);
        case 1: return s3;
        case 2: return half;
        case 3: return BigReal(0);
        case 4: return -half;
        case 5: return -s3;
        case 6: return BigReal(-1);
        case 7: return -s3;
        case 8: return -half;
        case 9: return BigReal(0);
        case 10: return half;
        default: return s3;
      }
    };
    return {c(k), c(k - 3)};
  }
  const BigReal theta = 2 * BigReal::pi() * r / m;
  return {cos(theta), sin(theta)};
}

BigReal double_factorial_ratio(std::int64_t k) {
  if (k < 1) {
    throw DomainError("double_factorial_ratio: k must be >= 1");
  }
  BigReal r(1);
  for (std::int64_t j = 1; j < k; ++j) {
    r *= BigReal(2 * j + 1) / (2 * j);
  }
  return r;
}

BigReal binomial(long n, long k) {
  if (k < 0 || k > n) {
    return BigReal(0);
  }
  BigReal c(1);
  for (long j = 0; j < k; ++j) {
    c = c * (n - j) / (j + 1);
  }
  return c;
}

BigReal factorial(long n) {
  BigReal f(1);
  for (long j = 2; j <= n; ++j) {
    f *= BigReal(j);
  }
  return f;
}

}  // namespace pfsum
