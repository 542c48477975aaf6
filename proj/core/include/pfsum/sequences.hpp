#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "pfsum/bigcomplex.hpp"
#include "pfsum/bigreal.hpp"

namespace pfsum {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Euler numbers E_0..E_{n_max} (exact). Odd entries are zero.
/// Throws DomainError unless n_max is even and non-negative.
std::vector<BigInt> euler_numbers(int n_max);

/// Exact Bernoulli number B_n (B_1 = -1/2). Cached process-wide.
BigRational bernoulli_exact(int n);

/// B_{2k} at the working precision.
BigReal bernoulli_2k(int k);

/// H_k = 1 + 1/2 + ... + 1/k, H_0 = 0.
BigReal harmonic(std::int64_t k);

/// e^{2 pi i r / m}; exact at multiples of 30 degrees.
BigComplex root_of_unity(int m, long r);

/// (2k-1)!! / (2k-2)!! as the running product prod_{j<k} (2j+1)/(2j).
BigReal double_factorial_ratio(std::int64_t k);

/// Binomial coefficient as a BigReal.
BigReal binomial(long n, long k);

/// n! as a BigReal.
BigReal factorial(long n);

BigReal to_bigreal(const BigRational& q);
BigReal to_bigreal(const BigInt& n);

}  // namespace pfsum
