#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace chtg::exact {

/// Prime factorization by trial division, (prime, exponent) pairs in
/// ascending prime order. Intended range: x <= 10^12 or so.
std::vector<std::pair<long long, int>> factorize(long long x);

/// All positive divisors of x, ascending.
std::vector<long long> divisors(long long x);

/// Euler totient: #{1 <= k <= x : gcd(k, x) = 1}.
long long euler_phi(long long x);

/// Moebius function, in {-1, 0, 1}; equals the sum of the primitive
/// x-th roots of unity.
int moebius(long long x);

/// Smallest positive k' with k' == k (mod n) and gcd(k', N) = 1.
/// Requires n | N and gcd(k, n) = 1.
long long extend_residue(long long k, long long n, long long N);

}  // namespace chtg::exact
