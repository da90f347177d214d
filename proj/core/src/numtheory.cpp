#include "chtg/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chtg::exact {

std::vector<std::pair<long long, int>> factorize(long long x) {
    if (x < 1) throw std::invalid_argument("factorize: x must be positive");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= x; p += (p == 2 ? 1 : 2)) {
        if (x % p != 0) continue;
        int e = 0;
        while (x % p == 0) { x /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (x > 1) out.emplace_back(x, 1);
    return out;
}

std::vector<long long> divisors(long long x) {
    std::vector<long long> out{1};
    for (const auto& [p, e] : factorize(x)) {
        const std::size_t base = out.size();
        long long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long euler_phi(long long x) {
    long long phi = x;
    for (const auto& [p, e] : factorize(x)) phi = phi / p * (p - 1);
    return phi;
}

int moebius(long long x) {
    int mu = 1;
    for (const auto& [p, e] : factorize(x)) {
        if (e >= 2) return 0;
        mu = -mu;
    }
    return mu;
}

long long extend_residue(long long k, long long n, long long N) {
    if (n < 1 || N < 1 || N % n != 0)
        throw std::invalid_argument("extend_residue: need 1 <= n and n | N");
    if (std::gcd(k % n, n) != 1)
        throw std::invalid_argument("extend_residue: gcd(k, n) != 1");
    long long c = ((k % n) + n) % n;
    if (c == 0) c = n;  // only for n = 1
    while (std::gcd(c, N) != 1) c += n;
    return c;
}

}  // namespace chtg::exact
