#include "reiscfg/numtheory.hpp"

#include <numeric>

namespace reiscfg {

std::vector<long long> divisors(long long n) {
    if (n < 1) throw DomainError("divisors: n must be >= 1");
    std::vector<long long> small, large;
    for (long long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            small.push_back(i);
            if (i != n / i) large.push_back(n / i);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

BigCount euler_phi(long long n) {
    if (n < 1) throw DomainError("euler_phi: n must be >= 1");
    long long r = n, m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            r -= r / p;
        }
    }
    if (m > 1) r -= r / m;
    return BigCount(r);
}

int mobius(long long n) {
    if (n < 1) throw DomainError("mobius: n must be >= 1");
    int factors = 0;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            ++factors;
        }
    }
    if (m > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

BigCount binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return BigCount(0);
    if (b > a - b) b = a - b;
    BigCount r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i;  // exact at every step: r is C(a-b+i, i)
    }
    return r;
}

long long gcd_ll(long long a, long long b) {
    return std::gcd(a, b);
}

}  // namespace reiscfg
