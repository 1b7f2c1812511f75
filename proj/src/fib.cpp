#include "reiscfg/fib.hpp"

namespace reiscfg {

namespace {

void require_domain(long long m, long long n) {
    if (m < 1) throw DomainError("fib: m must be >= 1 (no m = 0 extension exists)");
    if (n < 0) throw DomainError("fib: n must be >= 0");
}

BigCount run_recursion(long long m, long long n, long long ones_through) {
    std::vector<BigCount> v;
    v.reserve(static_cast<size_t>(std::max(n, m) + 1));
    for (long long i = 0; i <= m; ++i) v.emplace_back(i <= ones_through ? 1 : 2);
    for (long long i = m + 1; i <= n; ++i) v.push_back(v[i - 1] + v[i - m - 1]);
    return v[static_cast<size_t>(n)];
}

}  // namespace

BigCount fib_type1(long long m, long long n) {
    require_domain(m, n);
    return run_recursion(m, n, m);  // all-ones initial block
}

BigCount fib_type1_or_zero(long long m, long long n) {
    return n < 0 ? BigCount(0) : fib_type1(m, n);
}

BigCount fib_type2(long long m, long long n) {
    require_domain(m, n);
    return run_recursion(m, n, (m - 1) / 2);
}

BigCount fib_type1_binomial(long long m, long long n) {
    require_domain(m, n);
    BigCount s = 0;
    for (long long k = 0; n - m * k >= 0; ++k) s += binomial(n - m * k, k);
    return s;
}

BigCount fib_type2_binomial(long long m, long long n) {
    require_domain(m, n);
    long long half_up = (m + 1) / 2;  // ceil(m/2)
    BigCount s = 0;
    for (long long k = 0; n - m * k >= 0; ++k)
        s += binomial(n - m * k, k) + binomial(n - half_up - m * k, k);
    return s;
}

BigCount fib_type2_binomial_printed(long long m, long long n) {
    require_domain(m, n);
    BigCount s = 0;
    if (m % 2 == 1) {
        for (long long k = 0; k <= n + 1; ++k) s += binomial(n + (m + 1) / 2 - m * k, k);
    } else {
        for (long long k = 0; k <= n + 1; ++k) s += binomial(n + m / 2 - (m - 1) * k, k);
    }
    return s;
}

BigCount fib_type2_shift_printed(long long m, long long n) {
    require_domain(m, n);
    if (m % 2 == 0) throw DomainError("fib_type2_shift_printed: stated for odd m only");
    return fib_type1(m, n + (m + 1) / 2);
}

}  // namespace reiscfg
