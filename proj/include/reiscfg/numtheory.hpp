#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace reiscfg {

// Arbitrary-precision nonnegative count. All final results of the counting
// operations live here; exactness is non-negotiable (no floating point
// anywhere in the library).
using BigCount = boost::multiprecision::cpp_int;

// Invalid argument for an operation (out-of-domain n, k, m, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exactness assertion failed (a divisibility or half-integer cancellation
// that the theory guarantees did not hold) — signals an implementation bug,
// never a caller error.
struct IntegralityError : std::logic_error {
    using std::logic_error::logic_error;
};

// Floor division (the formulas here floor negative numerators; C++ '/'
// truncates toward zero instead, which would silently change exponents).
constexpr long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// All divisors of n in increasing order. Rejects n < 1.
std::vector<long long> divisors(long long n);

// Euler totient. Rejects n < 1.
BigCount euler_phi(long long n);

// Moebius function: 0 on non-squarefree, else (-1)^(#prime factors).
int mobius(long long n);

// Binomial coefficient with the 0-outside convention: C(a,b) = 0 whenever
// b < 0, a < 0 or b > a. Total function, exact.
BigCount binomial(long long a, long long b);

long long gcd_ll(long long a, long long b);

}  // namespace reiscfg
