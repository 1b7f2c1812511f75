#pragma once

#include "reiscfg/numtheory.hpp"

namespace reiscfg {

// The two m-parameterized Fibonacci-like families sharing the recursion
// x_n = x_{n-1} + x_{n-m-1} with different initial blocks. m >= 1 always;
// m = 0 is rejected (no consistent extension exists — see the identity
// "no_m0_extension"). Index domain n >= 0.

// Type 1: initial block all ones, x_0 = ... = x_m = 1.
BigCount fib_type1(long long m, long long n);

// Type 1 with the empty-configuration convention: 0 for n < 0. Counting
// operations use this for terms whose index falls below the domain (the
// corresponding configuration set is empty).
BigCount fib_type1_or_zero(long long m, long long n);

// Type 2: initial block 1,...,1,2,...,2 switching after index floor((m-1)/2),
// x_i = 1 for i <= floor((m-1)/2), x_i = 2 for floor((m-1)/2) < i <= m.
BigCount fib_type2(long long m, long long n);

// Independent closed evaluators, used by the property/identity suites only
// (a bug in the recursion cannot hide in the sums and vice versa).

// sum_k C(n - m*k, k).
BigCount fib_type1_binomial(long long m, long long n);

// Corrected closed form, valid for every m >= 1:
//   sum_k [ C(n - m*k, k) + C(n - ceil(m/2) - m*k, k) ],
// equivalently fib_type1(m,n) + fib_type1_or_zero(m, n - ceil(m/2)).
BigCount fib_type2_binomial(long long m, long long n);

// The historically stated closed form (parity-split). Wrong for every even m
// and for odd m >= 3; kept so the identity suite can demonstrate the defect.
BigCount fib_type2_binomial_printed(long long m, long long n);

// The historically stated odd-m shift, fib_type1(m, n + (m+1)/2). Only valid
// at m = 1; kept for the same demonstration purpose. Requires odd m.
BigCount fib_type2_shift_printed(long long m, long long n);

}  // namespace reiscfg
