#pragma once

#include <cstdint>

#include "collatz3k/dyadic.hpp"
#include "collatz3k/dynamics.hpp"
#include "collatz3k/natural.hpp"
#include "collatz3k/params.hpp"

namespace collatz3k {

// 0 when the profile contains no odd term, 1 otherwise. Keeping this an
// explicit value (rather than folding it into the sum, which is empty and
// already zero for m = 0) mirrors how the closed forms are stated and lets
// tests pin the m = 0 degeneracy on its own.
int epsilon_flag(const OddEvenProfile& profile);

// The correction sum S = sum_{j=1..m} 3^(m-j) / 2^(d_j + ... + d_m),
// evaluated by the Horner-style recurrence S <- (3S + 1) / 2^(d_i).
// Exact; returns zero for m = 0.
DyadicRational epsilon_sum(const OddEvenProfile& profile);

// Reference evaluation of the same sum, term by term. Kept as a second,
// independent route for tests; not used by the fast path.
DyadicRational epsilon_sum_direct(const OddEvenProfile& profile);

// Closed form for the l-th term of the orbit of n:
//   (3^m / 2^(l-m)) * n + 3^k * eps * S.
// The profile must describe the first l terms of that orbit; a structurally
// valid but mismatched profile throws NonIntegerResultError whenever the
// value fails to be an integer.
Natural eval_term_formula(const Natural& n, const Params& params,
                          const OddEvenProfile& profile);

// Total stopping time recovered from the profile of the full orbit:
// t = log2(2^m * 3^m * n / (3^k * (1 - eps*S))), computed exactly — the
// quotient must be a positive power of two. Throws DivisionByZeroError when
// S = 1 and NotPowerOfTwoError when the quotient is not such a power.
std::uint64_t total_stopping_time_formula(const Natural& n,
                                          const Params& params,
                                          const OddEvenProfile& profile);

// Given the full-orbit profiles of n1 and of a second value with the same
// total stopping time, returns that second value:
//   n2 = (2^m1 * 3^m1 * (1 - eps2*S2)) / (2^m2 * 3^m2 * (1 - eps1*S1)) * n1.
// With m1 = m2 = 0 this degenerates to n2 = n1. Throws
// DivisionByZeroError when S1 = 1, NonIntegerResultError when the result
// is not a positive integer.
Natural same_time_partner(const Natural& n1, const OddEvenProfile& profile1,
                          const OddEvenProfile& profile2,
                          const Params& params);

// k = 0 specialization of the term formula (the plain 3n+1 map).
Natural k0_term_formula(const Natural& n, const OddEvenProfile& profile);

}  // namespace collatz3k
