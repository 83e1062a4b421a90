#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace collatz3k {

// Arbitrary-precision non-negative integer. mpz_class is signed; the
// library's entry points reject negative inputs and never produce them.
using Natural = mpz_class;

Natural pow2(std::uint64_t e);
Natural pow3(std::uint64_t e);

bool is_even(const Natural& n);
bool is_odd(const Natural& n);

// Bits in the binary representation; 0 for n = 0.
std::uint64_t bit_length(const Natural& n);

// Default per-value step budget: 10 * bit_length(n)^2 + 10^4. Generous for
// every value whose orbit is known to terminate, while still bounding
// runaway iteration on huge inputs.
std::uint64_t default_step_budget(const Natural& n);

// Accepts plain decimal ("123") or a power-of-two expression of the form
// [M*]2^E[+D|-D], e.g. "2^1000-1", "9*2^64", "3*2^7+5". Throws
// std::invalid_argument on malformed text or a negative value.
Natural parse_natural(const std::string& text);

std::string to_decimal(const Natural& n);

}  // namespace collatz3k
