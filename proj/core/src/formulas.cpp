#include "collatz3k/formulas.hpp"

#include <stdexcept>
#include <string>

#include "collatz3k/errors.hpp"

namespace collatz3k {

namespace {

void validate_profile(const OddEvenProfile& p, const char* who) {
  if (p.d.size() != p.m + 1)
    throw std::invalid_argument(std::string(who) +
                                ": profile needs m+1 run lengths");
  if (p.m > p.l)
    throw std::invalid_argument(std::string(who) +
                                ": profile has more odd terms than terms");
  std::uint64_t sum = 0;
  for (auto v : p.d) sum += v;
  if (sum != p.l - p.m)
    throw std::invalid_argument(std::string(who) +
                                ": even runs must sum to l - m");
}

void require_positive(const Natural& n, const char* who) {
  if (n <= 0) throw std::invalid_argument(std::string(who) + ": n must be positive");
}

std::string describe(const Natural& n, const Params& params,
                     const OddEvenProfile& p) {
  return "n=" + to_decimal(n) + " k=" + std::to_string(params.k()) +
         " l=" + std::to_string(p.l) + " m=" + std::to_string(p.m);
}

}  // namespace

int epsilon_flag(const OddEvenProfile& profile) {
  return profile.m == 0 ? 0 : 1;
}

DyadicRational epsilon_sum(const OddEvenProfile& profile) {
  validate_profile(profile, "epsilon_sum");
  DyadicRational s;
  const DyadicRational three(3), one(1);
  for (std::uint64_t i = 1; i <= profile.m; ++i) {
    s = s * three + one;
    s = s.times_pow2(-static_cast<std::int64_t>(profile.d[i]));
  }
  return s;
}

DyadicRational epsilon_sum_direct(const OddEvenProfile& profile) {
  validate_profile(profile, "epsilon_sum_direct");
  DyadicRational s;
  std::uint64_t suffix = 0;  // d_j + ... + d_m
  for (std::uint64_t j = profile.m; j >= 1; --j) {
    suffix += profile.d[j];
    s += DyadicRational(pow3(profile.m - j), suffix);
  }
  return s;
}

Natural eval_term_formula(const Natural& n, const Params& params,
                          const OddEvenProfile& profile) {
  require_positive(n, "eval_term_formula");
  validate_profile(profile, "eval_term_formula");
  // (3^m / 2^(l-m)) * n + 3^k * eps * S
  DyadicRational value(pow3(profile.m) * n, profile.l - profile.m);
  if (profile.m > 0)
    value += DyadicRational(params.addend()) * epsilon_sum(profile);
  if (!value.is_integer())
    throw NonIntegerResultError("term formula gives non-integer " +
                                value.to_string() + " for " +
                                describe(n, params, profile));
  return value.to_integer();
}

std::uint64_t total_stopping_time_formula(const Natural& n,
                                          const Params& params,
                                          const OddEvenProfile& profile) {
  require_positive(n, "total_stopping_time_formula");
  validate_profile(profile, "total_stopping_time_formula");
  const DyadicRational one_minus_s = DyadicRational(1) - epsilon_sum(profile);
  if (one_minus_s.is_zero())
    throw DivisionByZeroError("stopping-time formula: 1 - S = 0 for " +
                              describe(n, params, profile));

  // t = log2( 2^m * 3^m * n / (3^k * (1 - S)) ), evaluated exactly: with
  // 1 - S = p / 2^q the quotient is (3^m * n * 2^(m+q)) / (3^k * p).
  Natural num = pow3(profile.m) * n;
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(),
               profile.m + one_minus_s.den_exp());
  const Natural den = params.addend() * one_minus_s.numerator();
  if (den < 0 || mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
    throw NotPowerOfTwoError("stopping-time formula: ratio is not a power of two for " +
                             describe(n, params, profile));
  Natural q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (q <= 0 || mpz_popcount(q.get_mpz_t()) != 1)
    throw NotPowerOfTwoError("stopping-time formula: " + to_decimal(q) +
                             " is not a power of two for " +
                             describe(n, params, profile));
  return mpz_scan1(q.get_mpz_t(), 0);
}

Natural same_time_partner(const Natural& n1, const OddEvenProfile& profile1,
                          const OddEvenProfile& profile2,
                          const Params& params) {
  require_positive(n1, "same_time_partner");
  validate_profile(profile1, "same_time_partner");
  validate_profile(profile2, "same_time_partner");
  const DyadicRational a = DyadicRational(1) - epsilon_sum(profile1);
  const DyadicRational b = DyadicRational(1) - epsilon_sum(profile2);
  if (a.is_zero())
    throw DivisionByZeroError("same_time_partner: 1 - S = 0 for " +
                              describe(n1, params, profile1));

  // n2 = n1 * 2^m1 * 3^m1 * (1 - S2) / (2^m2 * 3^m2 * (1 - S1))
  Natural num = n1 * pow3(profile1.m) * b.numerator();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), profile1.m + a.den_exp());
  Natural den = pow3(profile2.m) * a.numerator();
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), profile2.m + b.den_exp());
  if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
    throw NonIntegerResultError("same_time_partner: result is not an integer for n1=" +
                                to_decimal(n1));
  Natural n2;
  mpz_divexact(n2.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (n2 <= 0)
    throw NonIntegerResultError("same_time_partner: result " + to_decimal(n2) +
                                " is not positive for n1=" + to_decimal(n1));
  return n2;
}

Natural k0_term_formula(const Natural& n, const OddEvenProfile& profile) {
  return eval_term_formula(n, Params(0), profile);
}

}  // namespace collatz3k
