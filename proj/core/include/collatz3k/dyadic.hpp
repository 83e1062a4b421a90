#pragma once

#include <cstdint>
#include <string>

#include "collatz3k/natural.hpp"

namespace collatz3k {

// Exact rational with a power-of-two denominator: value = num / 2^den_exp.
// Canonical form keeps num odd (or zero with den_exp 0), so representations
// are unique and integrality is simply den_exp == 0. All arithmetic is
// exact; there is no rounding path anywhere.
class DyadicRational {
 public:
  DyadicRational() = default;  // zero
  explicit DyadicRational(mpz_class numerator, std::uint64_t den_exp = 0);

  static DyadicRational zero() { return DyadicRational(); }
  static DyadicRational one() { return DyadicRational(1); }

  const mpz_class& numerator() const { return num_; }
  std::uint64_t den_exp() const { return den_exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_exp_ == 0; }
  int sign() const { return sgn(num_); }

  // Throws NonIntegerResultError when the value is not an integer.
  mpz_class to_integer() const;

  DyadicRational operator-() const;
  DyadicRational& operator+=(const DyadicRational& rhs);
  DyadicRational& operator-=(const DyadicRational& rhs);
  DyadicRational& operator*=(const DyadicRational& rhs);
  friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) {
    a += b;
    return a;
  }
  friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) {
    a -= b;
    return a;
  }
  friend DyadicRational operator*(DyadicRational a, const DyadicRational& b) {
    a *= b;
    return a;
  }

  // Multiply by 2^e; e may be negative.
  DyadicRational times_pow2(std::int64_t e) const;

  bool operator==(const DyadicRational&) const = default;

  // "p" for integers, "p/2^q" otherwise.
  std::string to_string() const;

 private:
  void normalize();

  mpz_class num_ = 0;
  std::uint64_t den_exp_ = 0;
};

}  // namespace collatz3k
