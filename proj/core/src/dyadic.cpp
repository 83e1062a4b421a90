#include "collatz3k/dyadic.hpp"

#include <algorithm>
#include <utility>

#include "collatz3k/errors.hpp"

namespace collatz3k {

DyadicRational::DyadicRational(mpz_class numerator, std::uint64_t den_exp)
    : num_(std::move(numerator)), den_exp_(den_exp) {
  normalize();
}

void DyadicRational::normalize() {
  if (num_ == 0) {
    den_exp_ = 0;
    return;
  }
  if (den_exp_ == 0) return;
  // mpz_scan1 sees two's complement, so this is the 2-adic valuation for
  // negative numerators as well.
  const std::uint64_t v2 = mpz_scan1(num_.get_mpz_t(), 0);
  const std::uint64_t shift = std::min(v2, den_exp_);
  if (shift > 0) {
    mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    den_exp_ -= shift;
  }
}

mpz_class DyadicRational::to_integer() const {
  if (den_exp_ != 0)
    throw NonIntegerResultError("dyadic value " + to_string() +
                                " is not an integer");
  return num_;
}

DyadicRational DyadicRational::operator-() const {
  DyadicRational r = *this;
  mpz_neg(r.num_.get_mpz_t(), r.num_.get_mpz_t());
  return r;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& rhs) {
  const std::uint64_t e = std::max(den_exp_, rhs.den_exp_);
  mpz_mul_2exp(num_.get_mpz_t(), num_.get_mpz_t(), e - den_exp_);
  mpz_class other;
  mpz_mul_2exp(other.get_mpz_t(), rhs.num_.get_mpz_t(), e - rhs.den_exp_);
  num_ += other;
  den_exp_ = e;
  normalize();
  return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& rhs) {
  return *this += -rhs;
}

DyadicRational& DyadicRational::operator*=(const DyadicRational& rhs) {
  num_ *= rhs.num_;
  den_exp_ += rhs.den_exp_;
  normalize();
  return *this;
}

DyadicRational DyadicRational::times_pow2(std::int64_t e) const {
  DyadicRational r = *this;
  if (r.num_ == 0) return r;
  if (e >= 0) {
    const std::uint64_t up = static_cast<std::uint64_t>(e);
    if (up >= r.den_exp_) {
      mpz_mul_2exp(r.num_.get_mpz_t(), r.num_.get_mpz_t(), up - r.den_exp_);
      r.den_exp_ = 0;
    } else {
      r.den_exp_ -= up;
    }
  } else {
    r.den_exp_ += static_cast<std::uint64_t>(-e);
  }
  r.normalize();
  return r;
}

std::string DyadicRational::to_string() const {
  if (den_exp_ == 0) return num_.get_str();
  return num_.get_str() + "/2^" + std::to_string(den_exp_);
}

}  // namespace collatz3k
