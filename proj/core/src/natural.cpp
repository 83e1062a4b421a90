#include "collatz3k/natural.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace collatz3k {

namespace {

constexpr std::uint64_t kMaxExponent = 100'000'000;  // keeps allocations sane

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::uint64_t parse_exponent(const std::string& s) {
  if (!all_digits(s)) throw std::invalid_argument("exponent must be decimal digits");
  std::uint64_t value = 0;
  for (char c : s) {
    if (value > (std::numeric_limits<std::uint64_t>::max() - 9) / 10)
      throw std::invalid_argument("exponent out of range");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (value > kMaxExponent) throw std::invalid_argument("exponent too large");
  return value;
}

Natural parse_decimal(const std::string& s) {
  if (!all_digits(s)) throw std::invalid_argument("expected a decimal integer: '" + s + "'");
  return Natural(s, 10);
}

}  // namespace

Natural pow2(std::uint64_t e) {
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Natural pow3(std::uint64_t e) {
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

bool is_even(const Natural& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

bool is_odd(const Natural& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

std::uint64_t bit_length(const Natural& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::uint64_t default_step_budget(const Natural& n) {
  const std::uint64_t bits = bit_length(n);
  std::uint64_t sq = 0;
  if (__builtin_mul_overflow(bits, bits, &sq))
    return std::numeric_limits<std::uint64_t>::max();
  std::uint64_t scaled = 0;
  if (__builtin_mul_overflow(sq, std::uint64_t{10}, &scaled))
    return std::numeric_limits<std::uint64_t>::max();
  std::uint64_t budget = 0;
  if (__builtin_add_overflow(scaled, std::uint64_t{10'000}, &budget))
    return std::numeric_limits<std::uint64_t>::max();
  return budget;
}

Natural parse_natural(const std::string& text) {
  const auto caret = text.find('^');
  if (caret == std::string::npos) return parse_decimal(text);

  // [M*]2^E[+D|-D]
  if (caret == 0 || text[caret - 1] != '2')
    throw std::invalid_argument("only base-2 exponent expressions are supported: '" + text + "'");
  const auto base_pos = caret - 1;

  Natural multiplier = 1;
  if (base_pos > 0) {
    if (text[base_pos - 1] != '*')
      throw std::invalid_argument("expected '*' before the power: '" + text + "'");
    multiplier = parse_decimal(text.substr(0, base_pos - 1));
  }

  auto rest = text.substr(caret + 1);
  std::size_t sign_pos = rest.find_first_of("+-");
  int offset_sign = 0;
  Natural offset = 0;
  std::string exp_text = rest;
  if (sign_pos != std::string::npos) {
    offset_sign = rest[sign_pos] == '+' ? 1 : -1;
    exp_text = rest.substr(0, sign_pos);
    offset = parse_decimal(rest.substr(sign_pos + 1));
  }

  Natural value = multiplier * pow2(parse_exponent(exp_text));
  if (offset_sign > 0) value += offset;
  if (offset_sign < 0) value -= offset;
  if (value < 0) throw std::invalid_argument("value is negative: '" + text + "'");
  return value;
}

std::string to_decimal(const Natural& n) { return n.get_str(); }

}  // namespace collatz3k
