#pragma once

#include "collatz3k/natural.hpp"

namespace collatz3k {

// Parameters of the map g_k: even values are halved, odd n goes to
// 3n + 3^k. The additive constant and the terminal value are the same
// power of three, precomputed once.
class Params {
 public:
  explicit Params(unsigned k) : k_(k), pow3k_(pow3(k)) {}

  unsigned k() const { return k_; }
  const Natural& addend() const { return pow3k_; }
  const Natural& target() const { return pow3k_; }

 private:
  unsigned k_;
  Natural pow3k_;
};

}  // namespace collatz3k
