#include "collatz3k/dynamics.hpp"

#include <bit>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

namespace collatz3k {

namespace {

void require_positive(const Natural& n, const char* who) {
  if (n <= 0) throw std::invalid_argument(std::string(who) + ": n must be positive");
}

void step_inplace(Natural& x, const Params& params) {
  if (mpz_even_p(x.get_mpz_t())) {
    mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
  } else {
    x *= 3;
    x += params.addend();
  }
}

}  // namespace

Natural step(const Natural& n, const Params& params) {
  require_positive(n, "step");
  Natural r = n;
  step_inplace(r, params);
  return r;
}

Trajectory trajectory(const Natural& n, const Params& params,
                      std::uint64_t budget) {
  require_positive(n, "trajectory");
  Trajectory out;
  out.start = n;
  out.k = params.k();
  out.terms.push_back(n);
  if (n == params.target()) {
    out.status = TerminationStatus::ReachedTarget;
    out.stopping_time = 0;
    return out;
  }

  std::set<Natural> seen;
  seen.insert(n);
  Natural cur = n;
  for (std::uint64_t s = 1; s <= budget; ++s) {
    step_inplace(cur, params);
    out.terms.push_back(cur);
    if (cur == params.target()) {
      out.status = TerminationStatus::ReachedTarget;
      out.stopping_time = s;
      return out;
    }
    if (!seen.insert(cur).second) {
      out.status = TerminationStatus::CycleWithoutTarget;
      return out;
    }
  }
  out.status = TerminationStatus::BudgetExhausted;
  return out;
}

TrajectorySummary stream_trajectory(const Natural& n, const Params& params,
                                    std::uint64_t budget) {
  require_positive(n, "stream_trajectory");
  TrajectorySummary out;
  out.peak_bits = bit_length(n);
  out.odd_count = is_odd(n) ? 1 : 0;
  if (n == params.target()) {
    out.status = TerminationStatus::ReachedTarget;
    out.stopping_time = 0;
    return out;
  }

  const bool word_addend = mpz_fits_ulong_p(params.addend().get_mpz_t()) != 0;
  const std::uint64_t addend_w =
      word_addend ? mpz_get_ui(params.addend().get_mpz_t()) : 0;
  const std::uint64_t target_w = addend_w;  // addend and target coincide
  const std::uint64_t overflow_at =
      word_addend ? (std::numeric_limits<std::uint64_t>::max() - addend_w) / 3
                  : 0;

  std::uint64_t s = 0;
  bool in_words = word_addend && mpz_fits_ulong_p(n.get_mpz_t()) != 0;
  std::uint64_t cur_w = in_words ? mpz_get_ui(n.get_mpz_t()) : 0;
  std::uint64_t prev1_w = 0, prev2_w = 0;

  // Big-integer state lives in a ring of three values so advancing never
  // copies a limb array: the oldest slot is overwritten with the new term.
  Natural ring[3];
  int ci = 0, pi1 = 1, pi2 = 2;
  if (!in_words) ring[ci] = n;

  auto word_reached = [&]() {
    out.status = TerminationStatus::ReachedTarget;
    out.stopping_time = s;
    out.steps_used = s;
    if (s >= 2) out.entry_predecessor = Natural(static_cast<unsigned long>(prev2_w));
  };

  while (s < budget) {
    if (in_words) {
      while (s < budget) {
        std::uint64_t next;
        if (cur_w & 1) {
          if (cur_w > overflow_at) break;  // escalate
          next = 3 * cur_w + addend_w;
        } else {
          next = cur_w >> 1;
        }
        prev2_w = prev1_w;
        prev1_w = cur_w;
        cur_w = next;
        ++s;
        out.odd_count += cur_w & 1;
        out.peak_bits = std::max<std::uint64_t>(out.peak_bits, std::bit_width(cur_w));
        if (cur_w == target_w) {
          word_reached();
          return out;
        }
      }
      if (s >= budget) break;
      ring[0] = static_cast<unsigned long>(cur_w);
      ring[1] = static_cast<unsigned long>(prev1_w);
      ring[2] = static_cast<unsigned long>(prev2_w);
      ci = 0;
      pi1 = 1;
      pi2 = 2;
      in_words = false;
    }

    while (s < budget) {
      const int dst = pi2;  // oldest slot
      const Natural& c = ring[ci];
      if (mpz_odd_p(c.get_mpz_t())) {
        mpz_mul_ui(ring[dst].get_mpz_t(), c.get_mpz_t(), 3);
        mpz_add(ring[dst].get_mpz_t(), ring[dst].get_mpz_t(),
                params.addend().get_mpz_t());
      } else {
        mpz_tdiv_q_2exp(ring[dst].get_mpz_t(), c.get_mpz_t(), 1);
      }
      pi2 = pi1;
      pi1 = ci;
      ci = dst;
      ++s;
      const Natural& now = ring[ci];
      out.odd_count += mpz_odd_p(now.get_mpz_t()) ? 1 : 0;
      out.peak_bits = std::max<std::uint64_t>(out.peak_bits, bit_length(now));
      if (now == params.target()) {
        out.status = TerminationStatus::ReachedTarget;
        out.stopping_time = s;
        out.steps_used = s;
        if (s >= 2) out.entry_predecessor = ring[pi2];
        return out;
      }
      // Drop back to machine words once the whole prev window fits again.
      if (word_addend && mpz_fits_ulong_p(now.get_mpz_t()) &&
          mpz_fits_ulong_p(ring[pi1].get_mpz_t()) &&
          mpz_fits_ulong_p(ring[pi2].get_mpz_t())) {
        cur_w = mpz_get_ui(now.get_mpz_t());
        prev1_w = mpz_get_ui(ring[pi1].get_mpz_t());
        prev2_w = mpz_get_ui(ring[pi2].get_mpz_t());
        in_words = true;
        break;
      }
    }
  }

  out.status = TerminationStatus::BudgetExhausted;
  out.steps_used = budget;
  return out;
}

OddEvenProfile parity_profile(const Trajectory& traj, std::uint64_t l) {
  if (l < 1 || l > traj.terms.size())
    throw std::invalid_argument("parity_profile: need 1 <= l <= #terms");
  OddEvenProfile p;
  p.l = l;
  p.d.push_back(0);
  for (std::uint64_t i = 0; i < l; ++i) {
    if (is_odd(traj.terms[i])) {
      ++p.m;
      p.d.push_back(0);
    } else {
      ++p.d.back();
    }
  }
  return p;
}

std::uint64_t three_adic_valuation(const Natural& n) {
  require_positive(n, "three_adic_valuation");
  Natural reduced;
  const Natural three = 3;
  return mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), three.get_mpz_t());
}

CycleReport detect_cycle(const Natural& n, const Params& params,
                         std::uint64_t budget) {
  require_positive(n, "detect_cycle");
  CycleReport rep;
  std::uint64_t used = 0;
  auto advance = [&](Natural& x) {
    if (used >= budget) return false;
    step_inplace(x, params);
    ++used;
    return true;
  };
  auto spent = [&]() {
    rep.steps_used = used;
    return rep;
  };

  // Phase 1: cycle length.
  std::uint64_t power = 1, lam = 1;
  Natural tortoise = n;
  Natural hare = n;
  if (!advance(hare)) return spent();
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    if (!advance(hare)) return spent();
    ++lam;
  }

  // Phase 2: entry point — re-run both heads lam apart.
  tortoise = n;
  hare = n;
  for (std::uint64_t i = 0; i < lam; ++i)
    if (!advance(hare)) return spent();
  while (tortoise != hare) {
    if (!advance(tortoise)) return spent();
    if (!advance(hare)) return spent();
  }

  rep.members.reserve(lam);
  rep.members.push_back(tortoise);
  Natural cur = tortoise;
  for (std::uint64_t i = 1; i < lam; ++i) {
    if (!advance(cur)) return spent();
    rep.members.push_back(cur);
  }
  rep.found = true;
  rep.length = lam;
  rep.steps_used = used;
  return rep;
}

std::string_view to_string(TerminationStatus status) {
  switch (status) {
    case TerminationStatus::ReachedTarget:
      return "reached_target";
    case TerminationStatus::BudgetExhausted:
      return "budget_exhausted";
    case TerminationStatus::CycleWithoutTarget:
      return "cycle_without_target";
  }
  return "unknown";
}

}  // namespace collatz3k
