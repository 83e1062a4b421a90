#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "collatz3k/dynamics.hpp"
#include "collatz3k/natural.hpp"
#include "collatz3k/params.hpp"

using namespace collatz3k;

TEST_CASE("step applies the map") {
  const Params k0(0);
  CHECK(step(Natural(1), k0) == 4);
  CHECK(step(Natural(4), k0) == 2);
  CHECK(step(Natural(10), k0) == 5);
  const Params k2(2);
  CHECK(step(Natural(7), k2) == 30);
  CHECK(step(Natural(9), k2) == 36);
  CHECK_THROWS_AS(step(Natural(0), k0), std::invalid_argument);
}

TEST_CASE("trajectory of 7 under 3n+1") {
  const auto traj = trajectory(Natural(7), Params(0), 1000);
  const std::vector<int> expected{7,  22, 11, 34, 17, 52, 26, 13, 40,
                                  20, 10, 5,  16, 8,  4,  2,  1};
  REQUIRE(traj.status == TerminationStatus::ReachedTarget);
  CHECK(traj.stopping_time == 16);
  REQUIRE(traj.terms.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(traj.terms[i] == expected[i]);
}

TEST_CASE("trajectory stops immediately on the target") {
  const auto t0 = trajectory(Natural(1), Params(0), 10);
  CHECK(t0.status == TerminationStatus::ReachedTarget);
  CHECK(t0.stopping_time == 0);
  CHECK(t0.terms.size() == 1);

  const auto t2 = trajectory(Natural(9), Params(2), 10);
  CHECK(t2.status == TerminationStatus::ReachedTarget);
  CHECK(t2.stopping_time == 0);
}

TEST_CASE("trajectory of 1 under 3n+9") {
  const auto traj = trajectory(Natural(1), Params(2), 100);
  const std::vector<int> expected{1, 12, 6, 3, 18, 9};
  REQUIRE(traj.status == TerminationStatus::ReachedTarget);
  CHECK(traj.stopping_time == 5);
  REQUIRE(traj.terms.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(traj.terms[i] == expected[i]);
}

TEST_CASE("trajectory runs out of budget") {
  const auto traj = trajectory(Natural(27), Params(0), 10);
  CHECK(traj.status == TerminationStatus::BudgetExhausted);
  CHECK(traj.terms.size() == 11);
  CHECK_THROWS_AS(trajectory(Natural(0), Params(0), 10), std::invalid_argument);
}

TEST_CASE("parity profile of the orbit of 7") {
  const auto traj = trajectory(Natural(7), Params(0), 1000);

  auto p17 = parity_profile(traj, 17);
  CHECK(p17.l == 17);
  CHECK(p17.m == 6);
  CHECK(p17.d == std::vector<std::uint64_t>{0, 1, 1, 2, 3, 4, 0});

  auto p16 = parity_profile(traj, 16);
  CHECK(p16.m == 5);
  CHECK(p16.d == std::vector<std::uint64_t>{0, 1, 1, 2, 3, 4});

  // Prefix ending right after an odd term: the final run is cut to zero.
  auto p12 = parity_profile(traj, 12);
  CHECK(p12.m == 5);
  CHECK(p12.d == std::vector<std::uint64_t>{0, 1, 1, 2, 3, 0});

  auto p1 = parity_profile(traj, 1);
  CHECK(p1.m == 1);
  CHECK(p1.d == std::vector<std::uint64_t>{0, 0});

  CHECK_THROWS_AS(parity_profile(traj, 0), std::invalid_argument);
  CHECK_THROWS_AS(parity_profile(traj, 18), std::invalid_argument);
}

TEST_CASE("parity profile invariants across a grid") {
  for (unsigned k = 0; k <= 3; ++k) {
    const Params params(k);
    for (unsigned n = 1; n <= 60; ++n) {
      const auto traj = trajectory(Natural(n), params, 100000);
      REQUIRE(traj.status == TerminationStatus::ReachedTarget);
      for (std::uint64_t l = 1; l <= traj.terms.size(); ++l) {
        const auto p = parity_profile(traj, l);
        CHECK(p.l == l);
        CHECK(p.d.size() == p.m + 1);
        std::uint64_t sum = 0;
        for (auto v : p.d) sum += v;
        CHECK(sum == l - p.m);
      }
    }
  }
}

namespace {

void check_stream_matches(const Natural& n, const Params& params,
                          std::uint64_t budget) {
  const auto traj = trajectory(n, params, budget);
  const auto summary = stream_trajectory(n, params, budget);
  REQUIRE(traj.status == TerminationStatus::ReachedTarget);
  REQUIRE(summary.status == TerminationStatus::ReachedTarget);
  CHECK(summary.stopping_time == traj.stopping_time);
  CHECK(summary.steps_used == traj.stopping_time);

  std::uint64_t odd = 0, peak = 0;
  for (const auto& term : traj.terms) {
    odd += is_odd(term) ? 1 : 0;
    peak = std::max(peak, bit_length(term));
  }
  CHECK(summary.odd_count == odd);
  CHECK(summary.peak_bits == peak);

  if (traj.stopping_time >= 2) {
    REQUIRE(summary.entry_predecessor.has_value());
    CHECK(*summary.entry_predecessor ==
          traj.terms[traj.stopping_time - 2]);
  } else {
    CHECK(!summary.entry_predecessor.has_value());
  }
}

}  // namespace

TEST_CASE("streaming summary agrees with the materialized orbit") {
  for (unsigned k = 0; k <= 4; ++k) {
    const Params params(k);
    for (unsigned n = 1; n <= 300; ++n)
      check_stream_matches(Natural(n), params, 100000);
  }
}

TEST_CASE("streaming summary across the machine-word boundary") {
  // Orbits of these values climb past 64 bits, escalate to big integers,
  // and drop back to words before terminating.
  check_stream_matches(pow2(62) + 1, Params(0), 100000);
  check_stream_matches(pow2(63) + 1, Params(0), 100000);
  check_stream_matches(pow2(64) + 1, Params(0), 100000);
  check_stream_matches(pow2(64) - 59, Params(0), 100000);
  check_stream_matches(pow2(62) + 3, Params(4), 100000);
  check_stream_matches(pow2(70) + 9, Params(2), 100000);
}

TEST_CASE("streaming summary when the budget runs out") {
  const auto summary = stream_trajectory(Natural(27), Params(0), 10);
  CHECK(summary.status == TerminationStatus::BudgetExhausted);
  CHECK(summary.steps_used == 10);
  CHECK(!summary.entry_predecessor.has_value());
}

TEST_CASE("streaming summary of a pure power of two") {
  const auto summary = stream_trajectory(pow2(20), Params(0), 0xFFFF);
  CHECK(summary.status == TerminationStatus::ReachedTarget);
  CHECK(summary.stopping_time == 20);
  CHECK(summary.odd_count == 1);
  CHECK(summary.peak_bits == 21);
  REQUIRE(summary.entry_predecessor.has_value());
  CHECK(*summary.entry_predecessor == 4);
}

TEST_CASE("three-adic valuation") {
  CHECK(three_adic_valuation(Natural(1)) == 0);
  CHECK(three_adic_valuation(Natural(2)) == 0);
  CHECK(three_adic_valuation(Natural(3)) == 1);
  CHECK(three_adic_valuation(Natural(12)) == 1);
  CHECK(three_adic_valuation(Natural(9)) == 2);
  CHECK(three_adic_valuation(pow3(4) * 7) == 4);
  CHECK(three_adic_valuation(pow3(41)) == 41);
  CHECK_THROWS_AS(three_adic_valuation(Natural(0)), std::invalid_argument);
}

TEST_CASE("cycle detection finds the terminal loop") {
  // The orbit of 1 under 3n+1 is the pure cycle 1 -> 4 -> 2.
  const auto rep1 = detect_cycle(Natural(1), Params(0), 64);
  REQUIRE(rep1.found);
  CHECK(rep1.length == 3);
  REQUIRE(rep1.members.size() == 3);
  CHECK(rep1.members[0] == 1);
  CHECK(rep1.members[1] == 4);
  CHECK(rep1.members[2] == 2);
  CHECK(rep1.steps_used <= 64);

  // 7 falls into the same cycle, entering at 4.
  const auto rep7 = detect_cycle(Natural(7), Params(0), 1000);
  REQUIRE(rep7.found);
  CHECK(rep7.length == 3);
  REQUIRE(rep7.members.size() == 3);
  CHECK(rep7.members[0] == 4);
  CHECK(rep7.members[1] == 2);
  CHECK(rep7.members[2] == 1);

  // Under 3n+9 the loop is 18 -> 9 -> 36, entered at 18 from n = 1.
  const auto rep9 = detect_cycle(Natural(1), Params(2), 1000);
  REQUIRE(rep9.found);
  CHECK(rep9.length == 3);
  REQUIRE(rep9.members.size() == 3);
  CHECK(rep9.members[0] == 18);
  CHECK(rep9.members[1] == 9);
  CHECK(rep9.members[2] == 36);
}

TEST_CASE("cycle detection respects its budget") {
  const auto rep = detect_cycle(Natural(27), Params(0), 3);
  CHECK(!rep.found);
  CHECK(rep.steps_used == 3);
  CHECK_THROWS_AS(detect_cycle(Natural(0), Params(0), 10),
                  std::invalid_argument);
}

TEST_CASE("status names") {
  CHECK(to_string(TerminationStatus::ReachedTarget) == "reached_target");
  CHECK(to_string(TerminationStatus::BudgetExhausted) == "budget_exhausted");
  CHECK(to_string(TerminationStatus::CycleWithoutTarget) ==
        "cycle_without_target");
}
