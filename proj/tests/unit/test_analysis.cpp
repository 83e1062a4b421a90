#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "collatz3k/analysis.hpp"
#include "collatz3k/dynamics.hpp"
#include "collatz3k/natural.hpp"
#include "collatz3k/params.hpp"

using namespace collatz3k;

TEST_CASE("total stopping times under 3n+27") {
  const Params k3(3);
  const std::vector<std::uint64_t> expected{8, 9,  5, 10, 13, 6,  10, 11, 2,
                                            14, 9, 7, 8,  11, 6,  12, 9};
  for (unsigned n = 1; n <= 17; ++n) {
    const auto t = total_stopping_time(Natural(n), k3);
    REQUIRE(t.has_value());
    CHECK(*t == expected[n - 1]);
  }
}

TEST_CASE("total stopping time well-known point values") {
  CHECK(total_stopping_time(Natural(27), Params(0)) == 111);
  CHECK(total_stopping_time(Natural(97), Params(0)) == 118);
  CHECK(total_stopping_time(Natural(1), Params(0)) == 0);
  CHECK(total_stopping_time(pow2(12), Params(0)) == 12);
  CHECK(!total_stopping_time(Natural(27), Params(0), 10).has_value());
}

TEST_CASE("odd term counts under 3n+27") {
  const Params k3(3);
  const std::vector<std::uint64_t> expected{4, 4, 3, 4, 6, 3, 4, 4, 2,
                                            6, 4, 3, 4, 4, 3, 4, 4};
  for (unsigned n = 1; n <= 17; ++n) {
    const auto c = odd_term_count(Natural(n), k3);
    REQUIRE(c.has_value());
    CHECK(*c == expected[n - 1]);
  }
}

TEST_CASE("stopping times and odd counts under 3n+9") {
  const Params k2(2);
  CHECK(total_stopping_time(Natural(1), k2) == 5);
  CHECK(total_stopping_time(Natural(2), k2) == 6);
  CHECK(total_stopping_time(Natural(32), k2) == 10);
  CHECK(total_stopping_time(Natural(33), k2) == 10);
  CHECK(total_stopping_time(Natural(34), k2) == 13);
  CHECK(total_stopping_time(Natural(35), k2) == 10);
  CHECK(odd_term_count(Natural(1), k2) == 3);
  CHECK(odd_term_count(Natural(2), k2) == 3);
  CHECK(odd_term_count(Natural(33), k2) == 4);
  CHECK(odd_term_count(Natural(35), k2) == 4);
}

TEST_CASE("odd count equals the count in the materialized orbit") {
  for (unsigned k = 0; k <= 3; ++k) {
    const Params params(k);
    for (unsigned n = 1; n <= 100; ++n) {
      const auto traj = trajectory(Natural(n), params, 100000);
      REQUIRE(traj.status == TerminationStatus::ReachedTarget);
      std::uint64_t odd = 0;
      for (const auto& term : traj.terms) odd += is_odd(term) ? 1 : 0;
      CHECK(odd_term_count(Natural(n), params) == odd);
    }
  }
}

TEST_CASE("cycle entry classification") {
  const Params k2(2);
  CHECK(classify_cycle_entry(Natural(32), k2) == CycleTag::Shortcut);
  CHECK(classify_cycle_entry(Natural(33), k2) == CycleTag::Standard);
  CHECK(classify_cycle_entry(Natural(34), k2) == CycleTag::Standard);
  CHECK(classify_cycle_entry(Natural(35), k2) == CycleTag::Standard);
  CHECK(classify_cycle_entry(Natural(9), k2) == CycleTag::Short);   // t = 0
  CHECK(classify_cycle_entry(Natural(18), k2) == CycleTag::Short);  // t = 1

  const Params k0(0);
  CHECK(classify_cycle_entry(Natural(1), k0) == CycleTag::Short);
  CHECK(classify_cycle_entry(Natural(2), k0) == CycleTag::Short);
  CHECK(classify_cycle_entry(Natural(4), k0) == CycleTag::Standard);
  CHECK(classify_cycle_entry(Natural(7), k0) == CycleTag::Standard);

  // 1 -> 6 -> 3 under 3n+3 arrives through 3^(k-1).
  CHECK(classify_cycle_entry(Natural(1), Params(1)) == CycleTag::Shortcut);

  CHECK(classify_cycle_entry(Natural(27), k0, 10) == CycleTag::None);
}

TEST_CASE("classification matches the orbit predecessor") {
  for (unsigned k = 0; k <= 3; ++k) {
    const Params params(k);
    for (unsigned n = 1; n <= 200; ++n) {
      const auto traj = trajectory(Natural(n), params, 100000);
      REQUIRE(traj.status == TerminationStatus::ReachedTarget);
      const CycleTag tag = classify_cycle_entry(Natural(n), params);
      if (traj.stopping_time < 2) {
        CHECK(tag == CycleTag::Short);
      } else if (tag == CycleTag::Standard) {
        CHECK(traj.terms[traj.stopping_time - 2] == 4 * params.target());
      } else {
        REQUIRE(tag == CycleTag::Shortcut);
        REQUIRE(k >= 1);
        CHECK(traj.terms[traj.stopping_time - 2] == pow3(k - 1));
      }
    }
  }
}

TEST_CASE("figure dataset rows") {
  const auto rows = figure_dataset(Natural(32), Natural(35), Params(2));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].n == 32);
  CHECK(rows[0].k == 2);
  CHECK(rows[0].t == 10);
  CHECK(rows[0].odd_count == 3);
  CHECK(rows[0].tag == CycleTag::Shortcut);
  CHECK(rows[1].n == 33);
  CHECK(rows[1].t == 10);
  CHECK(rows[1].odd_count == 4);
  CHECK(rows[1].tag == CycleTag::Standard);
  CHECK(rows[2].n == 34);
  CHECK(rows[2].t == 13);
  CHECK(rows[2].odd_count == 5);
  CHECK(rows[3].n == 35);
  CHECK(rows[3].t == 10);
  CHECK(rows[3].odd_count == 4);

  CHECK_THROWS_AS(figure_dataset(Natural(0), Natural(4), Params(0)),
                  std::invalid_argument);
}

TEST_CASE("figure dataset marks unresolved values") {
  const auto rows = figure_dataset(Natural(27), Natural(27), Params(0), 10);
  REQUIRE(rows.size() == 1);
  CHECK(!rows[0].t.has_value());
  CHECK(!rows[0].odd_count.has_value());
  CHECK(rows[0].tag == CycleTag::None);
}

TEST_CASE("grouping by stopping time") {
  const auto groups = group_by_stopping_time(Natural(1), Natural(40), Params(0));
  // 5 and 32 both stop after 5 steps and both enter through 4, yet their
  // odd counts differ — group membership fixes neither value nor count.
  REQUIRE(groups.count(5) == 1);
  const auto& g5 = groups.at(5);
  REQUIRE(g5.size() == 2);
  CHECK(g5[0].n == 5);
  CHECK(g5[0].odd_count == 2);
  CHECK(g5[0].tag == CycleTag::Standard);
  CHECK(g5[1].n == 32);
  CHECK(g5[1].odd_count == 1);
  CHECK(g5[1].tag == CycleTag::Standard);

  std::uint64_t total = 0;
  for (const auto& [t, entries] : groups) {
    total += entries.size();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      CHECK(total_stopping_time(entries[i].n, Params(0)) == t);
      if (i > 0) CHECK(entries[i - 1].n < entries[i].n);
    }
  }
  CHECK(total == 40);
}

TEST_CASE("grouping omits unresolved values") {
  const auto groups =
      group_by_stopping_time(Natural(27), Natural(27), Params(0), 10);
  CHECK(groups.empty());
}

TEST_CASE("tag names") {
  CHECK(to_string(CycleTag::Standard) == "Standard");
  CHECK(to_string(CycleTag::Shortcut) == "Shortcut");
  CHECK(to_string(CycleTag::Short) == "Short");
  CHECK(to_string(CycleTag::None) == "None");
}
