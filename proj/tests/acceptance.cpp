// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every expected value here was fixed ahead of the implementation from an
// independent reference computation; none are copied from library output.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fixture_io.hpp"
#include "permknot/diagram.hpp"
#include "permknot/permutation.hpp"
#include "permknot/recursions.hpp"
#include "permknot/series.hpp"
#include "permknot/statistics.hpp"

using namespace permknot;

namespace {

#define ENSURE(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      detail = std::string("failed at line ") +                   \
               std::to_string(__LINE__) + ": " #cond;             \
      return false;                                               \
    }                                                             \
  } while (0)

template <typename Fn>
void for_all_permutations(int n, Fn&& fn) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation(Permutation::unchecked, v));
  } while (std::next_permutation(v.begin(), v.end()));
}

bool running_example_exactness(std::string& detail) {
  const Permutation w = parse_permutation("7563421");
  const StatSummary s = stats(w);
  ENSURE(s.length == 19);
  ENSURE(s.reflection_length == 5);
  ENSURE(s.total_displacement == 24);
  ENSURE(s.shallow);
  ENSURE(is_shallow_hm(w));
  ENSURE(is_unlinked_cm(w));
  ENSURE(build_diagram(w).component_count == 2);
  return true;
}

bool flattening_exactness(std::string& detail) {
  const Permutation w = parse_permutation("7563421");
  const Permutation f = flatten(w, 4);
  ENSURE(to_string(f) == "6,4,5,3,2,1");
  ENSURE(total_displacement(w) - total_displacement(f) == 6);
  ENSURE(length(w) - length(f) == 5);
  ENSURE(reflection_length(f) == 4);
  return true;
}

bool recursion_step_exactness(std::string& detail) {
  const HmStep s = hm_step(parse_permutation("45231"));
  ENSURE(to_string(s.parent) == "4,1,2,3");
  ENSURE(s.j == 2);
  const std::vector<int> rtl = right_to_left_minima(s.parent);
  ENSURE(std::binary_search(rtl.begin(), rtl.end(), s.j));
  return true;
}

bool three_way_equivalence(std::string& detail) {
  for (int n = 1; n <= 9; ++n) {
    UnlinkCache cache;
    std::uint64_t mismatches = 0;
    for_all_permutations(n, [&](const Permutation& w) {
      const bool by_def = is_shallow(w);
      if (by_def != is_shallow_hm(w) || by_def != is_unlinked_cm(w, cache)) ++mismatches;
    });
    ENSURE(mismatches == 0);
  }
  return true;
}

bool series_reproduction(std::string& detail) {
  const IntSeries g = series_coefficients(64);
  ENSURE(verify_residual(g));
  for (int n = 1; n <= 10; ++n) {
    ENSURE(BigInt(count_shallow(n, CountMethod::Exhaustive)) == g[n]);
  }
  const std::vector<BigInt> fixture =
      permknot_tests::read_fixture_sequence(std::string(PERMKNOT_FIXTURE_DIR) + "/a301897.txt");
  ENSURE(fixture.size() >= 11);
  for (std::size_t k = 0; k < fixture.size() && k <= 64; ++k) {
    ENSURE(g[static_cast<int>(k)] == fixture[k]);
  }
  return true;
}

bool flattening_bookkeeping(std::string& detail) {
  for (int n = 2; n <= 7; ++n) {
    std::uint64_t violations = 0;
    for_all_permutations(n, [&](const Permutation& w) {
      for (int i = 1; i <= n; ++i) {
        const Permutation f = flatten(w, i);
        std::int64_t through_i = 0;
        for (int a = 1; a < i; ++a) through_i += w(a) > w(i) ? 1 : 0;
        for (int b = i + 1; b <= n; ++b) through_i += w(i) > w(b) ? 1 : 0;
        const std::int64_t len_drop = length(w) - length(f);
        const std::int64_t td_drop = total_displacement(w) - total_displacement(f);
        if (len_drop != through_i) ++violations;
        if (w(i) == i) {
          if (reflection_length(f) != reflection_length(w)) ++violations;
          if (td_drop != len_drop) ++violations;
        } else if (std::abs(w(i) - i) == 1) {
          if (reflection_length(f) != reflection_length(w) - 1) ++violations;
          if (td_drop != len_drop + 1) ++violations;
        }
      }
    });
    ENSURE(violations == 0);
  }
  return true;
}

bool reduced_length_criterion(std::string& detail) {
  for (int n = 1; n <= 7; ++n) {
    const ReducedReflectionTable table(n);
    std::uint64_t mismatches = 0;
    for_all_permutations(n, [&](const Permutation& w) {
      if (is_shallow(w) != (table(w) == reflection_length(w))) ++mismatches;
    });
    ENSURE(mismatches == 0);
  }
  return true;
}

bool linking_necessary_condition(std::string& detail) {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t nonzero = 0;
    for (const Permutation& w : generate_shallow(n)) {
      const Diagram d = build_diagram(w);
      for (int a = 0; a < d.component_count; ++a) {
        for (int b = a + 1; b < d.component_count; ++b) {
          if (linking_number(d, a, b) != 0) ++nonzero;
        }
      }
    }
    ENSURE(nonzero == 0);
  }
  const Diagram d = build_diagram(parse_permutation("3412"));
  ENSURE(std::abs(linking_number(d, 0, 1)) == 1);
  return true;
}

bool statistic_properties(std::string& detail) {
  const auto holds = [](const Permutation& w) {
    const StatSummary s = stats(w);
    const Permutation wi = w.inverse();
    return s.length + s.reflection_length <= s.total_displacement &&
           s.total_displacement <= 2 * s.length &&
           s.total_displacement % 2 == 0 &&
           (s.length - s.reflection_length) % 2 == 0 &&
           length(wi) == s.length && reflection_length(wi) == s.reflection_length &&
           total_displacement(wi) == s.total_displacement && depth(wi) == s.depth &&
           is_shallow(wi) == s.shallow;
  };
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t violations = 0;
    for_all_permutations(n, [&](const Permutation& w) {
      if (!holds(w)) ++violations;
    });
    ENSURE(violations == 0);
  }
  std::mt19937 rng(20260813);
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 1);
  for (int trial = 0; trial < 10000; ++trial) {
    std::shuffle(v.begin(), v.end(), rng);
    ENSURE(holds(Permutation(Permutation::unchecked, v)));
  }
  return true;
}

}  // namespace

int main() {
  using Criterion = std::pair<const char*, std::function<bool(std::string&)>>;
  const std::vector<Criterion> criteria = {
      {"running-example exactness", running_example_exactness},
      {"flattening exactness", flattening_exactness},
      {"recursion-step exactness", recursion_step_exactness},
      {"three-way equivalence over S_1..S_9", three_way_equivalence},
      {"series residual and counts", series_reproduction},
      {"flattening bookkeeping identities", flattening_bookkeeping},
      {"reduced-length shallowness criterion", reduced_length_criterion},
      {"vanishing linking numbers for shallow permutations", linking_necessary_condition},
      {"statistic property suite", statistic_properties},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.second(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (ok) {
      std::cout << "[PASS] " << c.first << " (" << ms << " ms)\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << c.first << " (" << ms << " ms): " << detail << '\n';
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
