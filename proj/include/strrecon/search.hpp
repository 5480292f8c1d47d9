#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "strrecon/errors.hpp"

namespace strrecon {

inline constexpr std::uint64_t kDefaultSearchCap = std::uint64_t{1} << 32;

struct SearchResult {
  std::uint64_t value = 0;
  std::uint64_t probes = 0;
};

// Finds the largest v with pred(v) true, for a predicate that holds on
// [0, v] and fails beyond. pred(known_floor) is taken as true without probing.
//
// The traditional schedule: probe 2*floor, 4*floor, ... (1, 2, 4, ... from a
// floor of 0) until the first failure, then binary search the last gap. With
// known_floor == 1 this costs exactly 2*floor(lg v) + 1 probes.
//
// `upper`, when given, is an inclusive ceiling on v; the doubling phase probes
// it instead of overshooting. A probe value past `hard_cap` throws
// BudgetExceeded so a predicate that never fails cannot loop forever.
template <class Pred>
SearchResult doubling_search(Pred&& pred, std::uint64_t known_floor,
                             std::optional<std::uint64_t> upper = std::nullopt,
                             std::uint64_t hard_cap = kDefaultSearchCap) {
  SearchResult r;
  std::uint64_t lo = known_floor;
  std::uint64_t hi = 0;
  if (upper && *upper < lo) throw ContractError("doubling_search: upper below known floor");
  for (;;) {
    if (upper && lo == *upper) {
      r.value = lo;
      return r;
    }
    std::uint64_t next = lo == 0 ? 1 : 2 * lo;
    if (upper && next > *upper) next = *upper;
    if (next > hard_cap)
      throw BudgetExceeded("doubling_search: predicate still true at hard cap " + std::to_string(hard_cap));
    ++r.probes;
    if (pred(next)) {
      lo = next;
    } else {
      hi = next;
      break;
    }
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    ++r.probes;
    if (pred(mid))
      lo = mid;
    else
      hi = mid;
  }
  r.value = lo;
  return r;
}

// Largest v in [lo, hi) with pred(v) true, given pred(lo) true and pred(hi)
// false, both without probing. Costs at most ceil(lg(hi - lo)) probes.
template <class Pred>
SearchResult bounded_binary_search(Pred&& pred, std::uint64_t lo, std::uint64_t hi) {
  if (hi <= lo) throw ContractError("bounded_binary_search: empty range");
  SearchResult r;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    ++r.probes;
    if (pred(mid))
      lo = mid;
    else
      hi = mid;
  }
  r.value = lo;
  return r;
}

}  // namespace strrecon
