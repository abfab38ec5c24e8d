#pragma once

#include <exception>
#include <utility>

#include "abwords/wordspec.hpp"

namespace abw {

struct StabilizationPolicy {
  // 0 means max(64, 8 * n_max).
  std::size_t initial_length = 0;
  std::size_t capacity = kDefaultCapacity;
  bool parallel = true;
};

namespace detail {

template <class Summary>
struct StabilizedRounds {
  std::vector<Summary> per_n;   // index 1..n_max
  std::vector<char> stable;     // per n: last two rounds agreed
  std::uint64_t prefix_length;  // prefix the reported summaries came from
  bool all_stable;
};

// Doubling protocol: compute per-n summaries over a prefix, double its length
// and recompute, and stop once the summaries agree for every n across two
// successive rounds. A summary computed from a longer prefix can only gain
// information, so agreement means the values stopped moving at this scale.
// If the capacity cap cuts the doubling short, per-n flags record which
// entries agreed in the last comparison (none, if only one round ran).
//
// `round(buf)` computes the whole vector of summaries (index 0 unused) for
// one prefix.
template <class Summary, class Round>
StabilizedRounds<Summary> stabilize_rounds(const WordSpec& spec, std::uint32_t n_max,
                                           const StabilizationPolicy& pol,
                                           Round&& round) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  std::size_t L = pol.initial_length ? pol.initial_length
                                     : std::max<std::size_t>(64, 8 * std::size_t(n_max));
  if (L < n_max) L = n_max;
  if (n_max > pol.capacity) throw CapacityError("n_max exceeds the capacity cap");
  if (L > pol.capacity) L = pol.capacity;

  std::vector<Summary> prev = round(materialize(spec, L, pol.capacity));
  std::vector<char> stable(std::size_t(n_max) + 1, 0);
  std::uint64_t used = L;
  bool all = false;
  while (L <= pol.capacity / 2) {
    L *= 2;
    std::vector<Summary> cur = round(materialize(spec, L, pol.capacity));
    used = L;
    all = true;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
      stable[n] = (cur[n] == prev[n]);
      all = all && stable[n];
    }
    prev = std::move(cur);
    if (all) break;
  }
  return {std::move(prev), std::move(stable), used, all};
}

// Convenience form: summaries independent per n, computed in parallel.
template <class Summary, class PerN>
StabilizedRounds<Summary> stabilize(const WordSpec& spec, std::uint32_t n_max,
                                    const StabilizationPolicy& pol, PerN&& per_n) {
  return stabilize_rounds<Summary>(
      spec, n_max, pol, [&](const PrefixBuffer& buf) {
        std::vector<Summary> out(std::size_t(n_max) + 1);
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (pol.parallel)
        for (long long n = 1; n <= (long long)n_max; ++n) {
          try {
            out[std::size_t(n)] = per_n(buf, std::uint32_t(n));
          } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
          }
        }
        if (err) std::rethrow_exception(err);
        return out;
      });
}

}  // namespace detail
}  // namespace abw
