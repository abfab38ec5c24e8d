#pragma once

#include <optional>

#include "abwords/spectrum.hpp"
#include "abwords/stabilize.hpp"

namespace abw {

struct ProfileEntry {
  std::uint32_t n;
  std::uint64_t value;
  bool stabilized;
  std::uint64_t prefix_length;
  bool operator==(const ProfileEntry&) const = default;
};

// Number of abelian classes among length-n windows, per n.
struct ComplexityProfile {
  std::string spec;
  unsigned alphabet_size = 0;
  bool stabilized = false;
  std::vector<ProfileEntry> entries;
};

ComplexityProfile abelian_complexity_profile(const WordSpec& spec, std::uint32_t n_max,
                                             const StabilizationPolicy& pol = {});

// Number of abelian classes a length-n window over k letters can have at most:
// binomial(n + k - 1, k - 1). Throws std::overflow_error past 64 bits.
std::uint64_t max_abelian_complexity(std::uint64_t n, unsigned k);

struct BalanceEntry {
  std::uint32_t n;
  std::vector<std::uint32_t> spreads;  // per letter
  bool stabilized;
  std::uint64_t prefix_length;
  bool operator==(const BalanceEntry&) const = default;
};

struct BalanceProfile {
  std::string spec;
  unsigned alphabet_size = 0;
  bool stabilized = false;
  std::uint32_t c_estimate = 0;  // max spread over all entries and letters
  std::vector<BalanceEntry> entries;
};

BalanceProfile balance_profile(const WordSpec& spec, std::uint32_t n_max,
                               const StabilizationPolicy& pol = {});

// Per n, the largest L-infinity gap between the prefix vector and any window
// vector of the same length.
struct DeviationProfile {
  std::string spec;
  unsigned alphabet_size = 0;
  bool stabilized = false;
  std::vector<ProfileEntry> entries;
};

DeviationProfile prefix_factor_balance(const WordSpec& spec, std::uint32_t n_max,
                                       const StabilizationPolicy& pol = {});

// Smallest p <= p_max whose windows all fall in one abelian class on the
// stabilized prefix. A hit certifies the prefix is periodic with period p;
// none only says no such p showed up within the bound.
std::optional<std::uint32_t> periodicity_probe(const WordSpec& spec, std::uint32_t p_max,
                                               const StabilizationPolicy& pol = {});

}  // namespace abw
