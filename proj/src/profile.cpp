#include "abwords/profile.hpp"

#include <algorithm>

namespace abw {

ComplexityProfile abelian_complexity_profile(const WordSpec& spec, std::uint32_t n_max,
                                             const StabilizationPolicy& pol) {
  auto rounds = detail::stabilize<std::vector<ParikhVector>>(
      spec, n_max, pol,
      [](const PrefixBuffer& buf, std::uint32_t n) { return window_spectrum(buf, n); });
  ComplexityProfile out;
  out.spec = spec.to_string();
  out.alphabet_size = spec.alphabet_size();
  out.stabilized = rounds.all_stable;
  out.entries.reserve(n_max);
  for (std::uint32_t n = 1; n <= n_max; ++n)
    out.entries.push_back({n, rounds.per_n[n].size(), bool(rounds.stable[n]),
                           rounds.prefix_length});
  return out;
}

std::uint64_t max_abelian_complexity(std::uint64_t n, unsigned k) {
  if (k < 1 || k > kMaxAlphabet)
    throw std::invalid_argument("alphabet size must be in 1..255");
  // binomial(n + k - 1, k - 1), built as C(n+j, j) for j = 1..k-1; each step
  // is an exact integer.
  unsigned __int128 c = 1;
  for (std::uint64_t j = 1; j < k; ++j) {
    unsigned __int128 f = (unsigned __int128)n + j;
    if (c > ~(unsigned __int128)0 / f)
      throw std::overflow_error("abelian complexity bound exceeds 64 bits");
    c = c * f / j;
    if (c > ~std::uint64_t(0))
      throw std::overflow_error("abelian complexity bound exceeds 64 bits");
  }
  return std::uint64_t(c);
}

BalanceProfile balance_profile(const WordSpec& spec, std::uint32_t n_max,
                               const StabilizationPolicy& pol) {
  auto rounds = detail::stabilize<std::vector<std::uint32_t>>(
      spec, n_max, pol,
      [](const PrefixBuffer& buf, std::uint32_t n) { return window_spreads(buf, n); });
  BalanceProfile out;
  out.spec = spec.to_string();
  out.alphabet_size = spec.alphabet_size();
  out.stabilized = rounds.all_stable;
  out.entries.reserve(n_max);
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    for (std::uint32_t s : rounds.per_n[n]) out.c_estimate = std::max(out.c_estimate, s);
    out.entries.push_back({n, std::move(rounds.per_n[n]), bool(rounds.stable[n]),
                           rounds.prefix_length});
  }
  return out;
}

DeviationProfile prefix_factor_balance(const WordSpec& spec, std::uint32_t n_max,
                                       const StabilizationPolicy& pol) {
  auto rounds = detail::stabilize<std::uint32_t>(
      spec, n_max, pol, [](const PrefixBuffer& buf, std::uint32_t n) {
        return prefix_window_deviation(buf, n);
      });
  DeviationProfile out;
  out.spec = spec.to_string();
  out.alphabet_size = spec.alphabet_size();
  out.stabilized = rounds.all_stable;
  out.entries.reserve(n_max);
  for (std::uint32_t n = 1; n <= n_max; ++n)
    out.entries.push_back({n, rounds.per_n[n], bool(rounds.stable[n]),
                           rounds.prefix_length});
  return out;
}

std::optional<std::uint32_t> periodicity_probe(const WordSpec& spec, std::uint32_t p_max,
                                               const StabilizationPolicy& pol) {
  ComplexityProfile prof = abelian_complexity_profile(spec, p_max, pol);
  for (const ProfileEntry& e : prof.entries)
    if (e.value == 1) return e.n;
  return std::nullopt;
}

}  // namespace abw
