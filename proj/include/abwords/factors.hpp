#pragma once

#include <array>

#include "abwords/profile.hpp"

namespace abw {

// Number of distinct length-n windows, per n. Intended for small n; memory
// is bounded by the capacity cap.
struct FactorProfile {
  std::string spec;
  unsigned alphabet_size = 0;
  bool stabilized = false;
  std::vector<ProfileEntry> entries;
};

FactorProfile factor_complexity_profile(const WordSpec& spec, std::uint32_t n_max,
                                        const StabilizationPolicy& pol = {});

// Sorted distinct length-n windows of the buffer. Throws CapacityError once
// the set holds more than byte_cap letters.
std::vector<Word> distinct_windows(const PrefixBuffer& buf, std::uint32_t n,
                                   std::size_t byte_cap = kDefaultCapacity);

struct RightSpecial {
  Word factor;
  Word extensions;  // sorted distinct letters that can follow
  bool operator==(const RightSpecial&) const = default;
};

struct RightSpecialReport {
  std::uint32_t n = 0;
  bool stabilized = false;
  std::uint64_t prefix_length = 0;
  std::vector<RightSpecial> specials;  // sorted by factor
};

// Length-n factors with at least two distinct right extensions in the word.
// Any factor reported is genuinely right special; a short prefix may miss
// some, which the stabilized flag accounts for.
RightSpecialReport right_special_factors(const WordSpec& spec, std::uint32_t n,
                                         const StabilizationPolicy& pol = {});

// For the ternary fixed point of 0->01;1->02;2->0: take the unique right
// special factor w of length n-1, and check that the three vectors obtained
// by extending its Parikh vector with each letter all occur among the
// length-n window vectors, which stay at most 7 in number and pairwise
// within L-infinity distance 2.
struct CentralReport {
  std::uint32_t n = 0;
  bool found_special = false;
  Word special_factor;
  std::array<ParikhVector, 3> central{};
  std::vector<ParikhVector> spectrum;
  std::uint32_t max_pairwise_norm = 0;
  bool central_in_spectrum = false;
  bool diameter_le2 = false;
  bool cardinality_le7 = false;
  bool verified = false;  // summaries stabilized across doubling rounds

  bool ok() const {
    return found_special && central_in_spectrum && diameter_le2 && cardinality_le7;
  }
};

CentralReport tribonacci_central_check(std::uint32_t n,
                                       const StabilizationPolicy& pol = {});

// Batch form: one stabilized prefix serves every n in [n_lo, n_hi].
std::vector<CentralReport> tribonacci_central_range(std::uint32_t n_lo,
                                                    std::uint32_t n_hi,
                                                    const StabilizationPolicy& pol = {});

}  // namespace abw
