#pragma once

#include <optional>

#include "abwords/parikh.hpp"
#include "abwords/stabilize.hpp"

namespace abw {

// An abelian k-power of period m at position pos: k consecutive length-m
// blocks starting at pos, all abelian equivalent.
struct PowerHit {
  std::size_t position;
  std::uint32_t period;
  std::uint32_t exponent;
  bool operator==(const PowerHit&) const = default;
};

struct MaxPowerResult {
  std::uint32_t exponent;  // number of leading pairwise-equivalent blocks
  bool truncated;          // ran into the buffer end while blocks still matched
};

// Largest k such that the first k length-m blocks at pos are pairwise
// abelian equivalent within the buffer.
MaxPowerResult max_abelian_power_at(const ParikhPrefixSums& sums, std::size_t pos,
                                    std::uint32_t m);

// True when k blocks of length m at pos fit in the buffer and are pairwise
// abelian equivalent.
bool abelian_power_at(const ParikhPrefixSums& sums, std::size_t pos, std::uint32_t m,
                      std::uint32_t k);

// Smallest m <= m_max whose k blocks fit at pos and match. none means no
// period within the bound works inside this buffer; it says nothing beyond
// the bound or the buffer.
std::optional<std::uint32_t> min_period_for_k(const ParikhPrefixSums& sums,
                                              std::size_t pos, std::uint32_t k,
                                              std::uint32_t m_max);

// First abelian k-power with period <= m_max, scanning positions ascending
// and periods ascending within a position. none certifies the buffer holds
// no such power with period <= m_max.
std::optional<PowerHit> abelian_power_violation(const ParikhPrefixSums& sums,
                                                std::uint32_t k, std::uint32_t m_max,
                                                bool parallel = true);

struct PositionEntry {
  std::size_t pos;
  std::optional<std::uint32_t> min_period;
  bool truncated;  // buffer end kept some m <= m_max untested
  bool operator==(const PositionEntry&) const = default;
};

struct PositionPowerReport {
  std::string spec;
  std::uint32_t k = 0;
  std::size_t positions = 0;
  std::uint32_t m_max = 0;
  std::vector<PositionEntry> entries;
};

// Minimal k-power period per position < N, over a buffer of N + k*m_max
// letters so no tested period is truncated.
PositionPowerReport position_coverage_report(const WordSpec& spec, std::uint32_t k,
                                             std::size_t N, std::uint32_t m_max,
                                             const StabilizationPolicy& pol = {});

struct CoverResult {
  std::optional<std::pair<std::uint32_t, std::uint32_t>> periods;
  std::vector<std::size_t> uncovered;
};

// Lexicographically least pair (l1 <= l2) of periods such that every surveyed
// position starts a k-power of period l1 or l2. With covering=true a position
// counts as reached when it lies anywhere inside the span of such a power,
// not only at its start. If no pair covers, lists the positions no candidate
// period reaches (or, when every position has some working period, the best
// pair's leftovers).
CoverResult two_period_cover(const PositionPowerReport& report,
                             const StabilizationPolicy& pol = {},
                             bool covering = false);

// First position < N where the first k_cap length-m blocks are not pairwise
// equivalent; none means every position reaches exponent k_cap.
std::optional<std::size_t> fixed_period_falsifier(const WordSpec& spec, std::uint32_t m,
                                                  std::size_t N, std::uint32_t k_cap,
                                                  const StabilizationPolicy& pol = {});

struct DoublingCheckReport {
  std::uint64_t implications_checked = 0;
  std::vector<std::pair<std::size_t, std::uint32_t>> failures;  // (pos, period)
  bool holds = true;
};

// For a binary word w and its image under 0->00;1->01: every abelian k-power
// of period l at position j must reappear as a k-power of period 2l at
// position 2j in the image. Checks all j < N, l <= m_max.
DoublingCheckReport period_doubling_check(const WordSpec& spec, std::uint32_t k,
                                          std::size_t N, std::uint32_t m_max,
                                          const StabilizationPolicy& pol = {});

}  // namespace abw
