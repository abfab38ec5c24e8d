#pragma once

#include "abwords/parikh.hpp"

namespace abw {

// Set of Parikh vectors over all length-n windows of the buffer, sorted
// lexicographically. Requires 1 <= n <= buf.length().
std::vector<ParikhVector> window_spectrum(const PrefixBuffer& buf, std::size_t n);
std::uint64_t window_spectrum_size(const PrefixBuffer& buf, std::size_t n);

// Per-letter spread max-min of the letter count over all length-n windows.
std::vector<std::uint32_t> window_spreads(const PrefixBuffer& buf, std::size_t n);

// Largest L-infinity distance between the Parikh vector of the length-n
// prefix and that of any length-n window.
std::uint32_t prefix_window_deviation(const PrefixBuffer& buf, std::size_t n);

}  // namespace abw
