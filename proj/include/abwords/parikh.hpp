#pragma once

#include <cstdint>
#include <vector>

#include "abwords/wordspec.hpp"

namespace abw {

// Letter-count vector, indexed by letter.
using ParikhVector = std::vector<std::uint32_t>;

ParikhVector parikh(std::string_view w, unsigned k);
bool abelian_equivalent(std::string_view u, std::string_view v);

std::uint32_t linf_distance(const ParikhVector& a, const ParikhVector& b);

// Cumulative letter counts over a buffer; any window's Parikh vector in O(k).
class ParikhPrefixSums {
 public:
  explicit ParikhPrefixSums(const PrefixBuffer& buf);

  std::size_t length() const { return len_; }
  unsigned alphabet_size() const { return k_; }

  // Count of letter a in [i, j).
  std::uint32_t count(std::size_t i, std::size_t j, Letter a) const {
    return sums_[j * k_ + a] - sums_[i * k_ + a];
  }
  ParikhVector window(std::size_t i, std::size_t j) const;

  // Abelian equivalence of the blocks [p, p+m) and [q, q+m).
  bool blocks_equal(std::size_t p, std::size_t q, std::uint32_t m) const {
    for (unsigned a = 0; a < k_; ++a)
      if (count(p, p + m, Letter(a)) != count(q, q + m, Letter(a))) return false;
    return true;
  }

 private:
  std::vector<std::uint32_t> sums_;
  std::size_t len_;
  unsigned k_;
};

}  // namespace abw
