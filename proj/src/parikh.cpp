#include "abwords/parikh.hpp"

#include <algorithm>

namespace abw {

ParikhVector parikh(std::string_view w, unsigned k) {
  ParikhVector v(k, 0);
  for (char b : w) {
    if (Letter(b) >= k) throw std::invalid_argument("letter outside alphabet");
    ++v[Letter(b)];
  }
  return v;
}

bool abelian_equivalent(std::string_view u, std::string_view v) {
  if (u.size() != v.size()) return false;
  unsigned k = std::max(min_alphabet(u), min_alphabet(v));
  return parikh(u, k) == parikh(v, k);
}

std::uint32_t linf_distance(const ParikhVector& a, const ParikhVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vectors over different alphabets");
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint32_t di = a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    d = std::max(d, di);
  }
  return d;
}

ParikhPrefixSums::ParikhPrefixSums(const PrefixBuffer& buf)
    : len_(buf.length()), k_(buf.alphabet_size()) {
  if (len_ > (std::size_t(1) << 32) - 2)
    throw CapacityError("buffer too long for 32-bit letter counts");
  sums_.assign((len_ + 1) * k_, 0);
  for (std::size_t i = 0; i < len_; ++i) {
    for (unsigned a = 0; a < k_; ++a) sums_[(i + 1) * k_ + a] = sums_[i * k_ + a];
    ++sums_[(i + 1) * k_ + buf[i]];
  }
}

ParikhVector ParikhPrefixSums::window(std::size_t i, std::size_t j) const {
  ParikhVector v(k_);
  for (unsigned a = 0; a < k_; ++a) v[a] = count(i, j, Letter(a));
  return v;
}

}  // namespace abw
