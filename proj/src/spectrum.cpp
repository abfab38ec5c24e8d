#include "abwords/spectrum.hpp"

#include <algorithm>
#include <set>

namespace abw {

namespace {

// Fast path: for k <= 4 and n < 2^16 a window's counts fit into one uint64
// as four 16-bit fields. The slide update adds the entering letter's field and
// subtracts the leaving one; the leaving letter is in the window, so its field
// never borrows.
constexpr bool packable(unsigned k, std::size_t n) { return k <= 4 && n < 65536; }

constexpr std::uint64_t field(Letter a) { return std::uint64_t(1) << (16 * a); }

ParikhVector unpack(std::uint64_t packed, unsigned k) {
  ParikhVector v(k);
  for (unsigned a = 0; a < k; ++a) v[a] = std::uint32_t((packed >> (16 * a)) & 0xffff);
  return v;
}

// Open-addressing set of uint64 keys. Spectra are tiny for the words studied
// here, so a flat probe table beats the standard containers by a wide margin
// in the sliding loops.
class PackedSet {
 public:
  PackedSet() : slots_(16, kEmpty), mask_(15) {}

  void insert(std::uint64_t v) {
    std::size_t i = mix(v) & mask_;
    for (;;) {
      if (slots_[i] == v) return;
      if (slots_[i] == kEmpty) {
        slots_[i] = v;
        if (++count_ * 2 > slots_.size()) grow();
        return;
      }
      i = (i + 1) & mask_;
    }
  }

  std::size_t size() const { return count_; }

  std::vector<std::uint64_t> values() const {
    std::vector<std::uint64_t> out;
    out.reserve(count_);
    for (std::uint64_t s : slots_)
      if (s != kEmpty) out.push_back(s);
    return out;
  }

 private:
  // Counts are < 2^16 per field, so the all-ones word can never be a key.
  static constexpr std::uint64_t kEmpty = ~std::uint64_t(0);

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  void grow() {
    std::vector<std::uint64_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    mask_ = slots_.size() - 1;
    for (std::uint64_t v : old) {
      if (v == kEmpty) continue;
      std::size_t i = mix(v) & mask_;
      while (slots_[i] != kEmpty) i = (i + 1) & mask_;
      slots_[i] = v;
    }
  }

  std::vector<std::uint64_t> slots_;
  std::size_t mask_;
  std::size_t count_ = 0;
};

void check_window(const PrefixBuffer& buf, std::size_t n) {
  if (n < 1 || n > buf.length())
    throw std::out_of_range("window length must be in 1..buffer length");
}

PackedSet packed_spectrum(const PrefixBuffer& buf, std::size_t n) {
  std::string_view w = buf.letters();
  PackedSet set;
  std::uint64_t cur = 0;
  for (std::size_t i = 0; i < n; ++i) cur += field(Letter(w[i]));
  set.insert(cur);
  for (std::size_t i = n; i < w.size(); ++i) {
    cur += field(Letter(w[i])) - field(Letter(w[i - n]));
    set.insert(cur);
  }
  return set;
}

std::set<ParikhVector> generic_spectrum(const PrefixBuffer& buf, std::size_t n) {
  std::string_view w = buf.letters();
  unsigned k = buf.alphabet_size();
  std::set<ParikhVector> set;
  ParikhVector cur = parikh(w.substr(0, n), k);
  set.insert(cur);
  for (std::size_t i = n; i < w.size(); ++i) {
    ++cur[Letter(w[i])];
    --cur[Letter(w[i - n])];
    set.insert(cur);
  }
  return set;
}

}  // namespace

std::vector<ParikhVector> window_spectrum(const PrefixBuffer& buf, std::size_t n) {
  check_window(buf, n);
  unsigned k = buf.alphabet_size();
  if (packable(k, n)) {
    std::vector<std::uint64_t> packed = packed_spectrum(buf, n).values();
    std::vector<ParikhVector> out;
    out.reserve(packed.size());
    for (std::uint64_t p : packed) out.push_back(unpack(p, k));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::set<ParikhVector> set = generic_spectrum(buf, n);
  return {set.begin(), set.end()};
}

std::uint64_t window_spectrum_size(const PrefixBuffer& buf, std::size_t n) {
  check_window(buf, n);
  if (packable(buf.alphabet_size(), n)) return packed_spectrum(buf, n).size();
  return generic_spectrum(buf, n).size();
}

std::vector<std::uint32_t> window_spreads(const PrefixBuffer& buf, std::size_t n) {
  check_window(buf, n);
  std::string_view w = buf.letters();
  unsigned k = buf.alphabet_size();
  ParikhVector cur = parikh(w.substr(0, n), k);
  ParikhVector lo = cur, hi = cur;
  for (std::size_t i = n; i < w.size(); ++i) {
    Letter in = Letter(w[i]), out = Letter(w[i - n]);
    if (in == out) continue;
    ++cur[in];
    --cur[out];
    hi[in] = std::max(hi[in], cur[in]);
    lo[out] = std::min(lo[out], cur[out]);
  }
  std::vector<std::uint32_t> spread(k);
  for (unsigned a = 0; a < k; ++a) spread[a] = hi[a] - lo[a];
  return spread;
}

std::uint32_t prefix_window_deviation(const PrefixBuffer& buf, std::size_t n) {
  check_window(buf, n);
  std::string_view w = buf.letters();
  unsigned k = buf.alphabet_size();
  ParikhVector ref = parikh(w.substr(0, n), k);
  ParikhVector cur = ref;
  std::uint32_t dev = 0;
  for (std::size_t i = n; i < w.size(); ++i) {
    ++cur[Letter(w[i])];
    --cur[Letter(w[i - n])];
    dev = std::max(dev, linf_distance(cur, ref));
  }
  return dev;
}

}  // namespace abw
