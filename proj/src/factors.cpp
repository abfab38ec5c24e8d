#include "abwords/factors.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace abw {

namespace {

// Doubling protocol for a single summary (same policy as the per-n engine).
template <class Summary>
struct SingleRounds {
  Summary value;
  bool stable;
  std::uint64_t prefix_length;
};

template <class Summary, class Fn>
SingleRounds<Summary> stabilize_single(const WordSpec& spec, std::size_t initial,
                                       const StabilizationPolicy& pol, Fn&& fn) {
  std::size_t L = pol.initial_length ? pol.initial_length : initial;
  L = std::max<std::size_t>(L, 64);
  if (L > pol.capacity) L = pol.capacity;
  if (L == 0) throw CapacityError("capacity cap leaves no room for a prefix");
  Summary prev = fn(materialize(spec, L, pol.capacity));
  bool stable = false;
  std::uint64_t used = L;
  while (L <= pol.capacity / 2) {
    L *= 2;
    Summary cur = fn(materialize(spec, L, pol.capacity));
    used = L;
    stable = (cur == prev);
    prev = std::move(cur);
    if (stable) break;
  }
  return {std::move(prev), stable, used};
}

}  // namespace

std::vector<Word> distinct_windows(const PrefixBuffer& buf, std::uint32_t n,
                                   std::size_t byte_cap) {
  std::string_view w = buf.letters();
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    seen.insert(w.substr(i, n));
    if (seen.size() * std::size_t(n) > byte_cap)
      throw CapacityError("factor set exceeds the capacity cap");
  }
  std::vector<Word> out;
  out.reserve(seen.size());
  for (std::string_view f : seen) out.emplace_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<RightSpecial> specials_in(const PrefixBuffer& buf, std::uint32_t n) {
  std::string_view w = buf.letters();
  std::vector<RightSpecial> out;
  if (n == 0) {
    bool present[kMaxAlphabet + 1] = {};
    for (char b : w) present[Letter(b)] = true;
    Word ext;
    for (unsigned a = 0; a <= kMaxAlphabet; ++a)
      if (present[a]) ext.push_back(char(a));
    if (ext.size() >= 2) out.push_back({Word(), ext});
    return out;
  }
  if (w.size() < std::size_t(n) + 1) return out;
  std::map<std::string_view, std::array<bool, kMaxAlphabet + 1>> follows;
  for (std::size_t i = 0; i + n < w.size(); ++i)
    follows[w.substr(i, n)][Letter(w[i + n])] = true;
  for (auto& [factor, mask] : follows) {
    Word ext;
    for (unsigned a = 0; a <= kMaxAlphabet; ++a)
      if (mask[a]) ext.push_back(char(a));
    if (ext.size() >= 2) out.push_back({Word(factor), ext});
  }
  return out;
}

// Double polynomial rolling hash; O(1) window hashes after O(L) setup.
class WindowHasher {
 public:
  explicit WindowHasher(std::string_view w) {
    std::size_t L = w.size();
    h1_.resize(L + 1);
    h2_.resize(L + 1);
    p1_.resize(L + 1);
    p2_.resize(L + 1);
    h1_[0] = h2_[0] = 0;
    p1_[0] = p2_[0] = 1;
    for (std::size_t i = 0; i < L; ++i) {
      std::uint64_t c = Letter(w[i]) + 1;
      h1_[i + 1] = std::uint32_t((std::uint64_t(h1_[i]) * kB1 + c) % kM1);
      h2_[i + 1] = std::uint32_t((std::uint64_t(h2_[i]) * kB2 + c) % kM2);
      p1_[i + 1] = std::uint32_t(std::uint64_t(p1_[i]) * kB1 % kM1);
      p2_[i + 1] = std::uint32_t(std::uint64_t(p2_[i]) * kB2 % kM2);
    }
  }

  std::uint64_t window(std::size_t i, std::size_t m) const {
    std::uint64_t a =
        (h1_[i + m] + kM1 - std::uint64_t(h1_[i]) * p1_[m] % kM1) % kM1;
    std::uint64_t b =
        (h2_[i + m] + kM2 - std::uint64_t(h2_[i]) * p2_[m] % kM2) % kM2;
    return a * kM2 + b;
  }

 private:
  static constexpr std::uint64_t kM1 = 1000000007, kM2 = 1000000009;
  static constexpr std::uint64_t kB1 = 131, kB2 = 137;
  std::vector<std::uint32_t> h1_, h2_, p1_, p2_;
};

// Spectrum plus the first right special factor of length n-1, which is what
// the central check consumes. Hash-scan first; on any verification mismatch
// (a hash collision) fall back to exact map grouping.
struct CentralCore {
  std::vector<ParikhVector> spectrum;
  bool found = false;
  Word factor;

  bool operator==(const CentralCore&) const = default;
};

CentralCore central_core(const PrefixBuffer& buf, const WindowHasher& hasher,
                         std::uint32_t n) {
  CentralCore core;
  core.spectrum = window_spectrum(buf, n);
  std::string_view w = buf.letters();
  std::uint32_t m = n - 1;
  if (m == 0) {
    std::vector<RightSpecial> sp = specials_in(buf, 0);
    if (!sp.empty()) {
      core.found = true;
      core.factor = sp[0].factor;
    }
    return core;
  }
  if (w.size() < std::size_t(m) + 1) return core;

  struct Cand {
    std::size_t first_pos;
    std::uint32_t mask;
  };
  std::unordered_map<std::uint64_t, Cand> buckets;
  buckets.reserve(w.size());
  for (std::size_t i = 0; i + m < w.size(); ++i) {
    auto [it, fresh] = buckets.try_emplace(hasher.window(i, m), Cand{i, 0});
    Letter ext = Letter(w[i + m]);
    it->second.mask |= ext < 32 ? (1u << ext) : 0x80000000u;
  }

  std::vector<std::pair<std::size_t, std::uint64_t>> candidates;
  for (auto& [h, c] : buckets)
    if (std::popcount(c.mask) >= 2) candidates.emplace_back(c.first_pos, h);
  std::sort(candidates.begin(), candidates.end());

  for (auto& [pos, h] : candidates) {
    std::uint32_t verified = 0;
    bool collision = false;
    for (std::size_t i = 0; i + m < w.size(); ++i) {
      if (hasher.window(i, m) != h) continue;
      if (std::memcmp(w.data() + i, w.data() + pos, m) != 0) {
        collision = true;
        break;
      }
      Letter ext = Letter(w[i + m]);
      verified |= ext < 32 ? (1u << ext) : 0x80000000u;
    }
    if (collision) {
      // Exact regrouping; reachable only if the double hash collided.
      std::vector<RightSpecial> sp = specials_in(buf, m);
      if (!sp.empty()) {
        core.found = true;
        core.factor = sp[0].factor;
      }
      return core;
    }
    if (std::popcount(verified) >= 2) {
      core.found = true;
      core.factor = Word(w.substr(pos, m));
      return core;
    }
  }
  return core;
}

CentralReport make_central_report(std::uint32_t n, const CentralCore& core,
                                  bool stable) {
  CentralReport rep;
  rep.n = n;
  rep.spectrum = core.spectrum;
  rep.found_special = core.found;
  rep.special_factor = core.factor;
  rep.verified = stable;
  if (!core.found) return rep;
  ParikhVector psi = parikh(rep.special_factor, 3);
  rep.central_in_spectrum = true;
  for (unsigned a = 0; a < 3; ++a) {
    ParikhVector v = psi;
    ++v[a];
    rep.central[a] = v;
    rep.central_in_spectrum =
        rep.central_in_spectrum &&
        std::binary_search(rep.spectrum.begin(), rep.spectrum.end(), v);
  }
  for (std::size_t i = 0; i < rep.spectrum.size(); ++i)
    for (std::size_t j = i + 1; j < rep.spectrum.size(); ++j)
      rep.max_pairwise_norm = std::max(
          rep.max_pairwise_norm, linf_distance(rep.spectrum[i], rep.spectrum[j]));
  rep.diameter_le2 = rep.max_pairwise_norm <= 2;
  rep.cardinality_le7 = rep.spectrum.size() <= 7;
  return rep;
}

WordSpec tribonacci_spec() { return WordSpec::parse("fix(tau,0)"); }

}  // namespace

FactorProfile factor_complexity_profile(const WordSpec& spec, std::uint32_t n_max,
                                        const StabilizationPolicy& pol) {
  std::size_t byte_cap = pol.capacity;
  auto rounds = detail::stabilize<std::vector<Word>>(
      spec, n_max, pol, [byte_cap](const PrefixBuffer& buf, std::uint32_t n) {
        return distinct_windows(buf, n, byte_cap);
      });
  FactorProfile out;
  out.spec = spec.to_string();
  out.alphabet_size = spec.alphabet_size();
  out.stabilized = rounds.all_stable;
  out.entries.reserve(n_max);
  for (std::uint32_t n = 1; n <= n_max; ++n)
    out.entries.push_back({n, rounds.per_n[n].size(), bool(rounds.stable[n]),
                           rounds.prefix_length});
  return out;
}

RightSpecialReport right_special_factors(const WordSpec& spec, std::uint32_t n,
                                         const StabilizationPolicy& pol) {
  auto rounds = stabilize_single<std::vector<RightSpecial>>(
      spec, std::max<std::size_t>(64, 8 * (std::size_t(n) + 1)), pol,
      [n](const PrefixBuffer& buf) { return specials_in(buf, n); });
  RightSpecialReport rep;
  rep.n = n;
  rep.stabilized = rounds.stable;
  rep.prefix_length = rounds.prefix_length;
  rep.specials = std::move(rounds.value);
  return rep;
}

CentralReport tribonacci_central_check(std::uint32_t n, const StabilizationPolicy& pol) {
  if (n < 1) throw std::invalid_argument("central check needs n >= 1");
  WordSpec spec = tribonacci_spec();
  auto rounds = stabilize_single<CentralCore>(
      spec, std::max<std::size_t>(64, 8 * std::size_t(n)), pol,
      [n](const PrefixBuffer& buf) {
        WindowHasher hasher(buf.letters());
        return central_core(buf, hasher, n);
      });
  return make_central_report(n, rounds.value, rounds.stable);
}

std::vector<CentralReport> tribonacci_central_range(std::uint32_t n_lo, std::uint32_t n_hi,
                                                    const StabilizationPolicy& pol) {
  if (n_lo < 1 || n_lo > n_hi)
    throw std::invalid_argument("central range needs 1 <= n_lo <= n_hi");
  WordSpec spec = tribonacci_spec();
  // One hasher per round, shared across the parallel n-loop.
  auto shared_rounds = detail::stabilize_rounds<CentralCore>(
      spec, n_hi, pol, [&pol, n_hi](const PrefixBuffer& buf) {
        WindowHasher hasher(buf.letters());
        std::vector<CentralCore> out(std::size_t(n_hi) + 1);
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (pol.parallel)
        for (long long n = 1; n <= (long long)n_hi; ++n) {
          try {
            out[std::size_t(n)] = central_core(buf, hasher, std::uint32_t(n));
          } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
          }
        }
        if (err) std::rethrow_exception(err);
        return out;
      });
  std::vector<CentralReport> out;
  out.reserve(n_hi - n_lo + 1);
  for (std::uint32_t n = n_lo; n <= n_hi; ++n)
    out.push_back(make_central_report(n, shared_rounds.per_n[n],
                                      bool(shared_rounds.stable[n])));
  return out;
}

}  // namespace abw
