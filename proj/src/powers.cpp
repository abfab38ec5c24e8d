#include "abwords/powers.hpp"

#include <algorithm>

namespace abw {

namespace {

void check_block(const ParikhPrefixSums& sums, std::size_t pos, std::uint32_t m) {
  if (m < 1) throw std::invalid_argument("period must be >= 1");
  if (pos + m > sums.length())
    throw std::out_of_range("first block does not fit in the buffer");
}

}  // namespace

MaxPowerResult max_abelian_power_at(const ParikhPrefixSums& sums, std::size_t pos,
                                    std::uint32_t m) {
  check_block(sums, pos, m);
  std::uint32_t k = 1;
  while (pos + std::size_t(k + 1) * m <= sums.length() &&
         sums.blocks_equal(pos, pos + std::size_t(k) * m, m))
    ++k;
  bool truncated = pos + std::size_t(k + 1) * m > sums.length();
  return {k, truncated};
}

bool abelian_power_at(const ParikhPrefixSums& sums, std::size_t pos, std::uint32_t m,
                      std::uint32_t k) {
  check_block(sums, pos, m);
  if (pos + std::size_t(k) * m > sums.length()) return false;
  for (std::uint32_t i = 1; i < k; ++i)
    if (!sums.blocks_equal(pos, pos + std::size_t(i) * m, m)) return false;
  return true;
}

std::optional<std::uint32_t> min_period_for_k(const ParikhPrefixSums& sums,
                                              std::size_t pos, std::uint32_t k,
                                              std::uint32_t m_max) {
  if (k < 1) throw std::invalid_argument("exponent must be >= 1");
  for (std::uint32_t m = 1; m <= m_max; ++m) {
    if (pos + std::size_t(k) * m > sums.length()) break;
    if (abelian_power_at(sums, pos, m, k)) return m;
  }
  return std::nullopt;
}

std::optional<PowerHit> abelian_power_violation(const ParikhPrefixSums& sums,
                                                std::uint32_t k, std::uint32_t m_max,
                                                bool parallel) {
  if (k < 2) throw std::invalid_argument("exponent must be >= 2");
  std::size_t L = sums.length();
  // Chunked scan: positions inside a chunk run in parallel, chunks in order,
  // so the first hit in (position, period) order is returned regardless of
  // scheduling.
  const std::size_t chunk = 4096;
  std::vector<std::uint32_t> hit(chunk);
  for (std::size_t base = 0; base < L; base += chunk) {
    std::size_t top = std::min(base + chunk, L);
    std::fill(hit.begin(), hit.end(), 0);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (long long p = (long long)base; p < (long long)top; ++p) {
      std::size_t pos = std::size_t(p);
      for (std::uint32_t m = 1; m <= m_max; ++m) {
        if (pos + std::size_t(k) * m > L) break;
        if (abelian_power_at(sums, pos, m, k)) {
          hit[pos - base] = m;
          break;
        }
      }
    }
    for (std::size_t pos = base; pos < top; ++pos)
      if (hit[pos - base]) return PowerHit{pos, hit[pos - base], k};
  }
  return std::nullopt;
}

PositionPowerReport position_coverage_report(const WordSpec& spec, std::uint32_t k,
                                             std::size_t N, std::uint32_t m_max,
                                             const StabilizationPolicy& pol) {
  if (k < 1 || m_max < 1 || N < 1)
    throw std::invalid_argument("coverage report needs k, N, m_max >= 1");
  std::size_t L = N + std::size_t(k) * m_max;
  PrefixBuffer buf = materialize(spec, L, pol.capacity);
  ParikhPrefixSums sums(buf);
  PositionPowerReport rep;
  rep.spec = spec.to_string();
  rep.k = k;
  rep.positions = N;
  rep.m_max = m_max;
  rep.entries.resize(N);
#pragma omp parallel for schedule(dynamic, 64) if (pol.parallel)
  for (long long p = 0; p < (long long)N; ++p) {
    std::size_t pos = std::size_t(p);
    rep.entries[pos].pos = pos;
    rep.entries[pos].min_period = min_period_for_k(sums, pos, k, m_max);
    rep.entries[pos].truncated = pos + std::size_t(k) * m_max > L;
  }
  return rep;
}

CoverResult two_period_cover(const PositionPowerReport& report,
                             const StabilizationPolicy& pol, bool covering) {
  WordSpec spec = WordSpec::parse(report.spec);
  std::size_t N = report.positions;
  std::uint32_t k = report.k, m_max = report.m_max;
  std::size_t L = N + std::size_t(k) * m_max;
  PrefixBuffer buf = materialize(spec, L, pol.capacity);
  ParikhPrefixSums sums(buf);

  // works[l] = bitset over positions where period l yields a k-power.
  std::size_t words = (N + 63) / 64;
  std::vector<std::vector<std::uint64_t>> works(m_max + 1);
  std::vector<char> candidate(m_max + 1, 0);
#pragma omp parallel for schedule(dynamic) if (pol.parallel)
  for (long long l = 1; l <= (long long)m_max; ++l) {
    std::vector<std::uint64_t> bits(words, 0);
    bool any = false;
    if (!covering) {
      for (std::size_t pos = 0; pos < N; ++pos) {
        if (abelian_power_at(sums, pos, std::uint32_t(l), k)) {
          bits[pos / 64] |= std::uint64_t(1) << (pos % 64);
          any = true;
        }
      }
    } else {
      // pos counts when some power's span [q, q + k*l) contains it, i.e.
      // a start lies in [pos - k*l + 1, pos]; prefix counts of starts make
      // that a range query.
      std::vector<std::uint32_t> starts(N + 1, 0);
      for (std::size_t pos = 0; pos < N; ++pos)
        starts[pos + 1] =
            starts[pos] + abelian_power_at(sums, pos, std::uint32_t(l), k);
      std::size_t span = std::size_t(k) * std::size_t(l);
      for (std::size_t pos = 0; pos < N; ++pos) {
        std::size_t lo = pos + 1 >= span ? pos + 1 - span : 0;
        if (starts[pos + 1] > starts[lo]) {
          bits[pos / 64] |= std::uint64_t(1) << (pos % 64);
          any = true;
        }
      }
    }
    works[std::size_t(l)] = std::move(bits);
    candidate[std::size_t(l)] = any;
  }

  std::uint64_t tail = (N % 64) ? ((std::uint64_t(1) << (N % 64)) - 1) : ~std::uint64_t(0);
  auto covers = [&](std::uint32_t a, std::uint32_t b, std::vector<std::size_t>* gaps) {
    bool full = true;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t mask = (i + 1 == words) ? tail : ~std::uint64_t(0);
      std::uint64_t missing = mask & ~(works[a][i] | works[b][i]);
      if (!missing) continue;
      full = false;
      if (!gaps) return false;
      for (unsigned bit = 0; bit < 64; ++bit)
        if (missing & (std::uint64_t(1) << bit)) gaps->push_back(i * 64 + bit);
    }
    return full;
  };

  for (std::uint32_t a = 1; a <= m_max; ++a) {
    if (!candidate[a]) continue;
    for (std::uint32_t b = a; b <= m_max; ++b) {
      if (!candidate[b]) continue;
      if (covers(a, b, nullptr)) return {std::make_pair(a, b), {}};
    }
  }

  CoverResult res;
  // No pair covers. Positions reached by no candidate period at all are the
  // provable blockers; otherwise report the leftovers of the best pair.
  std::vector<std::uint64_t> any(words, 0);
  for (std::uint32_t l = 1; l <= m_max; ++l)
    if (candidate[l])
      for (std::size_t i = 0; i < words; ++i) any[i] |= works[l][i];
  for (std::size_t pos = 0; pos < N; ++pos)
    if (!(any[pos / 64] >> (pos % 64) & 1)) res.uncovered.push_back(pos);
  if (!res.uncovered.empty()) return res;

  std::size_t best_count = N + 1;
  std::pair<std::uint32_t, std::uint32_t> best{0, 0};
  for (std::uint32_t a = 1; a <= m_max; ++a) {
    if (!candidate[a]) continue;
    for (std::uint32_t b = a; b <= m_max; ++b) {
      if (!candidate[b]) continue;
      std::vector<std::size_t> gaps;
      covers(a, b, &gaps);
      if (gaps.size() < best_count) {
        best_count = gaps.size();
        best = {a, b};
      }
    }
  }
  covers(best.first, best.second, &res.uncovered);
  return res;
}

std::optional<std::size_t> fixed_period_falsifier(const WordSpec& spec, std::uint32_t m,
                                                  std::size_t N, std::uint32_t k_cap,
                                                  const StabilizationPolicy& pol) {
  if (m < 1 || k_cap < 2 || N < 1)
    throw std::invalid_argument("falsifier needs m >= 1, k_cap >= 2, N >= 1");
  std::size_t L = N + std::size_t(k_cap) * m;
  PrefixBuffer buf = materialize(spec, L, pol.capacity);
  ParikhPrefixSums sums(buf);
  for (std::size_t pos = 0; pos < N; ++pos)
    if (!abelian_power_at(sums, pos, m, k_cap)) return pos;
  return std::nullopt;
}

DoublingCheckReport period_doubling_check(const WordSpec& spec, std::uint32_t k,
                                          std::size_t N, std::uint32_t m_max,
                                          const StabilizationPolicy& pol) {
  if (spec.alphabet_size() > 2)
    throw std::invalid_argument("period doubling check expects a binary word");
  if (k < 2 || m_max < 1 || N < 1)
    throw std::invalid_argument("doubling check needs k >= 2, N >= 1, m_max >= 1");
  std::size_t L = N + std::size_t(k) * m_max;
  PrefixBuffer base = materialize(spec, L, pol.capacity);
  WordSpec doubled = WordSpec::image(Morphism::parse("pdbl"), spec);
  PrefixBuffer img = materialize(doubled, 2 * L, pol.capacity);
  ParikhPrefixSums base_sums(base), img_sums(img);

  DoublingCheckReport rep;
  for (std::size_t j = 0; j < N; ++j) {
    for (std::uint32_t l = 1; l <= m_max; ++l) {
      if (j + std::size_t(k) * l > L) break;
      if (!abelian_power_at(base_sums, j, l, k)) continue;
      ++rep.implications_checked;
      if (!abelian_power_at(img_sums, 2 * j, 2 * l, k)) {
        rep.failures.emplace_back(j, l);
        rep.holds = false;
      }
    }
  }
  return rep;
}

}  // namespace abw
