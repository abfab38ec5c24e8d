// Times the parallel kernels against the serial path and the naive recount
// on a few representative workloads, checking that all three agree.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "abwords/powers.hpp"
#include "abwords/profile.hpp"
#include "reference.hpp"

using namespace abw;

namespace {

template <class F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   t0)
      .count();
}

void row(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-28s %10.1f %10.1f %8.2fx   %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, agree ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
  std::uint32_t n_max = argc > 1 ? std::uint32_t(std::atoi(argv[1])) : 400;

  StabilizationPolicy ser, par;
  ser.parallel = false;
  par.parallel = true;

  std::printf("%-28s %10s %10s %9s\n", "workload", "serial ms", "parallel",
              "speedup");

  WordSpec tau = WordSpec::parse("fix(tau,0)");
  {
    ComplexityProfile a, b;
    double ts = time_ms([&] { a = abelian_complexity_profile(tau, n_max, ser); });
    double tp = time_ms([&] { b = abelian_complexity_profile(tau, n_max, par); });
    row("window classes", ts, tp, a.entries == b.entries);
  }
  {
    BalanceProfile a, b;
    double ts = time_ms([&] { a = balance_profile(tau, n_max, ser); });
    double tp = time_ms([&] { b = balance_profile(tau, n_max, par); });
    row("letter spreads", ts, tp, a.entries == b.entries);
  }
  {
    WordSpec mu = WordSpec::parse("fix(mu,0)");
    PositionPowerReport a, b;
    double ts = time_ms(
        [&] { a = position_coverage_report(mu, 4, 4 * n_max, 64, ser); });
    double tp = time_ms(
        [&] { b = position_coverage_report(mu, 4, 4 * n_max, 64, par); });
    row("per-position powers", ts, tp, a.entries == b.entries);
  }

  // Naive recount on a prefix small enough for the quadratic loop.
  {
    PrefixBuffer buf = materialize(tau, 20000, kDefaultCapacity);
    std::uint32_t lim = std::min<std::uint32_t>(n_max, 120);
    std::vector<std::uint64_t> fast(lim), slow(lim);
    double tf = time_ms([&] {
      for (std::uint32_t n = 1; n <= lim; ++n)
        fast[n - 1] = window_spectrum_size(buf, n);
    });
    double tn = time_ms([&] {
      for (std::uint32_t n = 1; n <= lim; ++n)
        slow[n - 1] = ref::complexity(buf.letters(), n, buf.alphabet_size());
    });
    std::printf("%-28s %10.1f %10.1f %8.2fx   %s\n", "sliding vs naive recount",
                tn, tf, tf > 0 ? tn / tf : 0.0,
                fast == slow ? "agree" : "DISAGREE");
  }
  return 0;
}
