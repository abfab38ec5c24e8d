// Command-line front end: generate prefixes, run the analyses, export
// CSV/JSON, and run the reproduction suite. Exit codes: 0 ok, 1 a check
// failed or a resource cap was hit, 2 invalid input.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "abwords/reproduce.hpp"

namespace {

using namespace abw;

struct Options {
  std::string spec;
  std::uint64_t length = 0;
  std::uint32_t n_max = 0;
  std::uint32_t k = 2;
  std::uint32_t m_max = 0;
  std::uint64_t positions = 0;
  std::string format = "csv";
  std::string out;
  std::uint64_t cap = 0;  // 0 = default / environment
  bool serial = false;
  bool deviation = false;
  bool covering = false;
  std::uint32_t special_n = 0;
  std::vector<std::string> targets;
  bool list_targets = false;
};

std::uint64_t env_cap() {
  const char* s = std::getenv("ABWORDS_CAP");
  if (!s || !*s) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (!end || *end != '\0' || v == 0)
    throw std::invalid_argument("ABWORDS_CAP must be a positive integer");
  return v;
}

StabilizationPolicy make_policy(const Options& o) {
  StabilizationPolicy pol;
  std::uint64_t cap = o.cap ? o.cap : env_cap();
  if (cap) pol.capacity = cap;
  pol.parallel = !o.serial;
  return pol;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + out + "'");
  f << text;
  if (!f) throw std::runtime_error("write to '" + out + "' failed");
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

template <class Result>
void emit_table(const Result& r, const Options& o) {
  emit(o.format == "json" ? render_json(to_json(r)) : to_csv(r), o.out);
}

int cmd_gen(const Options& o) {
  StabilizationPolicy pol = make_policy(o);
  PrefixBuffer buf = materialize(WordSpec::parse(o.spec), o.length, pol.capacity);
  emit(to_text(buf.letters()) + "\n", o.out);
  return 0;
}

int cmd_abelian(const Options& o) {
  emit_table(abelian_complexity_profile(WordSpec::parse(o.spec), o.n_max,
                                        make_policy(o)),
             o);
  return 0;
}

int cmd_balance(const Options& o) {
  WordSpec spec = WordSpec::parse(o.spec);
  StabilizationPolicy pol = make_policy(o);
  if (o.deviation)
    emit_table(prefix_factor_balance(spec, o.n_max, pol), o);
  else
    emit_table(balance_profile(spec, o.n_max, pol), o);
  return 0;
}

int cmd_factors(const Options& o) {
  WordSpec spec = WordSpec::parse(o.spec);
  StabilizationPolicy pol = make_policy(o);
  if (o.special_n) {
    emit(render_json(to_json(right_special_factors(spec, o.special_n, pol))), o.out);
    return 0;
  }
  if (!o.n_max) {
    std::cerr << "factors needs --nmax or --special\n";
    return 2;
  }
  emit_table(factor_complexity_profile(spec, o.n_max, pol), o);
  return 0;
}

int cmd_powers(const Options& o) {
  WordSpec spec = WordSpec::parse(o.spec);
  StabilizationPolicy pol = make_policy(o);
  if (o.positions) {
    emit_table(position_coverage_report(spec, o.k, o.positions, o.m_max, pol), o);
    return 0;
  }
  PrefixBuffer buf = materialize(spec, o.length, pol.capacity);
  ParikhPrefixSums sums(buf);
  std::optional<PowerHit> hit = abelian_power_violation(sums, o.k, o.m_max, pol.parallel);
  Json j = {{"spec", spec.to_string()},
            {"k", o.k},
            {"m_max", o.m_max},
            {"length", buf.length()},
            {"hit", nullptr}};
  if (hit)
    j["hit"] = {{"pos", hit->position}, {"period", hit->period},
                {"exponent", hit->exponent}};
  emit(render_json(j), o.out);
  return 0;
}

int cmd_cover(const Options& o) {
  StabilizationPolicy pol = make_policy(o);
  PositionPowerReport report = position_coverage_report(
      WordSpec::parse(o.spec), o.k, o.positions, o.m_max, pol);
  emit(render_json(to_json(two_period_cover(report, pol, o.covering))), o.out);
  return 0;
}

int cmd_reproduce(const Options& o) {
  if (o.list_targets) {
    for (const std::string& id : reproduce_targets()) std::cout << id << "\n";
    return 0;
  }
  std::vector<std::string> ids =
      o.targets.empty() ? reproduce_targets() : o.targets;
  for (const std::string& id : ids)
    if (std::find(reproduce_targets().begin(), reproduce_targets().end(), id) ==
        reproduce_targets().end()) {
      std::cerr << "unknown reproduction target '" << id << "'\n";
      return 2;
    }
  StabilizationPolicy pol = make_policy(o);
  Json reports = Json::array();
  bool all_pass = true;
  for (const std::string& id : ids) {
    RunReport rep = run_reproduce(id, pol);
    const char* status = rep.status == ReproStatus::pass ? "pass"
                         : rep.status == ReproStatus::fail ? "FAIL"
                                                           : "inconclusive";
    std::cout << rep.target << ": " << status << " ("
              << std::uint64_t(rep.runtime_ms) << " ms)\n";
    if (rep.status != ReproStatus::pass) {
      all_pass = false;
      if (rep.status == ReproStatus::fail)
        std::cout << "  observed " << rep.observed.dump() << "\n  expected "
                  << rep.expected.dump() << "\n";
    }
    reports.push_back(to_json(rep));
  }
  if (!o.out.empty()) emit(render_json(reports), o.out);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prefix generation and abelian analysis of infinite words"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cap", o.cap, "letter capacity cap (env ABWORDS_CAP)");
    cmd->add_flag("--serial", o.serial, "disable parallel kernels");
    cmd->add_option("--out", o.out, "write output to a file instead of stdout");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("--spec", o.spec, "word spec, e.g. fix(tau,0)")->required();
  };

  CLI::App* gen = app.add_subcommand("gen", "print a prefix of the word");
  add_spec(gen);
  gen->add_option("--length", o.length, "prefix length")->required();
  add_common(gen);

  CLI::App* abelian = app.add_subcommand("abelian", "abelian complexity profile");
  add_spec(abelian);
  abelian->add_option("--nmax", o.n_max, "largest window length")->required();
  add_format(abelian);
  add_common(abelian);

  CLI::App* balance = app.add_subcommand("balance", "per-letter window spreads");
  add_spec(balance);
  balance->add_option("--nmax", o.n_max, "largest window length")->required();
  balance->add_flag("--deviation", o.deviation,
                    "prefix-vs-window deviation profile instead of spreads");
  add_format(balance);
  add_common(balance);

  CLI::App* factors = app.add_subcommand("factors", "factor complexity profile");
  add_spec(factors);
  factors->add_option("--nmax", o.n_max, "largest factor length");
  factors->add_option("--special", o.special_n,
                      "report right special factors of this length (JSON)");
  add_format(factors);
  add_common(factors);

  CLI::App* powers = app.add_subcommand("powers",
                                        "abelian power scan or per-position report");
  add_spec(powers);
  powers->add_option("--k", o.k, "exponent")->required();
  powers->add_option("--mmax", o.m_max, "largest period tested")->required();
  CLI::Option* opt_pos = powers->add_option(
      "--positions", o.positions, "per-position minimal periods for this many positions");
  powers->add_option("--length", o.length, "prefix length for the first-hit scan")
      ->excludes(opt_pos);
  add_format(powers);
  add_common(powers);

  CLI::App* cover = app.add_subcommand("cover", "two-period cover search");
  add_spec(cover);
  cover->add_option("--k", o.k, "exponent")->required();
  cover->add_option("--mmax", o.m_max, "largest period tested")->required();
  cover->add_option("--positions", o.positions, "positions surveyed")->required();
  cover->add_flag("--covering", o.covering,
                  "count a position as reached anywhere inside a power's span, "
                  "not only at its start");
  add_common(cover);

  CLI::App* reproduce = app.add_subcommand("reproduce", "run the scripted checks");
  reproduce->add_option("targets", o.targets, "target ids (default: all)");
  reproduce->add_flag("--list", o.list_targets, "list target ids and exit");
  add_common(reproduce);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(o);
    if (abelian->parsed()) return cmd_abelian(o);
    if (balance->parsed()) return cmd_balance(o);
    if (factors->parsed()) return cmd_factors(o);
    if (powers->parsed()) {
      if (!o.positions && !o.length) {
        std::cerr << "powers needs --positions or --length\n";
        return 2;
      }
      return cmd_powers(o);
    }
    if (cover->parsed()) return cmd_cover(o);
    if (reproduce->parsed()) return cmd_reproduce(o);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
