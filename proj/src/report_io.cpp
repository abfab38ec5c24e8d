#include "abwords/report_io.hpp"

#include <charconv>

namespace abw {

namespace {

std::string entries_csv(const std::vector<ProfileEntry>& entries) {
  std::string out = "n,value,stabilized,L_used\n";
  for (const ProfileEntry& e : entries) {
    out += std::to_string(e.n);
    out.push_back(',');
    out += std::to_string(e.value);
    out.push_back(',');
    out += e.stabilized ? "true" : "false";
    out.push_back(',');
    out += std::to_string(e.prefix_length);
    out.push_back('\n');
  }
  return out;
}

Json entries_json(const std::vector<ProfileEntry>& entries) {
  Json arr = Json::array();
  for (const ProfileEntry& e : entries)
    arr.push_back({{"n", e.n},
                   {"value", e.value},
                   {"stabilized", e.stabilized},
                   {"L_used", e.prefix_length}});
  return arr;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(sep, pos);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(pos, end - pos));
    if (end == s.size()) break;
    pos = end + 1;
  }
  return out;
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("invalid integer field '" + std::string(s) + "'");
  return v;
}

bool parse_bool(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument("invalid boolean field '" + std::string(s) + "'");
}

std::vector<ProfileEntry> entries_from_csv(std::string_view text) {
  std::vector<ProfileEntry> entries;
  bool header = true;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty()) continue;
    if (header) {
      if (line != "n,value,stabilized,L_used")
        throw std::invalid_argument("unexpected profile CSV header");
      header = false;
      continue;
    }
    auto f = split(line, ',');
    if (f.size() != 4) throw std::invalid_argument("malformed profile CSV row");
    entries.push_back({std::uint32_t(parse_u64(f[0])), parse_u64(f[1]),
                       parse_bool(f[2]), parse_u64(f[3])});
  }
  return entries;
}

std::vector<ProfileEntry> entries_from_json(const Json& arr) {
  std::vector<ProfileEntry> entries;
  for (const Json& e : arr)
    entries.push_back({e.at("n").get<std::uint32_t>(),
                       e.at("value").get<std::uint64_t>(),
                       e.at("stabilized").get<bool>(),
                       e.at("L_used").get<std::uint64_t>()});
  return entries;
}

Json vector_json(const ParikhVector& v) {
  Json arr = Json::array();
  for (std::uint32_t c : v) arr.push_back(c);
  return arr;
}

ParikhVector vector_from_json(const Json& arr) {
  ParikhVector v;
  for (const Json& c : arr) v.push_back(c.get<std::uint32_t>());
  return v;
}

}  // namespace

std::string to_csv(const ComplexityProfile& p) { return entries_csv(p.entries); }
std::string to_csv(const FactorProfile& p) { return entries_csv(p.entries); }
std::string to_csv(const DeviationProfile& p) { return entries_csv(p.entries); }

std::string to_csv(const BalanceProfile& p) {
  std::string out = "n";
  for (unsigned a = 0; a < p.alphabet_size; ++a)
    out += ",spread_" + std::to_string(a);
  out += ",stabilized,L_used\n";
  for (const BalanceEntry& e : p.entries) {
    out += std::to_string(e.n);
    for (std::uint32_t s : e.spreads) {
      out.push_back(',');
      out += std::to_string(s);
    }
    out.push_back(',');
    out += e.stabilized ? "true" : "false";
    out.push_back(',');
    out += std::to_string(e.prefix_length);
    out.push_back('\n');
  }
  return out;
}

std::string to_csv(const PositionPowerReport& r) {
  std::string out = "pos,min_period,k,truncated\n";
  for (const PositionEntry& e : r.entries) {
    out += std::to_string(e.pos);
    out.push_back(',');
    if (e.min_period) out += std::to_string(*e.min_period);
    out.push_back(',');
    out += std::to_string(r.k);
    out.push_back(',');
    out += e.truncated ? "true" : "false";
    out.push_back('\n');
  }
  return out;
}

Json to_json(const ComplexityProfile& p) {
  return {{"spec", p.spec}, {"entries", entries_json(p.entries)}};
}
Json to_json(const FactorProfile& p) {
  return {{"spec", p.spec}, {"entries", entries_json(p.entries)}};
}
Json to_json(const DeviationProfile& p) {
  return {{"spec", p.spec}, {"entries", entries_json(p.entries)}};
}

Json to_json(const BalanceProfile& p) {
  Json arr = Json::array();
  for (const BalanceEntry& e : p.entries) {
    Json spreads = Json::array();
    for (std::uint32_t s : e.spreads) spreads.push_back(s);
    arr.push_back({{"n", e.n},
                   {"spreads", spreads},
                   {"stabilized", e.stabilized},
                   {"L_used", e.prefix_length}});
  }
  return {{"spec", p.spec}, {"c_estimate", p.c_estimate}, {"entries", arr}};
}

Json to_json(const PositionPowerReport& r) {
  Json arr = Json::array();
  for (const PositionEntry& e : r.entries) {
    Json row = {{"pos", e.pos}, {"truncated", e.truncated}};
    row["min_period"] = e.min_period ? Json(*e.min_period) : Json(nullptr);
    arr.push_back(std::move(row));
  }
  return {{"spec", r.spec},
          {"k", r.k},
          {"positions", r.positions},
          {"m_max", r.m_max},
          {"entries", arr}};
}

Json to_json(const CoverResult& r) {
  Json out;
  out["l1"] = r.periods ? Json(r.periods->first) : Json(nullptr);
  out["l2"] = r.periods ? Json(r.periods->second) : Json(nullptr);
  out["uncovered"] = r.uncovered;
  return out;
}

Json to_json(const CentralReport& r) {
  Json central = Json::array();
  for (const ParikhVector& v : r.central) central.push_back(vector_json(v));
  Json spectrum = Json::array();
  for (const ParikhVector& v : r.spectrum) spectrum.push_back(vector_json(v));
  return {{"n", r.n},
          {"found_special", r.found_special},
          {"special_factor", to_text(r.special_factor)},
          {"central", central},
          {"spectrum", spectrum},
          {"max_pairwise_norm", r.max_pairwise_norm},
          {"central_in_spectrum", r.central_in_spectrum},
          {"diameter_le2", r.diameter_le2},
          {"cardinality_le7", r.cardinality_le7},
          {"verified", r.verified}};
}

Json to_json(const RightSpecialReport& r) {
  Json arr = Json::array();
  for (const RightSpecial& s : r.specials)
    arr.push_back({{"factor", to_text(s.factor)}, {"extensions", to_text(s.extensions)}});
  return {{"n", r.n},
          {"stabilized", r.stabilized},
          {"L_used", r.prefix_length},
          {"specials", arr}};
}

ComplexityProfile complexity_profile_from_csv(std::string_view text) {
  ComplexityProfile p;
  p.entries = entries_from_csv(text);
  return p;
}

ComplexityProfile complexity_profile_from_json(const Json& j) {
  ComplexityProfile p;
  p.spec = j.at("spec").get<std::string>();
  p.entries = entries_from_json(j.at("entries"));
  return p;
}

BalanceProfile balance_profile_from_csv(std::string_view text) {
  BalanceProfile p;
  bool header = true;
  unsigned k = 0;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty()) continue;
    auto f = split(line, ',');
    if (header) {
      if (f.size() < 4 || f.front() != "n" || f.back() != "L_used")
        throw std::invalid_argument("unexpected balance CSV header");
      k = unsigned(f.size() - 3);
      header = false;
      continue;
    }
    if (f.size() != std::size_t(k) + 3)
      throw std::invalid_argument("malformed balance CSV row");
    BalanceEntry e;
    e.n = std::uint32_t(parse_u64(f[0]));
    for (unsigned a = 0; a < k; ++a)
      e.spreads.push_back(std::uint32_t(parse_u64(f[1 + a])));
    e.stabilized = parse_bool(f[k + 1]);
    e.prefix_length = parse_u64(f[k + 2]);
    p.entries.push_back(std::move(e));
  }
  p.alphabet_size = k;
  return p;
}

BalanceProfile balance_profile_from_json(const Json& j) {
  BalanceProfile p;
  p.spec = j.at("spec").get<std::string>();
  p.c_estimate = j.at("c_estimate").get<std::uint32_t>();
  for (const Json& e : j.at("entries")) {
    BalanceEntry be;
    be.n = e.at("n").get<std::uint32_t>();
    for (const Json& s : e.at("spreads"))
      be.spreads.push_back(s.get<std::uint32_t>());
    be.stabilized = e.at("stabilized").get<bool>();
    be.prefix_length = e.at("L_used").get<std::uint64_t>();
    p.entries.push_back(std::move(be));
  }
  if (!p.entries.empty()) p.alphabet_size = unsigned(p.entries[0].spreads.size());
  return p;
}

PositionPowerReport position_report_from_csv(std::string_view text) {
  PositionPowerReport r;
  bool header = true;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty()) continue;
    if (header) {
      if (line != "pos,min_period,k,truncated")
        throw std::invalid_argument("unexpected position report CSV header");
      header = false;
      continue;
    }
    auto f = split(line, ',');
    if (f.size() != 4) throw std::invalid_argument("malformed position report CSV row");
    PositionEntry e;
    e.pos = parse_u64(f[0]);
    if (!f[1].empty()) e.min_period = std::uint32_t(parse_u64(f[1]));
    r.k = std::uint32_t(parse_u64(f[2]));
    e.truncated = parse_bool(f[3]);
    r.entries.push_back(e);
  }
  r.positions = r.entries.size();
  return r;
}

PositionPowerReport position_report_from_json(const Json& j) {
  PositionPowerReport r;
  r.spec = j.at("spec").get<std::string>();
  r.k = j.at("k").get<std::uint32_t>();
  r.positions = j.at("positions").get<std::size_t>();
  r.m_max = j.at("m_max").get<std::uint32_t>();
  for (const Json& e : j.at("entries")) {
    PositionEntry pe;
    pe.pos = e.at("pos").get<std::size_t>();
    if (!e.at("min_period").is_null())
      pe.min_period = e.at("min_period").get<std::uint32_t>();
    pe.truncated = e.at("truncated").get<bool>();
    r.entries.push_back(pe);
  }
  return r;
}

CoverResult cover_result_from_json(const Json& j) {
  CoverResult r;
  if (!j.at("l1").is_null())
    r.periods = {j.at("l1").get<std::uint32_t>(), j.at("l2").get<std::uint32_t>()};
  for (const Json& p : j.at("uncovered")) r.uncovered.push_back(p.get<std::size_t>());
  return r;
}

CentralReport central_report_from_json(const Json& j) {
  CentralReport r;
  r.n = j.at("n").get<std::uint32_t>();
  r.found_special = j.at("found_special").get<bool>();
  r.special_factor = from_text(j.at("special_factor").get<std::string>());
  for (unsigned a = 0; a < 3; ++a) r.central[a] = vector_from_json(j.at("central")[a]);
  for (const Json& v : j.at("spectrum")) r.spectrum.push_back(vector_from_json(v));
  r.max_pairwise_norm = j.at("max_pairwise_norm").get<std::uint32_t>();
  r.central_in_spectrum = j.at("central_in_spectrum").get<bool>();
  r.diameter_le2 = j.at("diameter_le2").get<bool>();
  r.cardinality_le7 = j.at("cardinality_le7").get<bool>();
  r.verified = j.at("verified").get<bool>();
  return r;
}

}  // namespace abw
