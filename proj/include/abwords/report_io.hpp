#pragma once

#include "json.hpp"

#include "abwords/factors.hpp"
#include "abwords/powers.hpp"
#include "abwords/profile.hpp"

namespace abw {

using Json = nlohmann::json;

// CSV tables carry a header row; profile-shaped tables use
//   n,value,stabilized,L_used
// and position reports use
//   pos,min_period,k,truncated
// with an empty min_period field when no period within the bound worked.

std::string to_csv(const ComplexityProfile& p);
std::string to_csv(const FactorProfile& p);
std::string to_csv(const DeviationProfile& p);
std::string to_csv(const BalanceProfile& p);
std::string to_csv(const PositionPowerReport& r);

Json to_json(const ComplexityProfile& p);
Json to_json(const FactorProfile& p);
Json to_json(const DeviationProfile& p);
Json to_json(const BalanceProfile& p);
Json to_json(const PositionPowerReport& r);
Json to_json(const CoverResult& r);
Json to_json(const CentralReport& r);
Json to_json(const RightSpecialReport& r);

ComplexityProfile complexity_profile_from_csv(std::string_view text);
ComplexityProfile complexity_profile_from_json(const Json& j);
BalanceProfile balance_profile_from_csv(std::string_view text);
BalanceProfile balance_profile_from_json(const Json& j);
PositionPowerReport position_report_from_csv(std::string_view text);
PositionPowerReport position_report_from_json(const Json& j);
CoverResult cover_result_from_json(const Json& j);
CentralReport central_report_from_json(const Json& j);

}  // namespace abw
