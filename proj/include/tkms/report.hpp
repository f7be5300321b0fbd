#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tkms/ck.hpp"
#include "tkms/families.hpp"
#include "tkms/kms.hpp"

namespace tkms {

nlohmann::json number_to_json(const NumberRef& n);

nlohmann::json classify_to_json(const ClassifyReport& rep);
std::string classify_to_table(const ClassifyReport& rep);

nlohmann::json expansion_to_json(const TwoGraphSkeleton& g, const CkExpansion& ck);

nlohmann::json validation_to_json(const TwoGraphSkeleton& g, const ValidationReport& rep);

struct SweepRow {
  double beta = 0.0;
  bool supported = true;   // false when the regime pattern is uncertified
  std::string regime;      // "above-critical" | "critical" | "no-states" | "unsupported"
  int simplex_dimension = -1;
  std::vector<std::string> survivors;
};

nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

std::string identities_to_text(const std::vector<IdentityResult>& results);

}  // namespace tkms
