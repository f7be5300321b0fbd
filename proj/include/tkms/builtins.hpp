#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tkms/skeleton.hpp"

namespace tkms {

/// Named instances shipped with the library: "paper-2vertex", "paper-3vertex"
/// and "paper-4vertex".
std::optional<TwoGraphSkeleton> builtin_skeleton(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace tkms
