#pragma once

#include <string>

#include "tkms/skeleton.hpp"

namespace tkms {

/// Parses the skeleton document format:
///   { "vertices": ["u", "v"], "blue": [[2, 6], [0, 0]], "red": [[6, 18], [0, 0]] }
/// Matrix rows follow vertex order. Entries must be JSON integers; floats are
/// rejected. Throws structural_error with line context on malformed input.
TwoGraphSkeleton parse_skeleton(const std::string& text);

TwoGraphSkeleton load_skeleton_file(const std::string& path);

std::string skeleton_to_json_text(const TwoGraphSkeleton& g);

}  // namespace tkms
