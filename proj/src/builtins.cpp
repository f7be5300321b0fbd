#include "tkms/builtins.hpp"

namespace tkms {

namespace {

IntMat make(std::vector<std::vector<long>> rows) {
  IntMat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

std::optional<TwoGraphSkeleton> builtin_skeleton(const std::string& name) {
  if (name == "paper-2vertex") {
    TwoGraphSkeleton g;
    g.vertices = {"u", "v"};
    g.blue = make({{2, 6}, {0, 0}});
    g.red = make({{6, 18}, {0, 0}});
    return g;
  }
  if (name == "paper-3vertex") {
    TwoGraphSkeleton g;
    g.vertices = {"u", "v", "w"};
    g.blue = make({{2, 6, 1}, {0, 0, 0}, {0, 0, 0}});
    g.red = make({{6, 18, 0}, {0, 0, 1}, {0, 0, 0}});
    return g;
  }
  if (name == "paper-4vertex") {
    TwoGraphSkeleton g;
    g.vertices = {"u", "v", "w", "x"};
    g.blue = make({{2, 6, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 12}, {0, 0, 0, 8}});
    g.red = make({{6, 18, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 18}, {0, 0, 0, 12}});
    return g;
  }
  return std::nullopt;
}

std::vector<std::string> builtin_names() {
  return {"paper-2vertex", "paper-3vertex", "paper-4vertex"};
}

}  // namespace tkms
