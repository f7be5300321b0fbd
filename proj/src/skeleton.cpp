#include "tkms/skeleton.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tkms {

ValidationReport validate(const TwoGraphSkeleton& g) {
  const std::size_t n = g.vertices.size();
  for (int color : {1, 2}) {
    const IntMat& a = g.matrix(color);
    if (a.rows() != n || a.cols() != n)
      throw structural_error("vertex matrix for color " + std::to_string(color) +
                             " is not |V| x |V|");
  }
  std::set<std::string> seen;
  for (const auto& id : g.vertices)
    if (!seen.insert(id).second) throw structural_error("duplicate vertex id: " + id);

  ValidationReport rep;
  for (int color : {1, 2}) {
    const IntMat& a = g.matrix(color);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a(i, j) < 0)
          rep.violations.push_back({"negative-entry", color, i, j,
                                    "entry (" + g.vertices[i] + "," + g.vertices[j] + ") = " +
                                        a(i, j).get_str()});
  }
  const IntMat ab = g.blue * g.red;
  const IntMat ba = g.red * g.blue;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (ab(i, j) != ba(i, j))
        rep.violations.push_back({"commutation", 0, i, j,
                                  "(A1A2)(" + g.vertices[i] + "," + g.vertices[j] + ") = " +
                                      ab(i, j).get_str() + " but (A2A1) = " + ba(i, j).get_str()});
  return rep;
}

void require_valid(const TwoGraphSkeleton& g) {
  auto rep = validate(g);
  if (!rep.valid())
    throw std::invalid_argument("skeleton fails validation: " + rep.violations.front().detail);
}

BigInt path_count(const TwoGraphSkeleton& g, Degree n, std::size_t v, std::size_t w,
                  std::uint32_t degree_cap) {
  if (v >= g.size() || w >= g.size()) throw std::invalid_argument("vertex index out of range");
  if (n.total() > degree_cap)
    throw std::invalid_argument("total degree " + std::to_string(n.total()) +
                                " exceeds cap " + std::to_string(degree_cap));
  // Row v of A1^{n1} A2^{n2}, built as a running row vector.
  std::vector<BigInt> row(g.size(), 0);
  row[v] = 1;
  for (std::uint32_t k = 0; k < n.n1; ++k) row = mul_row(row, g.blue);
  for (std::uint32_t k = 0; k < n.n2; ++k) row = mul_row(row, g.red);
  return row[w];
}

std::vector<BigInt> path_count_column_sums(const TwoGraphSkeleton& g, Degree n) {
  std::vector<BigInt> row(g.size(), 1);
  for (std::uint32_t k = 0; k < n.n1; ++k) row = mul_row(row, g.blue);
  for (std::uint32_t k = 0; k < n.n2; ++k) row = mul_row(row, g.red);
  return row;
}

namespace {

// Adjacency of the union graph in the source -> range direction.
std::vector<std::vector<std::size_t>> union_successors(const TwoGraphSkeleton& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t range = 0; range < n; ++range)
    for (std::size_t source = 0; source < n; ++source)
      if (g.blue(range, source) > 0 || g.red(range, source) > 0) succ[source].push_back(range);
  return succ;
}

}  // namespace

std::vector<Component> strongly_connected_components(const TwoGraphSkeleton& g) {
  const std::size_t n = g.size();
  const auto succ = union_successors(g);

  // Tarjan.
  std::vector<int> comp_of(n, -1);
  std::vector<std::size_t> low(n), num(n);
  std::vector<char> on_stack(n, 0), visited(n, 0);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  std::vector<std::vector<std::size_t>> comps;

  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    num[v] = low[v] = counter++;
    visited[v] = 1;
    stack.push_back(v);
    on_stack[v] = 1;
    for (std::size_t w : succ[v]) {
      if (!visited[w]) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], num[w]);
      }
    }
    if (low[v] == num[v]) {
      std::vector<std::size_t> members;
      for (;;) {
        std::size_t w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp_of[w] = static_cast<int>(comps.size());
        members.push_back(w);
        if (w == v) break;
      }
      std::sort(members.begin(), members.end());
      comps.push_back(std::move(members));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (!visited[v]) dfs(v);

  // Order components ranges-first: edge source -> range makes the range's
  // component a predecessor. Kahn on that reversed relation, ties by smallest
  // vertex index.
  const std::size_t m = comps.size();
  std::vector<std::set<std::size_t>> pred_of(m);  // comp -> components that must come first
  for (std::size_t source = 0; source < n; ++source)
    for (std::size_t range : succ[source]) {
      auto cs = static_cast<std::size_t>(comp_of[source]);
      auto cr = static_cast<std::size_t>(comp_of[range]);
      if (cs != cr) pred_of[cs].insert(cr);
    }
  std::vector<std::size_t> indegree(m, 0);
  for (std::size_t c = 0; c < m; ++c) indegree[c] = pred_of[c].size();
  std::vector<std::vector<std::size_t>> dependents(m);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t p : pred_of[c]) dependents[p].push_back(c);

  std::vector<std::size_t> order;
  std::set<std::pair<std::size_t, std::size_t>> ready;  // (min vertex, comp)
  for (std::size_t c = 0; c < m; ++c)
    if (indegree[c] == 0) ready.insert({comps[c].front(), c});
  while (!ready.empty()) {
    auto [key, c] = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(c);
    for (std::size_t d : dependents[c])
      if (--indegree[d] == 0) ready.insert({comps[d].front(), d});
  }

  std::vector<Component> result;
  for (std::size_t c : order) {
    Component comp;
    comp.members = comps[c];
    comp.nontrivial = false;
    for (std::size_t v : comp.members)
      for (std::size_t w : comp.members)
        if (g.blue(v, w) > 0 || g.red(v, w) > 0) comp.nontrivial = true;
    result.push_back(std::move(comp));
  }
  return result;
}

std::vector<std::size_t> absolute_sources(const TwoGraphSkeleton& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool receives = false;
    for (std::size_t w = 0; w < g.size(); ++w)
      if (g.blue(v, w) > 0 || g.red(v, w) > 0) receives = true;
    if (!receives) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> sources_by_color(const TwoGraphSkeleton& g, int color) {
  const IntMat& a = g.matrix(color);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool receives = false;
    for (std::size_t w = 0; w < g.size(); ++w)
      if (a(v, w) > 0) receives = true;
    if (!receives) out.push_back(v);
  }
  return out;
}

bool is_hereditary(const TwoGraphSkeleton& g, const std::vector<std::size_t>& h) {
  std::vector<char> in(g.size(), 0);
  for (std::size_t v : h) {
    if (v >= g.size()) throw std::invalid_argument("vertex index out of range");
    in[v] = 1;
  }
  for (std::size_t range = 0; range < g.size(); ++range) {
    if (!in[range]) continue;
    for (std::size_t source = 0; source < g.size(); ++source)
      if (!in[source] && (g.blue(range, source) > 0 || g.red(range, source) > 0)) return false;
  }
  return true;
}

std::vector<std::size_t> hereditary_closure(const TwoGraphSkeleton& g,
                                            std::vector<std::size_t> seed) {
  std::vector<char> in(g.size(), 0);
  for (std::size_t v : seed) in[v] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t range = 0; range < g.size(); ++range) {
      if (!in[range]) continue;
      for (std::size_t source = 0; source < g.size(); ++source)
        if (!in[source] && (g.blue(range, source) > 0 || g.red(range, source) > 0)) {
          in[source] = 1;
          changed = true;
        }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

TwoGraphSkeleton quotient(const TwoGraphSkeleton& g, const std::vector<std::size_t>& h) {
  if (!is_hereditary(g, h)) throw std::invalid_argument("removed set is not hereditary");
  std::vector<char> removed(g.size(), 0);
  for (std::size_t v : h) removed[v] = 1;
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!removed[v]) keep.push_back(v);
  TwoGraphSkeleton q;
  for (std::size_t v : keep) q.vertices.push_back(g.vertices[v]);
  q.blue = g.blue.submatrix(keep, keep);
  q.red = g.red.submatrix(keep, keep);
  return q;
}

}  // namespace tkms
