#include "tkms/ck.hpp"

#include <algorithm>

#include "tkms/families.hpp"

namespace tkms {

EdgeClassSet EdgeClassSet::full_at(const TwoGraphSkeleton& g, std::size_t u) {
  EdgeClassSet e = empty_at(g, u);
  for (int color : {1, 2})
    for (std::size_t w = 0; w < g.size(); ++w)
      if (g.matrix(color)(u, w) > 0) e.add(color, w);
  return e;
}

bool EdgeClassSet::empty() const {
  for (const auto& side : included)
    for (char f : side)
      if (f) return false;
  return true;
}

bool EdgeClassSet::contains(const EdgeClassSet& other) const {
  for (int c = 0; c < 2; ++c)
    for (std::size_t w = 0; w < included[c].size(); ++w)
      if (other.included[c][w] && !included[c][w]) return false;
  return true;
}

EdgeClassSet forced_edge_classes(const TwoGraphSkeleton& g, std::size_t u) {
  const std::size_t n = g.size();
  EdgeClassSet forced = EdgeClassSet::empty_at(g, u);
  const auto absolute = absolute_sources(g);
  for (int color : {1, 2}) {
    const IntMat& a = g.matrix(color);
    // Vertices reachable from an absolute source along color-i edges,
    // growing range-ward; includes the absolute sources themselves.
    std::vector<char> reach(n, 0);
    std::vector<std::size_t> queue = absolute;
    for (std::size_t v : absolute) reach[v] = 1;
    while (!queue.empty()) {
      std::size_t z = queue.back();
      queue.pop_back();
      for (std::size_t range = 0; range < n; ++range)
        if (!reach[range] && a(range, z) > 0) {
          reach[range] = 1;
          queue.push_back(range);
        }
    }
    for (std::size_t w = 0; w < n; ++w)
      if (a(u, w) > 0 && reach[w]) forced.add(color, w);
  }
  return forced;
}

MinimalExhaustive minimal_exhaustive_set(const TwoGraphSkeleton& g, std::size_t u) {
  MinimalExhaustive out;
  out.forced = forced_edge_classes(g, u);
  const EdgeClassSet all = EdgeClassSet::full_at(g, u);

  if (all.empty()) {
    out.status = MinimalStatus::NoRelation;
    out.set = all;
    return out;
  }

  // Single incoming color: every edge can only extend itself, so the full
  // class set of that color is the unique finite exhaustive set.
  bool color1_present = false, color2_present = false;
  for (std::size_t w = 0; w < g.size(); ++w) {
    if (g.blue(u, w) > 0) color1_present = true;
    if (g.red(u, w) > 0) color2_present = true;
  }
  if (!color1_present || !color2_present) {
    out.status = MinimalStatus::Known;
    out.set = all;
    return out;
  }

  if (out.forced == all) {
    out.status = MinimalStatus::Known;
    out.set = all;
    return out;
  }

  if (auto roles = match_tricky_pattern_at(g, u)) {
    out.status = MinimalStatus::Known;
    out.set = EdgeClassSet::empty_at(g, u);
    out.set.add(1, roles->u);
    out.set.add(2, roles->u);
    out.set.add(2, roles->v);
    out.set.add(1, roles->w);
    return out;
  }

  out.status = MinimalStatus::Unknown;
  return out;
}

CkExpandResult ck_expand(const TwoGraphSkeleton& g, std::size_t u, const EdgeClassSet& e) {
  const std::size_t n = g.size();
  CkExpansion ck;
  ck.base = u;
  ck.terms.push_back({+1, Degree(0, 0), {u}});

  std::array<std::vector<std::size_t>, 2> single;
  for (int color : {1, 2})
    for (std::size_t w = 0; w < n; ++w)
      if (e.has(color, w)) single[color - 1].push_back(w);

  if (!single[0].empty()) ck.terms.push_back({-1, Degree(1, 0), single[0]});
  if (!single[1].empty()) ck.terms.push_back({-1, Degree(0, 1), single[1]});

  if (!single[0].empty() && !single[1].empty()) {
    std::vector<std::size_t> mixed;
    for (std::size_t w = 0; w < n; ++w) {
      // Classify the initial-edge classes of paths in u Lambda^{e1+e2} w.
      enum { kAll, kNone, kMixed } status[2];
      bool any_path = false;
      for (int color : {1, 2}) {
        const IntMat& first = g.matrix(color);
        const IntMat& second = g.matrix(3 - color);
        bool seen_in = false, seen_out = false;
        for (std::size_t z = 0; z < n; ++z) {
          if (first(u, z) > 0 && second(z, w) > 0) {
            any_path = true;
            (e.has(color, z) ? seen_in : seen_out) = true;
          }
        }
        status[color - 1] = seen_in ? (seen_out ? kMixed : kAll) : kNone;
      }
      if (!any_path) continue;
      if (status[0] == kNone || status[1] == kNone) continue;
      if (status[0] == kAll && status[1] == kAll) {
        mixed.push_back(w);
        continue;
      }
      return {std::nullopt,
              "class membership of initial edges is not uniform over u Lambda^{e1+e2} " +
                  g.vertices[w]};
    }
    if (!mixed.empty()) ck.terms.push_back({+1, Degree(1, 1), mixed});
  }
  return {ck, {}};
}

template <class S>
S ck_evaluate(const TwoGraphSkeleton& g, const CkExpansion& ck, const WeightPoint<S>& x,
              const std::vector<S>& state) {
  S total(0);
  for (const CkTerm& term : ck.terms) {
    S weight = scalar_pow(x.x1, term.degree.n1) * scalar_pow(x.x2, term.degree.n2);
    S sum(0);
    for (std::size_t w : term.sources) {
      BigInt count = path_count(g, term.degree, ck.base, w);
      if (count == 0) continue;
      sum += scalar_from_bigint_as(count, S(0)) * state[w];
    }
    if (term.sign > 0)
      total += weight * sum;
    else
      total -= weight * sum;
  }
  return total;
}

template Rational ck_evaluate<Rational>(const TwoGraphSkeleton&, const CkExpansion&,
                                        const WeightPoint<Rational>&,
                                        const std::vector<Rational>&);
template double ck_evaluate<double>(const TwoGraphSkeleton&, const CkExpansion&,
                                    const WeightPoint<double>&, const std::vector<double>&);

RationalFunction2 ck_evaluate_symbolic(const TwoGraphSkeleton& g, const CkExpansion& ck,
                                       const std::vector<RationalFunction2>& state) {
  RationalFunction2 total(0);
  for (const CkTerm& term : ck.terms) {
    RationalFunction2 weight(Polynomial2::monomial(term.degree.n1, term.degree.n2));
    RationalFunction2 sum(0);
    for (std::size_t w : term.sources) {
      BigInt count = path_count(g, term.degree, ck.base, w);
      if (count == 0) continue;
      sum += RationalFunction2(Rational(count)) * state[w];
    }
    if (term.sign > 0)
      total += weight * sum;
    else
      total -= weight * sum;
  }
  return total;
}

}  // namespace tkms
