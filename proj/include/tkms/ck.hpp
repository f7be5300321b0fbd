#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tkms/dynamics.hpp"
#include "tkms/poly2.hpp"
#include "tkms/skeleton.hpp"

namespace tkms {

/// A union of full edge classes (color, source vertex) inside u Lambda^1.
/// Only classes with a nonzero edge count may be flagged.
struct EdgeClassSet {
  std::size_t base = 0;
  std::array<std::vector<char>, 2> included;  // indexed [color-1][source]

  static EdgeClassSet empty_at(const TwoGraphSkeleton& g, std::size_t u) {
    EdgeClassSet e;
    e.base = u;
    e.included[0].assign(g.size(), 0);
    e.included[1].assign(g.size(), 0);
    return e;
  }

  /// Every class of u Lambda^1.
  static EdgeClassSet full_at(const TwoGraphSkeleton& g, std::size_t u);

  bool has(int color, std::size_t source) const { return included[color - 1][source] != 0; }
  void add(int color, std::size_t source) { included[color - 1][source] = 1; }
  bool empty() const;
  bool contains(const EdgeClassSet& other) const;
  bool operator==(const EdgeClassSet&) const = default;
};

/// One signed path-class term of an expanded Cuntz-Krieger product: counts
/// paths mu in u Lambda^{degree} with s(mu) in sources.
struct CkTerm {
  int sign = 1;
  Degree degree;
  std::vector<std::size_t> sources;
  bool operator==(const CkTerm&) const = default;
};

/// Normalized expansion of prod_{e in E} (t_u - t_e t_e^*); leading term is
/// always (+1, (0,0), {u}).
struct CkExpansion {
  std::size_t base = 0;
  std::vector<CkTerm> terms;
};

/// Classes that every finite exhaustive set at u must contain: class (i, w)
/// is forced when some color-i path from an absolute source reaches w.
EdgeClassSet forced_edge_classes(const TwoGraphSkeleton& g, std::size_t u);

enum class MinimalStatus {
  Known,       // provably the minimal (indeed only sharpest) exhaustive set
  Unknown,     // outside the certified patterns; forced lower bound attached
  NoRelation,  // u is an absolute source: no finite exhaustive set exists
};

struct MinimalExhaustive {
  MinimalStatus status = MinimalStatus::Unknown;
  EdgeClassSet set;     // meaningful when Known
  EdgeClassSet forced;  // always the forced lower bound
};

MinimalExhaustive minimal_exhaustive_set(const TwoGraphSkeleton& g, std::size_t u);

struct CkExpandResult {
  std::optional<CkExpansion> expansion;
  std::string note;  // why the expansion is undecidable, when it is
};

/// Expands the Cuntz-Krieger product over a class-level E. The mixed-degree
/// term keeps a source w only when class membership of the two color-initial
/// edges is uniform across all of u Lambda^{e1+e2} w; a non-uniform source
/// makes the count undecidable at class level.
CkExpandResult ck_expand(const TwoGraphSkeleton& g, std::size_t u, const EdgeClassSet& e);

/// phi(t_mu t_mu^*) = x^{d(mu)} phi(t_{s(mu)}) summed over the expansion.
template <class S>
S ck_evaluate(const TwoGraphSkeleton& g, const CkExpansion& ck, const WeightPoint<S>& x,
              const std::vector<S>& state);

/// Same with symbolic weights x1, x2 and rational-function state values.
RationalFunction2 ck_evaluate_symbolic(const TwoGraphSkeleton& g, const CkExpansion& ck,
                                       const std::vector<RationalFunction2>& state);

}  // namespace tkms
