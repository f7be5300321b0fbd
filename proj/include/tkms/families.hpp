#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tkms/matrix.hpp"
#include "tkms/poly2.hpp"
#include "tkms/skeleton.hpp"

namespace tkms {

/// Two vertices u, v with blue/red loop counts d_i at u and d_i-colored edge
/// counts a_i from the absolute source v into u.
struct TwoVertexParams {
  Rational d1, d2, a1, a2;
};

/// Adds the absolute source w: b1 blue edges w -> u, b2 red edges w -> v.
struct ThreeVertexParams {
  Rational d1, d2, a1, a2, b1, b2;
};

/// Shape-only matches (zero pattern and positivity); deliberately do not
/// require the commutation constraints, so perturbed instances still match
/// and the identity suite can show which identity breaks.
std::optional<TwoVertexParams> match_two_vertex(const TwoGraphSkeleton& g);
std::optional<ThreeVertexParams> match_three_vertex(const TwoGraphSkeleton& g);

/// Role indices for the local three-vertex picture at u inside any graph:
/// loops of both colors at u, a-classes from v, one blue class from the
/// absolute source w, and a red class w -> v; nothing else reaches u, v or w.
struct TrickyRoles {
  std::size_t u, v, w;
};
std::optional<TrickyRoles> match_tricky_pattern_at(const TwoGraphSkeleton& g, std::size_t u);

// Symbolic forms of the subinvariance entries and displayed matrices, as
// exact rational functions of the weights x1, x2.
RationalFunction2 family_delta(const TwoVertexParams& p);
RationalFunction2 family_y_u(const TwoVertexParams& p);
RationalFunction2 family_y_v_blue_first(const TwoVertexParams& p);
RationalFunction2 family_y_v_red_first(const TwoVertexParams& p);
RationalFunction2 family_y_w_blue_first(const ThreeVertexParams& p);
RationalFunction2 family_y_w_red_first(const ThreeVertexParams& p);

/// The two-vertex product inverse as displayed: prod (1-d_i x_i)^{-1} times
/// [[1, a2 x2 + a1 x1 (1-d2 x2)], [0, (1-d1 x1)(1-d2 x2)]].
Mat<RationalFunction2> displayed_inverse_two_vertex(const TwoVertexParams& p);

/// The displayed three-vertex inverse of prod_i (1 - x_i A_i).
Mat<RationalFunction2> displayed_inverse_three_vertex(const ThreeVertexParams& p);

/// Vertex values of the extreme state at the third unit vector, times y_w.
std::vector<RationalFunction2> third_extreme_numerators(const ThreeVertexParams& p);

/// prod_i (1 - x_i A_i) computed directly from the vertex matrices.
Mat<RationalFunction2> weight_product_matrix(const TwoGraphSkeleton& g);

struct IdentityResult {
  std::string name;
  bool pass = false;
};

/// Symbolic identity suite for a family-shaped skeleton; nullopt when the
/// skeleton matches neither family shape.
std::optional<std::vector<IdentityResult>> run_identity_suite(const TwoGraphSkeleton& g);

}  // namespace tkms
