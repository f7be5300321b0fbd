#include "tkms/families.hpp"

namespace tkms {

namespace {

using RF = RationalFunction2;

RF rf_const(const Rational& c) { return RF(c); }
RF x1() { return RF::x1(); }
RF x2() { return RF::x2(); }

RF one_minus(const Rational& d, const RF& x) { return RF(1) - rf_const(d) * x; }

}  // namespace

std::optional<TwoVertexParams> match_two_vertex(const TwoGraphSkeleton& g) {
  if (g.size() != 2) return std::nullopt;
  for (int color : {1, 2}) {
    const IntMat& a = g.matrix(color);
    if (a(0, 0) <= 0 || a(0, 1) <= 0) return std::nullopt;
    if (a(1, 0) != 0 || a(1, 1) != 0) return std::nullopt;
  }
  return TwoVertexParams{Rational(g.blue(0, 0)), Rational(g.red(0, 0)), Rational(g.blue(0, 1)),
                         Rational(g.red(0, 1))};
}

std::optional<ThreeVertexParams> match_three_vertex(const TwoGraphSkeleton& g) {
  if (g.size() != 3) return std::nullopt;
  const IntMat& a1 = g.blue;
  const IntMat& a2 = g.red;
  // Rows v and w receive nothing blue; w receives nothing red; v receives red
  // only from w.
  if (a1(0, 0) <= 0 || a1(0, 1) <= 0 || a1(0, 2) <= 0) return std::nullopt;
  if (a2(0, 0) <= 0 || a2(0, 1) <= 0 || a2(0, 2) != 0) return std::nullopt;
  for (std::size_t j = 0; j < 3; ++j) {
    if (a1(1, j) != 0 || a1(2, j) != 0 || a2(2, j) != 0) return std::nullopt;
  }
  if (a2(1, 0) != 0 || a2(1, 1) != 0 || a2(1, 2) <= 0) return std::nullopt;
  return ThreeVertexParams{Rational(a1(0, 0)), Rational(a2(0, 0)), Rational(a1(0, 1)),
                           Rational(a2(0, 1)), Rational(a1(0, 2)), Rational(a2(1, 2))};
}

std::optional<TrickyRoles> match_tricky_pattern_at(const TwoGraphSkeleton& g, std::size_t u) {
  const std::size_t n = g.size();
  if (g.blue(u, u) <= 0 || g.red(u, u) <= 0) return std::nullopt;
  std::optional<std::size_t> v, w;
  for (std::size_t z = 0; z < n; ++z) {
    if (z == u) continue;
    const bool blue_in = g.blue(u, z) > 0;
    const bool red_in = g.red(u, z) > 0;
    if (blue_in && red_in) {
      if (v) return std::nullopt;
      v = z;
    } else if (blue_in && !red_in) {
      if (w) return std::nullopt;
      w = z;
    } else if (red_in) {
      return std::nullopt;  // a red-only class at u is outside the pattern
    }
  }
  if (!v || !w) return std::nullopt;
  // v receives red from w only; w is an absolute source.
  for (std::size_t z = 0; z < n; ++z) {
    if (g.blue(*v, z) != 0) return std::nullopt;
    if (z != *w && g.red(*v, z) != 0) return std::nullopt;
    if (g.blue(*w, z) != 0 || g.red(*w, z) != 0) return std::nullopt;
  }
  if (g.red(*v, *w) <= 0) return std::nullopt;
  return TrickyRoles{u, *v, *w};
}

RF family_delta(const TwoVertexParams& p) {
  return one_minus(p.d1, x1()) * one_minus(p.d2, x2());
}

RF family_y_u(const TwoVertexParams& p) { return family_delta(p).inverse(); }

RF family_y_v_blue_first(const TwoVertexParams& p) {
  return RF(1) + rf_const(p.a1) * x1() * family_delta(p).inverse() +
         rf_const(p.a2) * x2() * one_minus(p.d2, x2()).inverse();
}

RF family_y_v_red_first(const TwoVertexParams& p) {
  return RF(1) + rf_const(p.a2) * x2() * family_delta(p).inverse() +
         rf_const(p.a1) * x1() * one_minus(p.d1, x1()).inverse();
}

RF family_y_w_blue_first(const ThreeVertexParams& p) {
  TwoVertexParams q{p.d1, p.d2, p.a1, p.a2};
  return RF(1) + rf_const(p.b2) * x2() + rf_const(p.b1) * x1() * family_delta(q).inverse() +
         rf_const(p.a2 * p.b2) * x2() * x2() * one_minus(p.d2, x2()).inverse();
}

RF family_y_w_red_first(const ThreeVertexParams& p) {
  TwoVertexParams q{p.d1, p.d2, p.a1, p.a2};
  return RF(1) + rf_const(p.b1) * x1() * one_minus(p.d1, x1()).inverse() +
         rf_const(p.b2) * x2() * family_y_v_blue_first(q);
}

Mat<RF> displayed_inverse_two_vertex(const TwoVertexParams& p) {
  Mat<RF> m(2, 2);
  RF scale = family_delta(p).inverse();
  m(0, 0) = scale;
  m(0, 1) = scale * (rf_const(p.a2) * x2() + rf_const(p.a1) * x1() * one_minus(p.d2, x2()));
  m(1, 0) = RF(0);
  m(1, 1) = scale * family_delta(p);
  return m;
}

Mat<RF> displayed_inverse_three_vertex(const ThreeVertexParams& p) {
  TwoVertexParams q{p.d1, p.d2, p.a1, p.a2};
  RF delta = family_delta(q);
  RF scale = delta.inverse();
  Mat<RF> m(3, 3);
  m(0, 0) = scale;
  m(0, 1) = scale * (one_minus(p.d1, x1()) * rf_const(p.a2) * x2() + rf_const(p.a1) * x1());
  m(0, 2) = scale * (one_minus(p.d1, x1()) * rf_const(p.a2 * p.b2) * x2() * x2() +
                     rf_const(p.b1) * x1());
  m(1, 1) = RF(1);
  m(1, 2) = rf_const(p.b2) * x2();
  m(2, 2) = RF(1);
  return m;
}

std::vector<RF> third_extreme_numerators(const ThreeVertexParams& p) {
  TwoVertexParams q{p.d1, p.d2, p.a1, p.a2};
  RF delta = family_delta(q);
  return {delta.inverse() * (one_minus(p.d1, x1()) * rf_const(p.a2 * p.b2) * x2() * x2() +
                             rf_const(p.b1) * x1()),
          rf_const(p.b2) * x2(), RF(1)};
}

Mat<RF> weight_product_matrix(const TwoGraphSkeleton& g) {
  const std::size_t n = g.size();
  Mat<RF> m1 = Mat<RF>::identity(n);
  Mat<RF> m2 = Mat<RF>::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (g.blue(i, j) != 0) m1(i, j) -= rf_const(Rational(g.blue(i, j))) * x1();
      if (g.red(i, j) != 0) m2(i, j) -= rf_const(Rational(g.red(i, j))) * x2();
    }
  return m1 * m2;
}

namespace {

std::vector<IdentityResult> two_vertex_identities(const TwoGraphSkeleton& g,
                                                  const TwoVertexParams& p) {
  std::vector<IdentityResult> out;
  out.push_back({"y_v blue-first vs red-first form",
                 family_y_v_blue_first(p) == family_y_v_red_first(p)});

  RF delta_inv = family_delta(p).inverse();
  RF difference = rf_const(p.a1) * x1() * delta_inv +
                  rf_const(p.a2) * x2() * one_minus(p.d1, x1()) * delta_inv -
                  rf_const(p.a2) * x2() * delta_inv -
                  rf_const(p.a1) * x1() * one_minus(p.d2, x2()) * delta_inv;
  RF collapsed = rf_const(p.a1 * p.d2 - p.a2 * p.d1) * x1() * x2() * delta_inv;
  out.push_back({"y_v difference collapses to (a1 d2 - a2 d1) x1 x2 / Delta",
                 difference == collapsed});

  auto computed = invert(weight_product_matrix(g));
  out.push_back({"displayed two-vertex product inverse",
                 computed && *computed == displayed_inverse_two_vertex(p)});

  bool unit = false;
  if (computed) {
    RF m_uu = (*computed)(0, 0) * family_y_u(p).inverse();
    RF m_vu = (*computed)(1, 0) * family_y_u(p).inverse();
    unit = m_uu == RF(1) && m_vu == RF(0);
  }
  out.push_back({"first extreme point has vertex values (1, 0)", unit});
  return out;
}

std::vector<IdentityResult> three_vertex_identities(const TwoGraphSkeleton& g,
                                                    const ThreeVertexParams& p) {
  TwoVertexParams q{p.d1, p.d2, p.a1, p.a2};
  TwoGraphSkeleton sub = quotient(g, {2});
  std::vector<IdentityResult> out = two_vertex_identities(sub, q);

  out.push_back({"y_w blue-first vs red-first form",
                 family_y_w_blue_first(p) == family_y_w_red_first(p)});

  Mat<RF> product = weight_product_matrix(g);
  Mat<RF> displayed = displayed_inverse_three_vertex(p);
  bool is_identity = product * displayed == Mat<RF>::identity(3);
  out.push_back({"displayed three-vertex inverse times product is the identity", is_identity});

  auto nums = third_extreme_numerators(p);
  out.push_back({"third extreme point values sum to y_w",
                 nums[0] + nums[1] + nums[2] == family_y_w_blue_first(p)});
  return out;
}

}  // namespace

std::optional<std::vector<IdentityResult>> run_identity_suite(const TwoGraphSkeleton& g) {
  if (auto p3 = match_three_vertex(g)) return three_vertex_identities(g, *p3);
  if (auto p2 = match_two_vertex(g)) return two_vertex_identities(g, *p2);
  return std::nullopt;
}

}  // namespace tkms
