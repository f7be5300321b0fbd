#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tkms/families.hpp"
#include "tkms/kms.hpp"

#include "testutil.hpp"

using namespace tkms;
using namespace tkms::testutil;

namespace {

const WeightPoint<Rational> kPaperX{Rational(1, 8), Rational(1, 12)};

std::vector<Rational> rationals(std::vector<Rational> v) { return v; }

}  // namespace

TEST_CASE("closed-form subinvariance vector on the builtins") {
  auto g2 = *builtin_skeleton("paper-2vertex");
  CHECK(subinvariance_closed<Rational>(g2, kPaperX) ==
        rationals({Rational(8, 3), Rational(6)}));

  auto g3 = *builtin_skeleton("paper-3vertex");
  CHECK(subinvariance_closed<Rational>(g3, kPaperX) ==
        rationals({Rational(8, 3), Rational(6), Rational(5, 3)}));

  auto loop = make_skeleton({"u"}, {{1}}, {{0}});
  WeightPoint<Rational> x{Rational(1, 2), Rational(1, 2)};
  CHECK(subinvariance_closed<Rational>(loop, x) == rationals({Rational(2)}));

  // Float mode reproduces the exact values to machine precision.
  WeightPoint<double> xd{0.125, 1.0 / 12};
  auto yd = subinvariance_closed<double>(g2, xd);
  CHECK(yd[0] == doctest::Approx(8.0 / 3).epsilon(1e-14));
  CHECK(yd[1] == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("dynamics constructors enforce their domains") {
  CHECK_THROWS_AS(Dynamics::from_r_beta(-1.0, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Dynamics::from_r_beta(1.0, 2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Dynamics::from_exact(Rational(0), Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(Dynamics::from_exact(Rational(9, 8), Rational(1, 2)),
                  std::invalid_argument);
  CHECK(Dynamics::from_exact(Rational(1), Rational(1, 2)).exact());

  auto d = Dynamics::from_r_beta(std::log(8.0), std::log(12.0), 1.0);
  CHECK(d.float_x().x1 == doctest::Approx(0.125).epsilon(1e-15));
  CHECK_FALSE(d.exact());
  CHECK(rational_from_string("3/24") == Rational(1, 8));
  CHECK(rational_to_string(Rational(5, 6)) == "5/6");
  CHECK(rational_to_string(Rational(7)) == "7");
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("0.5"), std::invalid_argument);
}

TEST_CASE("divergent weights are rejected") {
  auto g2 = *builtin_skeleton("paper-2vertex");
  WeightPoint<Rational> critical{Rational(1, 2), Rational(1, 12)};
  CHECK_THROWS_AS(subinvariance_closed<Rational>(g2, critical), std::domain_error);
  WeightPoint<Rational> beyond{Rational(3, 4), Rational(1, 12)};
  CHECK_THROWS_AS((subinvariance_bruteforce<Rational>(g2, beyond, 20)), std::domain_error);
}

TEST_CASE("brute force approaches the closed form on the builtins") {
  auto g2 = *builtin_skeleton("paper-2vertex");
  auto brute = subinvariance_bruteforce<Rational>(g2, kPaperX, 60);
  CHECK(abs(brute.values[0] - Rational(8, 3)) < Rational(1, 10000000000L));
  CHECK(abs(brute.values[1] - Rational(6)) < Rational(1, 10000000000L));

  auto g3 = *builtin_skeleton("paper-3vertex");
  auto brute3 = subinvariance_bruteforce<Rational>(g3, kPaperX, 60);
  CHECK(abs(brute3.values[2] - Rational(5, 3)) < Rational(1, 10000000000L));

  auto lonely = make_skeleton({"z"}, {{0}}, {{0}});
  WeightPoint<Rational> any{Rational(9, 10), Rational(9, 10)};
  CHECK(subinvariance_bruteforce<Rational>(lonely, any, 10).values ==
        rationals({Rational(1)}));
}

TEST_CASE("serial and parallel brute-force kernels agree exactly") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_valid_skeleton(rng);
    auto x = random_subcritical_weights(rng, g);
    auto serial = subinvariance_bruteforce_serial<Rational>(g, x, 25);
    auto parallel = subinvariance_bruteforce<Rational>(g, x, 25);
    CHECK(serial.values == parallel.values);
  }
  auto g = *builtin_skeleton("paper-4vertex");
  WeightPoint<double> xd{1.0 / 16, 1.0 / 24};
  auto serial = subinvariance_bruteforce_serial<double>(g, xd, 40);
  auto parallel = subinvariance_bruteforce<double>(g, xd, 40);
  for (std::size_t v = 0; v < g.size(); ++v)
    CHECK(serial.values[v] == doctest::Approx(parallel.values[v]).epsilon(1e-14));
}

TEST_CASE("oracle agreement within the reported tail bound on random skeletons") {
  std::mt19937 rng(73);
  int checked = 0;
  for (int trial = 0; trial < 80 && checked < 50; ++trial) {
    auto g = random_valid_skeleton(rng);
    auto x = random_subcritical_weights(rng, g, 0.05, 0.9);
    if (weight_status(g.blue, x.x1, {}) != SpectralStatus::Subcritical) continue;
    if (weight_status(g.red, x.x2, {}) != SpectralStatus::Subcritical) continue;
    auto closed = subinvariance_closed<Rational>(g, x);
    auto brute = subinvariance_bruteforce<Rational>(g, x, 30);
    for (std::size_t v = 0; v < g.size(); ++v) {
      Rational diff = closed[v] - brute.values[v];
      CHECK(diff >= 0);  // every omitted term is nonnegative
      if (!std::isfinite(brute.tail_bound[v])) continue;
      CHECK(diff <= Rational(brute.tail_bound[v]));
    }
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("extreme states of the two-vertex simplex") {
  auto g = *builtin_skeleton("paper-2vertex");
  auto simplex = kms_simplex<Rational>(g, kPaperX);
  CHECK(simplex.dimension() == 1);
  CHECK(simplex.y == rationals({Rational(8, 3), Rational(6)}));
  CHECK(simplex.extremes[0].values == rationals({Rational(1), Rational(0)}));
  CHECK(simplex.extremes[1].values == rationals({Rational(5, 6), Rational(1, 6)}));
  CHECK(simplex.extremes[0].epsilon == rationals({Rational(3, 8), Rational(0)}));
}

TEST_CASE("extreme states of the three-vertex simplex") {
  auto g = *builtin_skeleton("paper-3vertex");
  auto simplex = kms_simplex<Rational>(g, kPaperX);
  CHECK(simplex.dimension() == 2);
  CHECK(simplex.extremes[0].values == rationals({Rational(1), Rational(0), Rational(0)}));
  CHECK(simplex.extremes[1].values ==
        rationals({Rational(5, 6), Rational(1, 6), Rational(0)}));
  CHECK(simplex.extremes[2].values ==
        rationals({Rational(7, 20), Rational(1, 20), Rational(3, 5)}));
}

TEST_CASE("simplex states are normalized, nonnegative and subinvariant") {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_valid_skeleton(rng);
    auto x = random_subcritical_weights(rng, g);
    auto simplex = kms_simplex<Rational>(g, x);
    for (const auto& e : simplex.extremes) {
      Rational sum(0);
      for (const auto& v : e.values) {
        CHECK(v >= 0);
        sum += v;
      }
      CHECK(sum == 1);
      // (1 - x_i A_i) m >= 0 entrywise for both colors.
      for (int color : {1, 2}) {
        const IntMat& a = g.matrix(color);
        for (std::size_t i = 0; i < g.size(); ++i) {
          Rational row = e.values[i];
          for (std::size_t j = 0; j < g.size(); ++j)
            row -= x[color] * Rational(a(i, j)) * e.values[j];
          CHECK(row >= 0);
        }
      }
    }
  }
}

TEST_CASE("critical inverse temperatures of the four-vertex instance") {
  auto g = *builtin_skeleton("paper-4vertex");
  const double r2 = std::log(13.0);
  auto crit = critical_beta(g, std::log(8.0), r2);
  REQUIRE(crit.components.size() == 2);  // {u} and {x}
  const auto& u = crit.components[0];
  const auto& x = crit.components[1];
  CHECK(u.component.members == std::vector<std::size_t>{0});
  CHECK(x.component.members == std::vector<std::size_t>{3});
  CHECK(x.beta_c == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(x.attained_color == 1);
  CHECK(u.beta_c == doctest::Approx(std::max(1.0 / 3, std::log(6.0) / r2)).epsilon(1e-12));
  CHECK(crit.global == doctest::Approx(1.0).epsilon(1e-12));

  // Large r2 flips the maximum to the color-1 constraint ln 2 / ln 8 = 1/3.
  auto crit2 = critical_beta(g, std::log(8.0), 10.0);
  CHECK(crit2.components[0].beta_c == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(crit2.components[0].attained_color == 1);

  // The remark's numeric value: ln 6 / ln 12 = 0.7211... ~ 0.72.
  auto crit3 = critical_beta(*builtin_skeleton("paper-3vertex"), std::log(8.0), std::log(12.0));
  REQUIRE(crit3.components.size() == 1);
  CHECK(std::fabs(crit3.components[0].beta_c - 0.72) < 0.005);

  auto lonely = make_skeleton({"z"}, {{0}}, {{0}});
  auto crit0 = critical_beta(lonely, 1.0, 1.0);
  CHECK(crit0.components.empty());
  CHECK(crit0.global == 0.0);
}

TEST_CASE("critical sink solve on the four-vertex instance") {
  auto g = *builtin_skeleton("paper-4vertex");
  auto solve = critical_sink_solve(g, 3);
  CHECK(solve.y_color1 == rationals({Rational(3, 8), Rational(1, 8), Rational(3, 2)}));
  CHECK(solve.y_color2 == solve.y_color1);
  // (3, 1, 12, 8) / 24 in lowest terms.
  CHECK(solve.psi == rationals({Rational(1, 8), Rational(1, 24), Rational(1, 2),
                                Rational(1, 3)}));

  auto psi = kms1_critical_sink(g, std::log(8.0), std::log(13.0));
  CHECK(psi == solve.psi);
}

TEST_CASE("critical sink preconditions") {
  auto g = *builtin_skeleton("paper-4vertex");
  // beta = 1 with r2 = ln 12 keeps {x} critical in both colors; still fine.
  CHECK(kms1_critical_sink(g, std::log(8.0), std::log(12.0)).size() == 4);
  // Everything strictly subcritical: no critical component.
  CHECK_THROWS_AS(kms1_critical_sink(g, std::log(9.0), std::log(13.0)), unsupported_error);
  // Supercritical component.
  CHECK_THROWS_AS(kms1_critical_sink(g, std::log(7.0), std::log(13.0)), unsupported_error);
  // The critical component is not a hereditary singleton.
  auto g2 = *builtin_skeleton("paper-2vertex");
  CHECK_THROWS_AS(kms1_critical_sink(g2, std::log(2.0), std::log(7.0)), unsupported_error);

  auto one = make_skeleton({"z"}, {{3}}, {{5}});
  CHECK(kms1_critical_sink(one, std::log(3.0), std::log(5.0)) == rationals({Rational(1)}));
}

TEST_CASE("color symmetry of the block solve on random four-vertex instances") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_four_vertex(rng);
    REQUIRE(validate(g).valid());
    auto solve = critical_sink_solve(g, 3);
    CHECK(solve.y_color1 == solve.y_color2);
    Rational sum(0);
    for (const auto& v : solve.psi) {
      CHECK(v > 0);
      sum += v;
    }
    CHECK(sum == 1);
  }
}

TEST_CASE("vanishing deduction on the two-vertex family at the color-1 critical point") {
  auto g = *builtin_skeleton("paper-2vertex");
  WeightPoint<Rational> x{Rational(1, 2), Rational(1, 7)};
  auto ded = vanishing_deduction(g, x, 0, EdgeClassSet::full_at(g, 0));
  CHECK(ded.conclusive);
  CHECK(ded.coefficients[0] == 0);
  CHECK(ded.coefficients[1] == Rational(-3));
  CHECK(ded.forced == std::vector<std::size_t>{1});
}

TEST_CASE("vanishing deduction on the three-vertex family at both critical flavors") {
  auto g = *builtin_skeleton("paper-3vertex");
  auto minimal = minimal_exhaustive_set(g, 0);

  // Color 1 critical: x1 d1 = 1. The v-coefficient -(1 - d1 x1) a2 x2
  // vanishes, so only w is forced.
  WeightPoint<Rational> x1crit{Rational(1, 2), Rational(1, 7)};
  auto ded1 = vanishing_deduction(g, x1crit, 0, minimal.set);
  CHECK(ded1.conclusive);
  CHECK(ded1.coefficients[0] == 0);
  CHECK(ded1.coefficients[1] == 0);
  CHECK(ded1.coefficients[2] == Rational(-1, 2));  // -b1 x1
  CHECK(ded1.forced == std::vector<std::size_t>{2});

  // Color 2 critical: x2 d2 = 1 and x1 d1 < 1 forces v as well.
  WeightPoint<Rational> x2crit{Rational(1, 5), Rational(1, 6)};
  auto ded2 = vanishing_deduction(g, x2crit, 0, minimal.set);
  CHECK(ded2.conclusive);
  Rational expected_v = -(Rational(1) - Rational(2) * x2crit.x1) * Rational(18) * x2crit.x2;
  CHECK(ded2.coefficients[1] == expected_v);
  CHECK(ded2.coefficients[2] == Rational(-1, 5));
  CHECK(ded2.forced == std::vector<std::size_t>{1, 2});
}

TEST_CASE("subcritical weights make the deduction inconclusive") {
  auto g = *builtin_skeleton("paper-2vertex");
  auto ded = vanishing_deduction(g, kPaperX, 0, EdgeClassSet::full_at(g, 0));
  CHECK_FALSE(ded.conclusive);
  CHECK(ded.coefficients[0] == Rational(3, 8));
  CHECK(ded.forced.empty());
}

TEST_CASE("existence pruning on the four-vertex instance") {
  auto g = *builtin_skeleton("paper-4vertex");
  auto at = [&](double beta) {
    Dynamics dyn = Dynamics::from_r_beta(std::log(8.0), std::log(13.0), beta);
    auto x = dyn.float_x();
    return kms_exists(g, x, {});
  };

  auto pruned = at(0.9);
  CHECK(pruned.exists);
  CHECK(pruned.forced_zero == std::vector<std::size_t>{3});
  CHECK(pruned.survivors.vertices == std::vector<std::string>{"u", "v", "w"});

  double beta_low = std::max(1.0 / 3, std::log(6.0) / std::log(13.0)) - 0.01;
  auto none = at(beta_low);
  CHECK_FALSE(none.exists);
  CHECK(none.forced_zero.size() == 4);

  auto all = at(2.0);
  CHECK(all.exists);
  CHECK(all.forced_zero.empty());
  CHECK(all.survivors.vertices == g.vertices);
}

TEST_CASE("rational independence") {
  CHECK(rationally_independent(2, 6));
  CHECK_FALSE(rationally_independent(2, 8));
  CHECK_FALSE(rationally_independent(4, 8));
  for (std::uint64_t d = 2; d <= 20; ++d) CHECK_FALSE(rationally_independent(d, d));
  CHECK(rationally_independent(12, 18));
  CHECK_FALSE(rationally_independent(36, 6));
  CHECK_THROWS_AS(rationally_independent(1, 8), std::invalid_argument);
}

TEST_CASE("symbolic and numeric routes agree on the factorization check") {
  // phi_2 from the displayed vertex-value formulas, as rational functions.
  auto g = *builtin_skeleton("paper-2vertex");
  auto p = match_two_vertex(g);
  REQUIRE(p.has_value());
  using RF = RationalFunction2;
  RF x1 = RF::x1(), x2 = RF::x2();
  RF yv = family_y_v_blue_first(*p);
  RF numerator = RF(p->a2) * x2 + RF(p->a1) * x1 - RF(p->a1 * p->d2) * x1 * x2;
  std::vector<RF> phi2{family_delta(*p).inverse() * numerator / yv, RF(1) / yv};

  auto exp = ck_expand(g, 0, EdgeClassSet::full_at(g, 0));
  RF symbolic = ck_evaluate_symbolic(g, *exp.expansion, phi2);
  CHECK(symbolic.is_zero());

  auto simplex = kms_simplex<Rational>(g, kPaperX);
  Rational numeric =
      ck_evaluate<Rational>(g, *exp.expansion, kPaperX, simplex.extremes[1].values);
  CHECK(numeric == 0);
  // The symbolic state evaluates to the numeric state at the sample point.
  CHECK(*phi2[0].eval(kPaperX.x1, kPaperX.x2) == simplex.extremes[1].values[0]);
  CHECK(*phi2[1].eval(kPaperX.x1, kPaperX.x2) == simplex.extremes[1].values[1]);
}
