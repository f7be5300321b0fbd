#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tkms/kms.hpp"
#include "tkms/report.hpp"

#include "testutil.hpp"

using namespace tkms;
using namespace tkms::testutil;

namespace {

std::string exact_str(const NumberRef& n) {
  REQUIRE(n.exact.has_value());
  return rational_to_string(*n.exact);
}

const Dynamics kCriticalExact = Dynamics::from_exact(Rational(1, 8), Rational(1, 13));

}  // namespace

TEST_CASE("four-vertex instance at the critical point, exact mode") {
  auto g = *builtin_skeleton("paper-4vertex");
  auto rep = classify_kms(g, kCriticalExact);

  CHECK(rep.mode == "exact");
  CHECK(rep.regime == "critical");
  CHECK(rep.simplex_dimension == 3);
  REQUIRE(rep.extremes.size() == 4);

  const auto& psi = rep.extremes[0];
  CHECK(psi.origin == "critical-sink");
  CHECK(psi.label == "psi(x)");
  CHECK(exact_str(psi.values[0]) == "1/8");
  CHECK(exact_str(psi.values[1]) == "1/24");
  CHECK(exact_str(psi.values[2]) == "1/2");
  CHECK(exact_str(psi.values[3]) == "1/3");
  REQUIRE(psi.ck_factor_iff_both_critical.has_value());
  CHECK_FALSE(*psi.ck_factor_iff_both_critical);  // color 2 is subcritical at x2 = 1/13
  CHECK(psi.factors_through.empty());

  // The lifted simplex extremes vanish on x and factor through the expected
  // hereditary sets.
  CHECK(rep.extremes[1].label == "eps(u)");
  CHECK(rep.extremes[1].factors_through == std::vector<std::string>{"v", "w", "x"});
  CHECK(rep.extremes[2].factors_through == std::vector<std::string>{"w", "x"});
  CHECK(rep.extremes[3].factors_through == std::vector<std::string>{"x"});
  for (std::size_t k = 1; k < 4; ++k) CHECK(exact_str(rep.extremes[k].values[3]) == "0");

  CHECK(rep.y_vertices == std::vector<std::string>{"u", "v", "w"});
  CHECK(rep.rational_independence == "true");  // ln 8 and ln 13

  // Component table: {u} and {x} nontrivial, {x} critical in color 1 only.
  REQUIRE(rep.components.size() == 4);
  CHECK(rep.components[0].status[0] == "subcritical");
  CHECK(rep.components[3].status[0] == "critical");
  CHECK(rep.components[3].status[1] == "subcritical");
}

TEST_CASE("both-colors-critical flag at the preferred weights") {
  auto g = *builtin_skeleton("paper-4vertex");
  auto rep = classify_kms(g, Dynamics::from_exact(Rational(1, 8), Rational(1, 12)));
  REQUIRE(rep.extremes.size() == 4);
  REQUIRE(rep.extremes[0].ck_factor_iff_both_critical.has_value());
  CHECK(*rep.extremes[0].ck_factor_iff_both_critical);
  // 8 = 2^3 and 12 = 2^2 * 3 are not powers of a common base.
  CHECK(rep.rational_independence == "true");
}

TEST_CASE("float mode reproduces the exact critical classification") {
  auto g = *builtin_skeleton("paper-4vertex");
  auto rep = classify_kms(g, Dynamics::from_r_beta(std::log(8.0), std::log(13.0), 1.0));
  CHECK(rep.mode == "float");
  CHECK(rep.regime == "critical");
  CHECK(rep.simplex_dimension == 3);
  REQUIRE(rep.extremes.size() == 4);
  CHECK(rep.extremes[0].values[0].value == doctest::Approx(1.0 / 8).epsilon(1e-12));
  CHECK(rep.extremes[0].values[2].value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.rational_independence == "undetermined");
}

TEST_CASE("subcritical beta prunes the sink and recurses") {
  auto g = *builtin_skeleton("paper-4vertex");
  auto rep = classify_kms(g, Dynamics::from_r_beta(std::log(8.0), std::log(13.0), 0.9));
  CHECK(rep.regime == "above-critical");
  REQUIRE(rep.pruning.size() == 1);
  CHECK(rep.pruning[0].removed == std::vector<std::string>{"x"});
  CHECK(rep.simplex_dimension == 2);
  REQUIRE(rep.extremes.size() == 3);
  for (const auto& e : rep.extremes) CHECK(e.values[3].value == 0.0);
  CHECK(rep.y_vertices == std::vector<std::string>{"u", "v", "w"});
}

TEST_CASE("at the second critical level a unique state survives") {
  auto g = *builtin_skeleton("paper-4vertex");
  const double beta_c = std::log(6.0) / std::log(13.0);
  auto rep = classify_kms(g, Dynamics::from_r_beta(std::log(8.0), std::log(13.0), beta_c));
  CHECK(rep.regime == "critical");
  CHECK(rep.simplex_dimension == 0);
  REQUIRE(rep.extremes.size() == 1);
  const auto& unique = rep.extremes[0];
  CHECK(unique.base_vertex == "u");
  CHECK(unique.values[0].value == doctest::Approx(1.0));
  CHECK(unique.values[3].value == 0.0);
  // Two pruning stages: the supercritical sink, then the vanishing deduction.
  REQUIRE(rep.pruning.size() == 2);
  CHECK(rep.pruning[0].removed == std::vector<std::string>{"x"});
  CHECK(rep.pruning[1].removed == std::vector<std::string>{"v", "w"});
}

TEST_CASE("below every critical level there are no states") {
  auto g = *builtin_skeleton("paper-4vertex");
  auto rep = classify_kms(g, Dynamics::from_r_beta(std::log(8.0), std::log(13.0), 0.3));
  CHECK(rep.regime == "no-states");
  CHECK(rep.simplex_dimension == -1);
  CHECK(rep.extremes.empty());
}

TEST_CASE("two-vertex simplex above criticality with factorization verdicts") {
  auto g = *builtin_skeleton("paper-2vertex");
  auto rep = classify_kms(g, Dynamics::from_exact(Rational(1, 8), Rational(1, 12)));
  CHECK(rep.regime == "above-critical");
  CHECK(rep.simplex_dimension == 1);
  REQUIRE(rep.extremes.size() == 2);
  CHECK(exact_str(rep.extremes[0].values[0]) == "1");
  CHECK(exact_str(rep.extremes[1].values[0]) == "5/6");
  CHECK(exact_str(rep.extremes[1].values[1]) == "1/6");

  // eps(u) = (1, 0) does not kill the u-relation above criticality; the
  // second extreme point does.
  REQUIRE(rep.extremes[0].relations.size() == 1);
  CHECK(rep.extremes[0].relations[0].vertex == "u");
  CHECK(rep.extremes[0].relations[0].known_minimal);
  CHECK_FALSE(rep.extremes[0].relations[0].zero);
  CHECK(rep.extremes[0].fails_some_relation);
  CHECK(exact_str(rep.extremes[0].relations[0].value) == "3/8");
  CHECK(rep.extremes[1].relations[0].zero);
  CHECK_FALSE(rep.extremes[1].fails_some_relation);
}

TEST_CASE("three-vertex verdicts: the lifted state fails the v-relation") {
  auto g = *builtin_skeleton("paper-3vertex");
  auto rep = classify_kms(g, Dynamics::from_exact(Rational(1, 8), Rational(1, 12)));
  REQUIRE(rep.extremes.size() == 3);
  const auto& lifted = rep.extremes[1];  // eps(v) = (5/6, 1/6, 0)
  bool checked = false;
  for (const auto& r : lifted.relations)
    if (r.vertex == "v") {
      CHECK(exact_str(r.value) == "1/6");
      CHECK_FALSE(r.zero);
      checked = true;
    }
  CHECK(checked);
  CHECK(lifted.fails_some_relation);

  // The third extreme point kills every certified relation; the report keeps
  // the computed values rather than asserting anything stronger.
  const auto& third = rep.extremes[2];
  for (const auto& r : third.relations) CHECK(r.zero);
  CHECK_FALSE(third.fails_some_relation);
}

TEST_CASE("quotient classification equals the restriction of the lifted extremes") {
  auto g = *builtin_skeleton("paper-4vertex");
  auto rep = classify_kms(g, kCriticalExact);
  auto quotient_rep =
      classify_kms(quotient(g, {3}), Dynamics::from_exact(Rational(1, 8), Rational(1, 13)));
  REQUIRE(quotient_rep.extremes.size() == 3);
  REQUIRE(rep.extremes.size() == 4);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& full = rep.extremes[k + 1];
    const auto& sub = quotient_rep.extremes[k];
    CHECK(full.base_vertex == sub.base_vertex);
    for (std::size_t v = 0; v < 3; ++v)
      CHECK(*full.values[v].exact == *sub.values[v].exact);
  }
}

TEST_CASE("three-vertex family at its critical weights walks the vanishing chain") {
  auto g = *builtin_skeleton("paper-3vertex");
  auto rep = classify_kms(g, Dynamics::from_exact(Rational(1, 2), Rational(1, 7)));
  CHECK(rep.regime == "critical");
  CHECK(rep.simplex_dimension == 0);
  REQUIRE(rep.extremes.size() == 1);
  CHECK(exact_str(rep.extremes[0].values[0]) == "1");
  // The deduced zeros hold on the surviving state.
  CHECK(exact_str(rep.extremes[0].values[1]) == "0");
  CHECK(exact_str(rep.extremes[0].values[2]) == "0");
  // Color-1 criticality forces w first, then v in the two-vertex quotient.
  REQUIRE(rep.pruning.size() == 2);
  CHECK(rep.pruning[0].removed == std::vector<std::string>{"w"});
  CHECK(rep.pruning[1].removed == std::vector<std::string>{"v"});
  CHECK(rep.extremes[0].factors_through == std::vector<std::string>{"v", "w"});
}

TEST_CASE("critical sink outside the builtin shapes") {
  // Two looped components a <- b with bridge counts (1, 2); the commutation
  // constraint c2 (d1 - f1) = c1 (d2 - f2) holds.
  auto g = make_skeleton({"a", "b"}, {{1, 1}, {0, 2}}, {{1, 2}, {0, 3}});
  REQUIRE(validate(g).valid());
  auto rep = classify_kms(g, Dynamics::from_exact(Rational(1, 2), Rational(1, 5)));
  CHECK(rep.regime == "critical");
  CHECK(rep.simplex_dimension == 1);
  REQUIRE(rep.extremes.size() == 2);
  CHECK(rep.extremes[0].label == "psi(b)");
  CHECK(exact_str(rep.extremes[0].values[0]) == "1/2");
  CHECK(exact_str(rep.extremes[0].values[1]) == "1/2");
  CHECK(exact_str(rep.extremes[1].values[0]) == "1");
}

TEST_CASE("single-color critical vertex walks the one-color vanishing chain") {
  // Only blue edges exist; at x1 = 1/2 the looped vertex is critical, the
  // relation forces the source below it, and the terminal solve is the
  // one-vertex sink with a zero red loop count.
  auto g = make_skeleton({"p", "q"}, {{2, 1}, {0, 0}}, {{0, 0}, {0, 0}});
  REQUIRE(validate(g).valid());
  auto rep = classify_kms(g, Dynamics::from_exact(Rational(1, 2), Rational(1, 2)));
  CHECK(rep.regime == "critical");
  CHECK(rep.simplex_dimension == 0);
  REQUIRE(rep.extremes.size() == 1);
  CHECK(exact_str(rep.extremes[0].values[0]) == "1");
  CHECK(exact_str(rep.extremes[0].values[1]) == "0");
  REQUIRE(rep.pruning.size() == 1);
  CHECK(rep.pruning[0].removed == std::vector<std::string>{"q"});
}

TEST_CASE("uncertified critical patterns are refused") {
  // Two components critical at once.
  auto twin = make_skeleton({"a", "b"}, {{2, 0}, {0, 2}}, {{3, 0}, {0, 5}});
  REQUIRE(validate(twin).valid());
  CHECK_THROWS_AS(classify_kms(twin, Dynamics::from_exact(Rational(1, 2), Rational(1, 7))),
                  unsupported_error);

  // A critical component with more than one vertex.
  auto swap2 = make_skeleton({"a", "b"}, {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}});
  REQUIRE(validate(swap2).valid());
  CHECK_THROWS_AS(classify_kms(swap2, Dynamics::from_exact(Rational(1), Rational(1, 2))),
                  unsupported_error);
}

TEST_CASE("exact and float classifications agree on random instances") {
  std::mt19937 rng(211);
  int compared = 0;
  for (int trial = 0; trial < 40 && compared < 25; ++trial) {
    auto g = random_valid_skeleton(rng);
    auto x = random_subcritical_weights(rng, g);
    auto exact = classify_kms(g, Dynamics::from_exact(x.x1, x.x2));
    // The same weights as floating dynamics with beta = 1, r_i = -ln x_i.
    double r1 = -std::log(to_double(x.x1));
    double r2 = -std::log(to_double(x.x2));
    auto approx = classify_kms(g, Dynamics::from_r_beta(r1, r2, 1.0));
    CHECK(exact.regime == approx.regime);
    CHECK(exact.simplex_dimension == approx.simplex_dimension);
    REQUIRE(exact.extremes.size() == approx.extremes.size());
    for (std::size_t k = 0; k < exact.extremes.size(); ++k) {
      CHECK(exact.extremes[k].label == approx.extremes[k].label);
      for (std::size_t v = 0; v < g.size(); ++v)
        CHECK(approx.extremes[k].values[v].value ==
              doctest::Approx(exact.extremes[k].values[v].value).epsilon(1e-9));
    }
    ++compared;
  }
  CHECK(compared == 25);
}

TEST_CASE("existence pruning matches the first classification stage") {
  std::mt19937 rng(223);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_valid_skeleton(rng);
    // Push one color toward supercriticality now and then.
    auto x = random_subcritical_weights(rng, g);
    if (trial % 2) {
      double rho = spectral_radius_estimate(g.blue);
      if (rho > 0) {
        x.x1 = Rational(3, 2) / Rational(BigInt(static_cast<long>(rho)) + 1);
        x.x1.canonicalize();
        if (x.x1 > 1) x.x1 = Rational(1);
      }
    }
    auto exists = kms_exists(g, x, {});
    try {
      auto rep = classify_kms(g, Dynamics::from_exact(x.x1, x.x2));
      if (exists.forced_zero.empty()) continue;
      REQUIRE_FALSE(rep.pruning.empty());
      std::vector<std::string> removed = rep.pruning.front().removed;
      std::vector<std::string> expected;
      for (std::size_t v : exists.forced_zero) expected.push_back(g.vertices[v]);
      CHECK(removed == expected);
      CHECK((rep.regime == "no-states") == !exists.exists);
    } catch (const unsupported_error&) {
      // Critical patterns outside certification are fine to skip here.
    }
  }
}

TEST_CASE("exact mode distinguishes weights a hair beyond criticality") {
  auto g = *builtin_skeleton("paper-4vertex");
  // x1 rho = 1 + 1e-30: exactly supercritical, but indistinguishable from
  // critical in floating point.
  BigInt big = 1;
  for (int k = 0; k < 30; ++k) big *= 10;
  Rational x1(big + 1, big * 8);
  x1.canonicalize();
  CHECK(weight_status(g.blue, x1, {}) == SpectralStatus::Supercritical);
  CHECK(weight_status(g.blue, to_double(x1), {}) == SpectralStatus::Critical);
  Rational exact_eighth(1, 8);
  CHECK(weight_status(g.blue, exact_eighth, {}) == SpectralStatus::Critical);
}

TEST_CASE("invalid skeletons are rejected with a validation error") {
  auto bad = make_skeleton({"u", "v"}, {{2, 6}, {0, 0}}, {{6, 17}, {0, 0}});
  CHECK_THROWS_AS(classify_kms(bad, kCriticalExact), std::invalid_argument);
}

TEST_CASE("classification report serializes and round-trips") {
  auto g = *builtin_skeleton("paper-4vertex");
  auto rep = classify_kms(g, kCriticalExact);
  auto j = classify_to_json(rep);
  std::string text = j.dump(2);
  auto parsed = nlohmann::json::parse(text);
  CHECK(parsed.dump(2) == text);
  CHECK(parsed["regime"] == "critical");
  CHECK(parsed["extremes"][0]["values"][0]["exact"] == "1/8");
  CHECK(parsed["extremes"][0]["values"][0]["value"] == 0.125);

  std::string table = classify_to_table(rep);
  CHECK(table.find("psi(x)") != std::string::npos);
  CHECK(table.find("1/24") != std::string::npos);

  // Float mode has no exact fractions to render.
  auto frep = classify_kms(g, Dynamics::from_r_beta(std::log(8.0), std::log(13.0), 1.0));
  auto fj = classify_to_json(frep);
  CHECK(fj["extremes"][0]["values"][0]["exact"].is_null());
  CHECK(fj["extremes"][0]["values"][0]["value"].get<double>() ==
        doctest::Approx(0.125).epsilon(1e-12));
}
