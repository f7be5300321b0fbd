#include "tkms/kms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tkms/families.hpp"
#include "tkms/spectral.hpp"

namespace tkms {

namespace {

Rational scalar_cast(const Rational& v, const Rational&) { return v; }
double scalar_cast(const Rational& v, double) { return to_double(v); }

NumberRef make_ref(const Rational& v) { return NumberRef::from(v); }
NumberRef make_ref(double v) { return NumberRef::from(v); }

bool is_zero_value(const Rational& v, const EngineOptions&) { return v == 0; }
bool is_zero_value(double v, const EngineOptions& opt) { return std::fabs(v) <= opt.rel_tol; }

bool is_negative_value(const Rational& v, const EngineOptions&) { return v < 0; }
bool is_negative_value(double v, const EngineOptions& opt) { return v < -opt.rel_tol; }

template <class S>
Mat<S> weight_product(const TwoGraphSkeleton& g, const WeightPoint<S>& x) {
  const std::size_t n = g.size();
  Mat<S> m1 = Mat<S>::identity(n);
  Mat<S> m2 = Mat<S>::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (g.blue(i, j) != 0) m1(i, j) -= x.x1 * scalar_from_bigint_as(g.blue(i, j), S(0));
      if (g.red(i, j) != 0) m2(i, j) -= x.x2 * scalar_from_bigint_as(g.red(i, j), S(0));
    }
  return m1 * m2;
}

template <class S>
void require_subcritical(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                         const EngineOptions& opt) {
  for (int color : {1, 2})
    if (weight_status(g.matrix(color), x[color], opt) != SpectralStatus::Subcritical)
      throw std::domain_error("weights are not strictly subcritical: x" +
                              std::to_string(color) + " rho(A" + std::to_string(color) +
                              ") >= 1");
}

void check_family_forms(const TwoGraphSkeleton& g, const WeightPoint<Rational>& x,
                        const std::vector<Rational>& y) {
  auto expect = [&](const RationalFunction2& f, const Rational& got) {
    auto v = f.eval(x.x1, x.x2);
    if (!v || *v != got)
      throw std::logic_error("family closed form disagrees with the matrix computation");
  };
  if (auto p = match_two_vertex(g); p && validate(g).valid()) {
    expect(family_y_u(*p), y[0]);
    expect(family_y_v_blue_first(*p), y[1]);
  } else if (auto q = match_three_vertex(g); q && validate(g).valid()) {
    TwoVertexParams two{q->d1, q->d2, q->a1, q->a2};
    expect(family_y_u(two), y[0]);
    expect(family_y_v_blue_first(two), y[1]);
    expect(family_y_w_blue_first(*q), y[2]);
  }
}

}  // namespace

SpectralStatus weight_status(const IntMat& a, const Rational& x, const EngineOptions&) {
  if (x <= 0) throw std::invalid_argument("weight must be positive");
  int cmp = compare_spectral_radius(a, Rational(1) / x);
  if (cmp < 0) return SpectralStatus::Subcritical;
  if (cmp == 0) return SpectralStatus::Critical;
  return SpectralStatus::Supercritical;
}

SpectralStatus weight_status(const IntMat& a, double x, const EngineOptions& opt) {
  if (x <= 0) throw std::invalid_argument("weight must be positive");
  const double v = x * spectral_radius_estimate(a);
  if (std::fabs(v - 1.0) <= opt.crit_tol) return SpectralStatus::Critical;
  return v < 1.0 ? SpectralStatus::Subcritical : SpectralStatus::Supercritical;
}

template <class S>
std::vector<S> subinvariance_closed(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                                    const EngineOptions& opt) {
  require_valid(g);
  require_subcritical(g, x, opt);
  auto inv = invert(weight_product(g, x));
  if (!inv) throw std::logic_error("1 - x_i A_i singular in the subcritical regime");
  const std::size_t n = g.size();
  std::vector<S> y(n, S(0));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < n; ++i) y[v] += (*inv)(i, v);
  if constexpr (std::is_same_v<S, Rational>) check_family_forms(g, x, y);
  return y;
}

template std::vector<Rational> subinvariance_closed<Rational>(const TwoGraphSkeleton&,
                                                              const WeightPoint<Rational>&,
                                                              const EngineOptions&);
template std::vector<double> subinvariance_closed<double>(const TwoGraphSkeleton&,
                                                          const WeightPoint<double>&,
                                                          const EngineOptions&);

namespace {

template <class S>
std::vector<std::vector<S>> bruteforce_shells(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                                              std::uint32_t cap, bool parallel) {
  const std::size_t n = g.size();
  std::vector<S> xp1(cap + 1, S(1)), xp2(cap + 1, S(1));
  for (std::uint32_t k = 1; k <= cap; ++k) {
    xp1[k] = xp1[k - 1] * x.x1;
    xp2[k] = xp2[k - 1] * x.x2;
  }
  std::vector<IntMat> pow1(cap + 1);
  pow1[0] = IntMat::identity(n);
  for (std::uint32_t k = 1; k <= cap; ++k) pow1[k] = pow1[k - 1] * g.blue;

  std::vector<std::vector<S>> partial(cap + 1, std::vector<S>(n, S(0)));
  const int limit = static_cast<int>(cap);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int n1 = 0; n1 <= limit; ++n1) {
    IntMat r = pow1[static_cast<std::size_t>(n1)];
    for (std::uint32_t n2 = 0; n1 + static_cast<int>(n2) <= limit; ++n2) {
      if (n2 > 0) r *= g.red;
      const S weight = xp1[static_cast<std::size_t>(n1)] * xp2[n2];
      for (std::size_t w = 0; w < n; ++w) {
        BigInt colsum = 0;
        for (std::size_t v = 0; v < n; ++v) colsum += r(v, w);
        if (colsum != 0)
          partial[static_cast<std::size_t>(n1)][w] +=
              weight * scalar_from_bigint_as(colsum, S(0));
      }
    }
  }
  return partial;
}

template <class S>
Subinvariance<S> bruteforce_impl(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                                 std::uint32_t cap, const EngineOptions& opt, bool parallel) {
  require_valid(g);
  require_subcritical(g, x, opt);
  auto partial = bruteforce_shells(g, x, cap, parallel);
  Subinvariance<S> out;
  out.values.assign(g.size(), S(0));
  for (const auto& shell : partial)
    for (std::size_t w = 0; w < g.size(); ++w) out.values[w] += shell[w];
  out.tail_bound =
      column_sum_tail_bounds(g.blue, g.red, to_double(x.x1), to_double(x.x2), cap);
  return out;
}

}  // namespace

template <class S>
Subinvariance<S> subinvariance_bruteforce_serial(const TwoGraphSkeleton& g,
                                                 const WeightPoint<S>& x, std::uint32_t cap,
                                                 const EngineOptions& opt) {
  return bruteforce_impl(g, x, cap, opt, false);
}

template <class S>
Subinvariance<S> subinvariance_bruteforce(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                                          std::uint32_t cap, const EngineOptions& opt) {
  return bruteforce_impl(g, x, cap, opt, true);
}

template Subinvariance<Rational> subinvariance_bruteforce_serial<Rational>(
    const TwoGraphSkeleton&, const WeightPoint<Rational>&, std::uint32_t, const EngineOptions&);
template Subinvariance<double> subinvariance_bruteforce_serial<double>(const TwoGraphSkeleton&,
                                                                       const WeightPoint<double>&,
                                                                       std::uint32_t,
                                                                       const EngineOptions&);
template Subinvariance<Rational> subinvariance_bruteforce<Rational>(const TwoGraphSkeleton&,
                                                                    const WeightPoint<Rational>&,
                                                                    std::uint32_t,
                                                                    const EngineOptions&);
template Subinvariance<double> subinvariance_bruteforce<double>(const TwoGraphSkeleton&,
                                                                const WeightPoint<double>&,
                                                                std::uint32_t,
                                                                const EngineOptions&);

template <class S>
KmsSimplex<S> kms_simplex(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                          const EngineOptions& opt) {
  require_valid(g);
  require_subcritical(g, x, opt);
  auto inv = invert(weight_product(g, x));
  if (!inv) throw std::logic_error("1 - x_i A_i singular in the subcritical regime");
  const std::size_t n = g.size();
  KmsSimplex<S> out;
  out.y.assign(n, S(0));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < n; ++i) out.y[v] += (*inv)(i, v);
  if constexpr (std::is_same_v<S, Rational>) check_family_forms(g, x, out.y);
  for (std::size_t v = 0; v < n; ++v) {
    SimplexExtreme<S> e;
    e.vertex = v;
    e.epsilon.assign(n, S(0));
    e.epsilon[v] = S(1) / out.y[v];
    e.values.assign(n, S(0));
    for (std::size_t i = 0; i < n; ++i) e.values[i] = (*inv)(i, v) / out.y[v];
    out.extremes.push_back(std::move(e));
  }
  return out;
}

template KmsSimplex<Rational> kms_simplex<Rational>(const TwoGraphSkeleton&,
                                                    const WeightPoint<Rational>&,
                                                    const EngineOptions&);
template KmsSimplex<double> kms_simplex<double>(const TwoGraphSkeleton&,
                                                const WeightPoint<double>&,
                                                const EngineOptions&);

CriticalBetaReport critical_beta(const TwoGraphSkeleton& g, double r1, double r2) {
  require_valid(g);
  if (r1 <= 0 || r2 <= 0) throw std::invalid_argument("weights r must be positive");
  CriticalBetaReport out;
  for (const Component& c : strongly_connected_components(g)) {
    if (!c.nontrivial) continue;
    ComponentCritical cc;
    cc.component = c;
    const double r[2] = {r1, r2};
    for (int color : {1, 2}) {
      IntMat sub = g.matrix(color).submatrix(c.members, c.members);
      cc.rho[color - 1] = spectral_radius_estimate(sub);
    }
    cc.beta_c = 0.0;
    cc.attained_color = 0;
    for (int color : {1, 2}) {
      if (cc.rho[color - 1] <= 0) continue;
      double cand = std::log(cc.rho[color - 1]) / r[color - 1];
      if (cand > cc.beta_c) {
        cc.beta_c = cand;
        cc.attained_color = color;
      }
    }
    out.global = std::max(out.global, cc.beta_c);
    out.components.push_back(std::move(cc));
  }
  return out;
}

CriticalSinkSolve critical_sink_solve(const TwoGraphSkeleton& g, std::size_t sink) {
  const std::size_t n = g.size();
  for (int color : {1, 2})
    for (std::size_t w = 0; w < n; ++w)
      if (w != sink && g.matrix(color)(sink, w) != 0)
        throw unsupported_error("critical component is not a hereditary singleton");
  std::vector<std::size_t> others;
  for (std::size_t v = 0; v < n; ++v)
    if (v != sink) others.push_back(v);

  CriticalSinkSolve out;
  out.vertex = sink;
  std::array<std::vector<Rational>, 2> ys;
  for (int color : {1, 2}) {
    Mat<Rational> system(others.size(), others.size());
    std::vector<Rational> rhs(others.size());
    const IntMat& a = g.matrix(color);
    const BigInt f = a(sink, sink);
    for (std::size_t i = 0; i < others.size(); ++i) {
      rhs[i] = Rational(a(others[i], sink));
      for (std::size_t j = 0; j < others.size(); ++j) {
        system(i, j) = Rational(-a(others[i], others[j]));
        if (i == j) system(i, j) += Rational(f);
      }
    }
    auto sol = solve_linear(system, rhs);
    if (!sol)
      throw unsupported_error("block solve (f - E) y = B is singular for color " +
                              std::to_string(color));
    ys[color - 1] = std::move(*sol);
  }
  if (ys[0] != ys[1])
    throw std::runtime_error(
        "color-1 and color-2 block solves disagree; skeleton is inconsistent");
  out.y_color1 = ys[0];
  out.y_color2 = ys[1];

  std::vector<Rational> z(n, Rational(1));
  for (std::size_t i = 0; i < others.size(); ++i) z[others[i]] = ys[0][i];
  Rational norm(0);
  for (const Rational& v : z) norm += v;
  out.psi.assign(n, Rational(0));
  for (std::size_t v = 0; v < n; ++v) out.psi[v] = z[v] / norm;
  return out;
}

std::vector<Rational> kms1_critical_sink(const TwoGraphSkeleton& g, double r1, double r2,
                                         const EngineOptions& opt) {
  require_valid(g);
  if (r1 <= 0 || r2 <= 0) throw std::invalid_argument("weights r must be positive");
  const WeightPoint<double> x{std::exp(-r1), std::exp(-r2)};
  std::optional<std::size_t> critical;
  for (const Component& c : strongly_connected_components(g)) {
    if (!c.nontrivial) continue;
    bool any_crit = false;
    for (int color : {1, 2}) {
      IntMat sub = g.matrix(color).submatrix(c.members, c.members);
      switch (weight_status(sub, x[color], opt)) {
        case SpectralStatus::Supercritical:
          throw unsupported_error("component is supercritical at beta = 1");
        case SpectralStatus::Critical:
          any_crit = true;
          break;
        case SpectralStatus::Subcritical:
          break;
      }
    }
    if (!any_crit) continue;
    if (critical) throw unsupported_error("more than one critical component at beta = 1");
    if (c.members.size() != 1)
      throw unsupported_error("critical component has more than one vertex");
    critical = c.members.front();
  }
  if (!critical) throw unsupported_error("no critical component at beta = 1");
  return critical_sink_solve(g, *critical).psi;
}

template <class S>
VanishingDeduction<S> vanishing_deduction(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                                          std::size_t u, const EdgeClassSet& e,
                                          const EngineOptions& opt) {
  require_valid(g);
  auto expanded = ck_expand(g, u, e);
  if (!expanded.expansion)
    throw unsupported_error("Cuntz-Krieger expansion undecidable: " + expanded.note);
  const std::size_t n = g.size();
  VanishingDeduction<S> out;
  out.coefficients.assign(n, S(0));
  for (const CkTerm& term : expanded.expansion->terms) {
    S weight = scalar_pow(x.x1, term.degree.n1) * scalar_pow(x.x2, term.degree.n2);
    for (std::size_t w : term.sources) {
      BigInt count = path_count(g, term.degree, u, w, opt.degree_cap);
      if (count == 0) continue;
      S val = weight * scalar_from_bigint_as(count, S(0));
      if (term.sign > 0)
        out.coefficients[w] += val;
      else
        out.coefficients[w] -= val;
    }
  }
  out.conclusive = is_zero_value(out.coefficients[u], opt);
  for (std::size_t w = 0; w < n && out.conclusive; ++w) {
    if (w == u) continue;
    if (!is_zero_value(out.coefficients[w], opt) && !is_negative_value(out.coefficients[w], opt))
      out.conclusive = false;
  }
  if (out.conclusive)
    for (std::size_t w = 0; w < n; ++w)
      if (w != u && is_negative_value(out.coefficients[w], opt)) out.forced.push_back(w);
  return out;
}

template VanishingDeduction<Rational> vanishing_deduction<Rational>(const TwoGraphSkeleton&,
                                                                    const WeightPoint<Rational>&,
                                                                    std::size_t,
                                                                    const EdgeClassSet&,
                                                                    const EngineOptions&);
template VanishingDeduction<double> vanishing_deduction<double>(const TwoGraphSkeleton&,
                                                                const WeightPoint<double>&,
                                                                std::size_t, const EdgeClassSet&,
                                                                const EngineOptions&);

template <class S>
ExistsResult kms_exists(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                        const EngineOptions& opt) {
  require_valid(g);
  std::vector<std::size_t> seed;
  for (const Component& c : strongly_connected_components(g)) {
    if (!c.nontrivial) continue;
    for (int color : {1, 2}) {
      IntMat sub = g.matrix(color).submatrix(c.members, c.members);
      if (weight_status(sub, x[color], opt) == SpectralStatus::Supercritical) {
        seed.insert(seed.end(), c.members.begin(), c.members.end());
        break;
      }
    }
  }
  ExistsResult out;
  out.forced_zero = hereditary_closure(g, seed);
  out.exists = out.forced_zero.size() < g.size();
  out.survivors = quotient(g, out.forced_zero);
  return out;
}

template ExistsResult kms_exists<Rational>(const TwoGraphSkeleton&, const WeightPoint<Rational>&,
                                           const EngineOptions&);
template ExistsResult kms_exists<double>(const TwoGraphSkeleton&, const WeightPoint<double>&,
                                         const EngineOptions&);

bool rationally_independent(std::uint64_t d1, std::uint64_t d2) {
  if (d1 < 2 || d2 < 2) throw std::invalid_argument("rational independence requires d >= 2");
  // d = root^g with root not a perfect power; two numbers are powers of a
  // common base exactly when their primitive roots coincide.
  auto primitive_root = [](std::uint64_t d) {
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
    std::uint64_t rest = d;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
      if (rest % p != 0) continue;
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      factors.push_back({p, e});
    }
    if (rest > 1) factors.push_back({rest, 1});
    unsigned g = 0;
    for (const auto& [p, e] : factors) g = std::gcd(g, e);
    std::uint64_t root = 1;
    for (const auto& [p, e] : factors)
      for (unsigned k = 0; k < e / g; ++k) root *= p;
    return root;
  };
  return primitive_root(d1) != primitive_root(d2);
}

// ----- classification -----

namespace {

template <class S>
struct StageExtreme {
  std::string label;
  std::string origin;
  std::string base_vertex;
  std::map<std::string, S> values;
  std::optional<bool> both_critical;
};

template <class S>
struct StageResult {
  std::string regime;
  std::vector<PruneStage> pruning;
  std::vector<StageExtreme<S>> extremes;
  std::vector<std::string> y_vertices;
  std::vector<S> y;
};

std::vector<std::string> id_list(const TwoGraphSkeleton& g, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t v : idx) out.push_back(g.vertices[v]);
  return out;
}

template <class S>
void add_simplex_extremes(const TwoGraphSkeleton& g, const KmsSimplex<S>& simplex,
                          StageResult<S>& out) {
  out.y_vertices = g.vertices;
  out.y = simplex.y;
  for (const auto& e : simplex.extremes) {
    StageExtreme<S> se;
    se.base_vertex = g.vertices[e.vertex];
    se.label = "eps(" + se.base_vertex + ")";
    se.origin = "simplex";
    for (std::size_t v = 0; v < g.size(); ++v) se.values[g.vertices[v]] = e.values[v];
    out.extremes.push_back(std::move(se));
  }
}

template <class S>
void classify_stage(const TwoGraphSkeleton& g, const WeightPoint<S>& x, const EngineOptions& opt,
                    StageResult<S>& out) {
  const auto comps = strongly_connected_components(g);

  std::vector<std::size_t> supercritical_seed;
  std::vector<const Component*> critical;
  std::vector<std::array<SpectralStatus, 2>> statuses;
  std::vector<const Component*> nontrivial;
  for (const Component& c : comps) {
    if (!c.nontrivial) continue;
    std::array<SpectralStatus, 2> st{};
    for (int color : {1, 2}) {
      IntMat sub = g.matrix(color).submatrix(c.members, c.members);
      st[color - 1] = weight_status(sub, x[color], opt);
    }
    if (st[0] == SpectralStatus::Supercritical || st[1] == SpectralStatus::Supercritical)
      supercritical_seed.insert(supercritical_seed.end(), c.members.begin(), c.members.end());
    else if (st[0] == SpectralStatus::Critical || st[1] == SpectralStatus::Critical)
      critical.push_back(&c);
    nontrivial.push_back(&c);
    statuses.push_back(st);
  }

  if (!supercritical_seed.empty()) {
    auto h = hereditary_closure(g, supercritical_seed);
    PruneStage stage;
    stage.reason = "supercritical component: positivity forces the vertex values to vanish";
    stage.removed = id_list(g, h);
    out.pruning.push_back(std::move(stage));
    if (h.size() == g.size()) {
      out.regime = "no-states";
      return;
    }
    classify_stage(quotient(g, h), x, opt, out);
    return;
  }

  if (critical.empty()) {
    out.regime = "above-critical";
    add_simplex_extremes(g, kms_simplex(g, x, opt), out);
    return;
  }

  out.regime = "critical";
  if (critical.size() > 1)
    throw unsupported_error("more than one critical component at these weights");
  const Component& c = *critical.front();
  if (c.members.size() != 1)
    throw unsupported_error("critical component has more than one vertex");
  const std::size_t sink = c.members.front();

  bool hereditary_singleton = true;
  for (int color : {1, 2})
    for (std::size_t w = 0; w < g.size(); ++w)
      if (w != sink && g.matrix(color)(sink, w) != 0) hereditary_singleton = false;

  if (hereditary_singleton) {
    auto solve = critical_sink_solve(g, sink);
    StageExtreme<S> psi;
    psi.base_vertex = g.vertices[sink];
    psi.label = "psi(" + psi.base_vertex + ")";
    psi.origin = "critical-sink";
    for (std::size_t v = 0; v < g.size(); ++v)
      psi.values[g.vertices[v]] = scalar_cast(solve.psi[v], S(0));
    std::array<SpectralStatus, 2> st{};
    for (std::size_t k = 0; k < nontrivial.size(); ++k)
      if (nontrivial[k] == &c) st = statuses[k];
    psi.both_critical =
        st[0] == SpectralStatus::Critical && st[1] == SpectralStatus::Critical;
    out.extremes.push_back(std::move(psi));
    if (g.size() > 1) {
      TwoGraphSkeleton rest = quotient(g, {sink});
      add_simplex_extremes(rest, kms_simplex(rest, x, opt), out);
    }
    return;
  }

  // The critical vertex still receives edges from below: the Cuntz-Krieger
  // relation at the critical vertex forces the sources below it to vanish.
  auto minimal = minimal_exhaustive_set(g, sink);
  if (minimal.status != MinimalStatus::Known)
    throw unsupported_error(
        "critical vertex has no certified minimal exhaustive set; cannot deduce vanishing");
  auto deduction = vanishing_deduction(g, x, sink, minimal.set, opt);
  if (!deduction.conclusive || deduction.forced.empty())
    throw unsupported_error("vanishing deduction inconclusive at the critical vertex");
  auto h = hereditary_closure(g, deduction.forced);
  for (std::size_t v : h)
    if (v == sink)
      throw unsupported_error("vanishing deduction would erase the critical vertex");
  PruneStage stage;
  stage.reason = "Cuntz-Krieger positivity at critical vertex " + g.vertices[sink] +
                 " forces these vertex values to vanish";
  stage.removed = id_list(g, h);
  out.pruning.push_back(std::move(stage));
  classify_stage(quotient(g, h), x, opt, out);
}

/// Largest hereditary subset of the zero set of a state.
std::vector<std::string> factor_through_set(const TwoGraphSkeleton& g,
                                            const std::vector<char>& zero) {
  std::vector<std::string> out;
  for (std::size_t z = 0; z < g.size(); ++z) {
    if (!zero[z]) continue;
    bool ok = true;
    for (std::size_t v : hereditary_closure(g, {z}))
      if (!zero[v]) ok = false;
    if (ok) out.push_back(g.vertices[z]);
  }
  return out;
}

template <class S>
ClassifyReport classify_impl(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                             const EngineOptions& opt) {
  require_valid(g);
  ClassifyReport rep;
  rep.vertices = g.vertices;
  rep.x1 = make_ref(x.x1);
  rep.x2 = make_ref(x.x2);

  for (const Component& c : strongly_connected_components(g)) {
    ComponentReport cr;
    cr.members = id_list(g, c.members);
    cr.nontrivial = c.nontrivial;
    for (int color : {1, 2}) {
      IntMat sub = g.matrix(color).submatrix(c.members, c.members);
      cr.rho[color - 1] = spectral_radius_estimate(sub);
      if (c.nontrivial) {
        switch (weight_status(sub, x[color], opt)) {
          case SpectralStatus::Subcritical:
            cr.status[color - 1] = "subcritical";
            break;
          case SpectralStatus::Critical:
            cr.status[color - 1] = "critical";
            break;
          case SpectralStatus::Supercritical:
            cr.status[color - 1] = "supercritical";
            break;
        }
      }
    }
    rep.components.push_back(std::move(cr));
  }

  StageResult<S> stage;
  classify_stage(g, x, opt, stage);
  rep.pruning = stage.pruning;
  rep.regime = stage.regime;
  rep.simplex_dimension = static_cast<int>(stage.extremes.size()) - 1;
  for (const std::string& v : stage.y_vertices) rep.y_vertices.push_back(v);
  for (const S& v : stage.y) rep.y.push_back(make_ref(v));

  for (const auto& se : stage.extremes) {
    ExtremeReport er;
    er.label = se.label;
    er.origin = se.origin;
    er.base_vertex = se.base_vertex;
    er.ck_factor_iff_both_critical = se.both_critical;

    std::vector<S> lifted(g.size(), S(0));
    for (std::size_t v = 0; v < g.size(); ++v) {
      auto it = se.values.find(g.vertices[v]);
      if (it != se.values.end()) lifted[v] = it->second;
    }
    std::vector<char> zero(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) {
      er.values.push_back(make_ref(lifted[v]));
      if (is_zero_value(lifted[v], opt))
        zero[v] = 1;
      else
        er.support.push_back(g.vertices[v]);
    }
    er.factors_through = factor_through_set(g, zero);

    for (std::size_t z = 0; z < g.size(); ++z) {
      auto minimal = minimal_exhaustive_set(g, z);
      if (minimal.status == MinimalStatus::NoRelation) continue;
      RelationCheck check;
      check.vertex = g.vertices[z];
      const EdgeClassSet& set = minimal.status == MinimalStatus::Known
                                    ? minimal.set
                                    : EdgeClassSet::full_at(g, z);
      check.set_kind = minimal.status == MinimalStatus::Known ? "minimal" : "full";
      check.known_minimal = minimal.status == MinimalStatus::Known;
      auto expanded = ck_expand(g, z, set);
      if (!expanded.expansion) continue;  // not decidable at class level
      S value = ck_evaluate(g, *expanded.expansion, x, lifted);
      check.value = make_ref(value);
      check.zero = is_zero_value(value, opt);
      if (!check.zero) er.fails_some_relation = true;
      er.relations.push_back(std::move(check));
    }
    rep.extremes.push_back(std::move(er));
  }

  rep.rational_independence = "n/a";
  if (rep.regime == "critical") {
    rep.rational_independence = "undetermined";
    if constexpr (std::is_same_v<S, Rational>) {
      const Rational& x1 = x.x1;
      const Rational& x2 = x.x2;
      if (x1.get_num() == 1 && x2.get_num() == 1 && x1.get_den() > 1 && x2.get_den() > 1) {
        std::uint64_t n1 = mpz_get_ui(x1.get_den().get_mpz_t());
        std::uint64_t n2 = mpz_get_ui(x2.get_den().get_mpz_t());
        rep.rational_independence = rationally_independent(n1, n2) ? "true" : "false";
      }
    }
  }
  return rep;
}

}  // namespace

ClassifyReport classify_kms(const TwoGraphSkeleton& g, const Dynamics& dyn,
                            const EngineOptions& opt) {
  ClassifyReport rep;
  if (dyn.exact()) {
    rep = classify_impl<Rational>(g, *dyn.exact_x, opt);
    rep.mode = "exact";
  } else {
    rep = classify_impl<double>(g, dyn.float_x(), opt);
    rep.mode = "float";
  }
  rep.beta = dyn.beta;
  if (dyn.r) rep.r = *dyn.r;
  return rep;
}

}  // namespace tkms
