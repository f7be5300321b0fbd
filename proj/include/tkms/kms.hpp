#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tkms/ck.hpp"
#include "tkms/dynamics.hpp"
#include "tkms/skeleton.hpp"

namespace tkms {

struct EngineOptions {
  double rel_tol = 1e-9;    // floating comparisons
  double crit_tol = 1e-12;  // floating criticality detection: |x rho - 1| <= crit_tol
  std::uint32_t degree_cap = 64;
};

enum class SpectralStatus { Subcritical, Critical, Supercritical };

/// Position of x against 1/rho(A): exact mode decides with Sturm chains,
/// float mode with the crit_tol band around x rho = 1.
SpectralStatus weight_status(const IntMat& a, const Rational& x, const EngineOptions& opt);
SpectralStatus weight_status(const IntMat& a, double x, const EngineOptions& opt);

template <class S>
struct Subinvariance {
  std::vector<S> values;
  std::vector<double> tail_bound;  // per-vertex truncation bound (brute force only)
};

/// y as column sums of prod_i (1 - x_i A_i)^{-1}; exact in exact mode. For
/// skeletons matching a paper family shape the family closed forms are
/// evaluated as a cross-check (exact mode).
template <class S>
std::vector<S> subinvariance_closed(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                                    const EngineOptions& opt = {});

/// Truncated sum over all path degrees with n1 + n2 <= cap. Serial reference.
template <class S>
Subinvariance<S> subinvariance_bruteforce_serial(const TwoGraphSkeleton& g,
                                                 const WeightPoint<S>& x, std::uint32_t cap,
                                                 const EngineOptions& opt = {});

/// Same sum, degree shells distributed over OpenMP threads; the shell
/// combination order is fixed, so results match the serial reference.
template <class S>
Subinvariance<S> subinvariance_bruteforce(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                                          std::uint32_t cap, const EngineOptions& opt = {});

template <class S>
struct SimplexExtreme {
  std::size_t vertex;
  std::vector<S> epsilon;  // y_v^{-1} delta_v
  std::vector<S> values;   // m(epsilon), the state's vertex values
};

template <class S>
struct KmsSimplex {
  std::vector<S> y;
  std::vector<SimplexExtreme<S>> extremes;
  int dimension() const { return static_cast<int>(extremes.size()) - 1; }
};

/// The simplex of equilibrium states strictly above every critical level.
template <class S>
KmsSimplex<S> kms_simplex(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                          const EngineOptions& opt = {});

struct ComponentCritical {
  Component component;
  std::array<double, 2> rho{0.0, 0.0};
  double beta_c = 0.0;     // max(0, max_i ln rho_i / r_i)
  int attained_color = 0;  // 0 when unconstrained
};

struct CriticalBetaReport {
  std::vector<ComponentCritical> components;  // nontrivial components only
  double global = 0.0;
};

CriticalBetaReport critical_beta(const TwoGraphSkeleton& g, double r1, double r2);

struct CriticalSinkSolve {
  std::size_t vertex;
  std::vector<Rational> y_color1;  // indexed by the other vertices, in order
  std::vector<Rational> y_color2;
  std::vector<Rational> psi;       // full-length state vector
};

/// Block solve y = (f_i - E_i)^{-1} B_i for a hereditary single-vertex
/// component with loop counts f_i; both colors are solved and must agree.
/// Exact regardless of the dynamics mode.
CriticalSinkSolve critical_sink_solve(const TwoGraphSkeleton& g, std::size_t sink);

/// Public wrapper with the beta = 1 preconditions: the unique critical
/// component is a hereditary singleton, r_i >= ln f_i with equality for at
/// least one color, everything else strictly subcritical.
std::vector<Rational> kms1_critical_sink(const TwoGraphSkeleton& g, double r1, double r2,
                                         const EngineOptions& opt = {});

template <class S>
struct VanishingDeduction {
  std::vector<S> coefficients;  // the functional phi -> sum_w c_w phi(t_w)
  bool conclusive = false;      // c_u = 0 and c_w <= 0 elsewhere
  std::vector<std::size_t> forced;  // {w : c_w < 0}
};

template <class S>
VanishingDeduction<S> vanishing_deduction(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                                          std::size_t u, const EdgeClassSet& e,
                                          const EngineOptions& opt = {});

struct ExistsResult {
  bool exists = true;
  std::vector<std::size_t> forced_zero;  // hereditary closure of supercritical components
  TwoGraphSkeleton survivors;
};

template <class S>
ExistsResult kms_exists(const TwoGraphSkeleton& g, const WeightPoint<S>& x,
                        const EngineOptions& opt = {});

/// ln d1, ln d2 are rationally independent unless d1 and d2 are powers of a
/// common integer base. Requires d1, d2 >= 2.
bool rationally_independent(std::uint64_t d1, std::uint64_t d2);

// ----- full classification -----

struct PruneStage {
  std::string reason;
  std::vector<std::string> removed;
};

struct RelationCheck {
  std::string vertex;
  std::string set_kind;  // "minimal" | "full"
  bool known_minimal = false;
  NumberRef value;
  bool zero = false;
};

struct ExtremeReport {
  std::string label;
  std::string origin;  // "simplex" | "critical-sink"
  std::string base_vertex;
  std::vector<NumberRef> values;  // aligned with the full vertex list
  std::vector<std::string> support;
  std::vector<std::string> factors_through;  // hereditary zero set
  std::vector<RelationCheck> relations;
  bool fails_some_relation = false;
  std::optional<bool> ck_factor_iff_both_critical;  // critical-sink states only
};

struct ComponentReport {
  std::vector<std::string> members;
  bool nontrivial = false;
  std::array<double, 2> rho{0.0, 0.0};
  std::optional<double> beta_c;
  std::array<std::string, 2> status;  // at the given weights; nontrivial only
};

struct ClassifyReport {
  std::string mode;  // "exact" | "float"
  std::vector<std::string> vertices;
  NumberRef x1, x2;
  std::optional<double> beta;
  std::optional<std::pair<double, double>> r;
  std::vector<ComponentReport> components;
  std::vector<PruneStage> pruning;
  std::string regime;  // "above-critical" | "critical" | "no-states"
  int simplex_dimension = -1;
  std::vector<ExtremeReport> extremes;
  std::vector<std::string> y_vertices;  // stage whose subinvariance vector is reported
  std::vector<NumberRef> y;
  std::string rational_independence;  // "true" | "false" | "undetermined" | "n/a"
};

/// Dispatches on regime: prunes supercritical components, solves the critical
/// sink pattern, walks vanishing deductions through quotients, and attaches
/// Cuntz-Krieger relation values for every extreme state.
ClassifyReport classify_kms(const TwoGraphSkeleton& g, const Dynamics& dyn,
                            const EngineOptions& opt = {});

}  // namespace tkms
