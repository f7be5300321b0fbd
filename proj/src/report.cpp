#include "tkms/report.hpp"

#include <sstream>

namespace tkms {

using nlohmann::json;

json number_to_json(const NumberRef& n) {
  json j;
  j["exact"] = n.exact ? json(rational_to_string(*n.exact)) : json(nullptr);
  j["value"] = n.value;
  return j;
}

namespace {

json numbers_to_json(const std::vector<NumberRef>& v) {
  json arr = json::array();
  for (const auto& n : v) arr.push_back(number_to_json(n));
  return arr;
}

std::string render_number(const NumberRef& n) {
  std::ostringstream os;
  if (n.exact)
    os << rational_to_string(*n.exact) << " (" << n.value << ")";
  else
    os << n.value;
  return os.str();
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

json classify_to_json(const ClassifyReport& rep) {
  json j;
  j["mode"] = rep.mode;
  j["vertices"] = rep.vertices;
  j["weights"] = {{"x1", number_to_json(rep.x1)}, {"x2", number_to_json(rep.x2)}};
  j["dynamics"] = json::object();
  j["dynamics"]["beta"] = rep.beta ? json(*rep.beta) : json(nullptr);
  j["dynamics"]["r"] = rep.r ? json(std::vector<double>{rep.r->first, rep.r->second})
                             : json(nullptr);
  j["components"] = json::array();
  for (const auto& c : rep.components) {
    json jc;
    jc["members"] = c.members;
    jc["nontrivial"] = c.nontrivial;
    jc["rho"] = {c.rho[0], c.rho[1]};
    jc["beta_c"] = c.beta_c ? json(*c.beta_c) : json(nullptr);
    jc["status"] = c.nontrivial ? json(std::vector<std::string>{c.status[0], c.status[1]})
                                : json(nullptr);
    j["components"].push_back(std::move(jc));
  }
  j["pruning"] = json::array();
  for (const auto& p : rep.pruning)
    j["pruning"].push_back({{"reason", p.reason}, {"removed", p.removed}});
  j["regime"] = rep.regime;
  j["simplex_dimension"] = rep.simplex_dimension;
  j["subinvariance"] = {{"vertices", rep.y_vertices}, {"y", numbers_to_json(rep.y)}};
  j["extremes"] = json::array();
  for (const auto& e : rep.extremes) {
    json je;
    je["label"] = e.label;
    je["origin"] = e.origin;
    je["base_vertex"] = e.base_vertex;
    je["values"] = numbers_to_json(e.values);
    je["support"] = e.support;
    je["factors_through"] = e.factors_through;
    je["relations"] = json::array();
    for (const auto& r : e.relations)
      je["relations"].push_back({{"vertex", r.vertex},
                                 {"set", r.set_kind},
                                 {"known_minimal", r.known_minimal},
                                 {"value", number_to_json(r.value)},
                                 {"zero", r.zero}});
    je["fails_some_relation"] = e.fails_some_relation;
    je["ck_factor_iff_both_critical"] =
        e.ck_factor_iff_both_critical ? json(*e.ck_factor_iff_both_critical) : json(nullptr);
    j["extremes"].push_back(std::move(je));
  }
  j["rational_independence"] = rep.rational_independence;
  return j;
}

std::string classify_to_table(const ClassifyReport& rep) {
  std::ostringstream os;
  os << "regime: " << rep.regime << "  (mode " << rep.mode << ", x1 = " << render_number(rep.x1)
     << ", x2 = " << render_number(rep.x2) << ")\n";
  os << "components:\n";
  for (const auto& c : rep.components) {
    os << "  {" << join(c.members, ",") << "}  " << (c.nontrivial ? "nontrivial" : "trivial")
       << "  rho = (" << c.rho[0] << ", " << c.rho[1] << ")";
    if (c.nontrivial) os << "  status = (" << c.status[0] << ", " << c.status[1] << ")";
    if (c.beta_c) os << "  beta_c = " << *c.beta_c;
    os << "\n";
  }
  for (const auto& p : rep.pruning)
    os << "pruned {" << join(p.removed, ",") << "}: " << p.reason << "\n";
  if (rep.regime == "no-states") {
    os << "no KMS states at these weights\n";
    return os.str();
  }
  os << "simplex dimension: " << rep.simplex_dimension << "\n";
  if (!rep.y_vertices.empty()) {
    os << "subinvariance y on {" << join(rep.y_vertices, ",") << "}:";
    for (std::size_t i = 0; i < rep.y.size(); ++i) os << "  " << render_number(rep.y[i]);
    os << "\n";
  }
  os << "extreme states:\n";
  for (const auto& e : rep.extremes) {
    os << "  " << e.label << ":";
    for (std::size_t i = 0; i < e.values.size(); ++i)
      os << "  " << rep.vertices[i] << " = " << render_number(e.values[i]);
    os << "\n";
    if (!e.factors_through.empty())
      os << "      lifts through q_{" << join(e.factors_through, ",") << "}\n";
    for (const auto& r : e.relations)
      os << "      CK relation at " << r.vertex << " (" << r.set_kind
         << "): " << render_number(r.value) << (r.zero ? "  [vanishes]" : "  [nonzero]") << "\n";
    if (e.ck_factor_iff_both_critical)
      os << "      factors through the Cuntz-Krieger quotient iff both colors critical: "
         << (*e.ck_factor_iff_both_critical ? "yes" : "no") << "\n";
  }
  os << "rational independence: " << rep.rational_independence << "\n";
  return os.str();
}

json expansion_to_json(const TwoGraphSkeleton& g, const CkExpansion& ck) {
  json j;
  j["base"] = g.vertices[ck.base];
  j["terms"] = json::array();
  for (const auto& t : ck.terms) {
    json jt;
    jt["sign"] = t.sign;
    jt["degree"] = {t.degree.n1, t.degree.n2};
    std::vector<std::string> sources;
    BigInt count = 0;
    for (std::size_t w : t.sources) {
      sources.push_back(g.vertices[w]);
      count += path_count(g, t.degree, ck.base, w);
    }
    jt["sources"] = sources;
    jt["count"] = count.get_str();
    j["terms"].push_back(std::move(jt));
  }
  return j;
}

json validation_to_json(const TwoGraphSkeleton& g, const ValidationReport& rep) {
  json j;
  j["vertices"] = g.vertices;
  j["valid"] = rep.valid();
  j["violations"] = json::array();
  for (const auto& v : rep.violations)
    j["violations"].push_back({{"kind", v.kind},
                               {"row", g.vertices[v.row]},
                               {"col", g.vertices[v.col]},
                               {"detail", v.detail}});
  return j;
}

json sweep_to_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["beta"] = r.beta;
    j["regime"] = r.regime;
    j["simplex_dimension"] = r.simplex_dimension;
    j["survivors"] = r.survivors;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "beta,regime,simplex_dimension,survivors\n";
  for (const auto& r : rows) {
    os << r.beta << "," << r.regime << "," << r.simplex_dimension << ",";
    os << join(r.survivors, " ") << "\n";
  }
  return os.str();
}

std::string identities_to_text(const std::vector<IdentityResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "\n";
  return os.str();
}

}  // namespace tkms
