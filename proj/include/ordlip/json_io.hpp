#pragma once

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ordlip/extension.hpp"
#include "ordlip/generators.hpp"
#include "ordlip/poset.hpp"
#include "ordlip/radiality.hpp"
#include "ordlip/representation.hpp"
#include "ordlip/uc_extension.hpp"

namespace ordlip::io {

using nlohmann::json;

namespace detail {

// Infinite endpoints have no JSON number form; they travel as strings.
inline json num_or_inf(double v) {
  if (v == kInf) return "+inf";
  if (v == -kInf) return "-inf";
  return v;
}

inline double parse_num_or_inf(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "+inf" || s == "inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw Error(Errc::ParseError, std::string(what) + " must be a number or \"+inf\"/\"-inf\"");
}

inline const json& require(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw Error(Errc::ParseError, std::string(where) + " is missing required key \"" + key + "\"");
  return j.at(key);
}

inline std::string metric_violation_brief(const MetricViolation& v) {
  std::ostringstream s;
  switch (v.kind) {
    case MetricViolationKind::NonSquare: s << "matrix is not square"; break;
    case MetricViolationKind::NegativeEntry: s << "entry (" << v.i << "," << v.j << ") is not positive"; break;
    case MetricViolationKind::NonZeroDiagonal: s << "diagonal entry " << v.i << " is nonzero"; break;
    case MetricViolationKind::Asymmetric: s << "entries (" << v.i << "," << v.j << ") disagree"; break;
    case MetricViolationKind::TriangleViolation:
      s << "triangle fails at (" << v.i << "," << v.j << "," << v.k << ")";
      break;
  }
  return s.str();
}

inline std::string order_violation_brief(const OrderViolation& v) {
  std::ostringstream s;
  switch (v.kind) {
    case OrderViolationKind::NonSquare: s << "relation matrix is not square"; break;
    case OrderViolationKind::NotReflexive: s << "relation is not reflexive at " << v.i; break;
    case OrderViolationKind::NotAntisymmetric: s << "antisymmetry fails at (" << v.i << "," << v.j << ")"; break;
    case OrderViolationKind::NotTransitive:
      s << "transitivity fails at (" << v.i << "," << v.j << "," << v.k << ")";
      break;
  }
  return s.str();
}

inline std::string fixed17(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Instances

inline json poset_to_json(const MetricPoset& poset) {
  json j;
  if (!poset.labels.empty()) j["labels"] = poset.labels;
  j["dist"] = poset.metric.dist;
  json pairs = json::array();
  for (int i = 0; i < poset.size(); ++i)
    for (int k = 0; k < poset.size(); ++k)
      if (i != k && poset.ge(i, k)) pairs.push_back({i, k});
  j["order"] = {{"pairs", std::move(pairs)}, {"closure", false}};
  return j;
}

inline MetricPoset poset_from_json(const json& j, const Context& ctx = {}) {
  const json& dist_json = detail::require(j, "dist", "instance");
  if (!dist_json.is_array() || dist_json.empty())
    throw Error(Errc::ParseError, "\"dist\" must be a nonempty array of rows");
  Matrix dist;
  dist.reserve(dist_json.size());
  for (const auto& row : dist_json) {
    if (!row.is_array()) throw Error(Errc::ParseError, "\"dist\" rows must be arrays");
    std::vector<double> r;
    r.reserve(row.size());
    for (const auto& v : row) {
      if (!v.is_number()) throw Error(Errc::ParseError, "\"dist\" entries must be numbers");
      r.push_back(v.get<double>());
    }
    dist.push_back(std::move(r));
  }
  const int n = static_cast<int>(dist.size());

  auto mv = validate_metric(dist, ctx);
  if (!mv.ok())
    throw Error(Errc::InvalidMetric, detail::metric_violation_brief(mv.violations.front()) + " (" +
                                         std::to_string(mv.violations.size()) + " violation(s))");

  const json& order_json = detail::require(j, "order", "instance");
  const json& pairs_json = detail::require(order_json, "pairs", "order");
  bool closure = true;
  if (order_json.contains("closure")) {
    if (!order_json.at("closure").is_boolean())
      throw Error(Errc::ParseError, "\"closure\" must be a boolean");
    closure = order_json.at("closure").get<bool>();
  }
  std::vector<std::pair<int, int>> pairs;
  if (!pairs_json.is_array()) throw Error(Errc::ParseError, "\"pairs\" must be an array");
  pairs.reserve(pairs_json.size());
  for (const auto& p : pairs_json) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw Error(Errc::ParseError, "order pairs must be [i, j] index pairs");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  auto ov = order_from_pairs(n, pairs, closure, ctx);
  if (!ov.ok())
    throw Error(Errc::InvalidOrder, detail::order_violation_brief(ov.violations.front()) + " (" +
                                        std::to_string(ov.violations.size()) + " violation(s))");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& lj = j.at("labels");
    if (!lj.is_array()) throw Error(Errc::ParseError, "\"labels\" must be an array of strings");
    for (const auto& l : lj) {
      if (!l.is_string()) throw Error(Errc::ParseError, "\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != n)
      throw Error(Errc::ParseError, "label count does not match point count");
  }
  return make_metric_poset(std::move(*mv.metric), std::move(*ov.order), std::move(labels));
}

// ---------------------------------------------------------------------------
// Partial functions

inline json function_to_json(const PartialFunction& f) {
  return json{{"domain", f.domain.members}, {"values", f.values}, {"K", f.K}};
}

inline PartialFunction function_from_json(const json& j, const Context& = {}) {
  const json& domain_json = detail::require(j, "domain", "function");
  const json& values_json = detail::require(j, "values", "function");
  if (!domain_json.is_array() || !values_json.is_array())
    throw Error(Errc::ParseError, "\"domain\" and \"values\" must be arrays");
  std::vector<int> domain;
  domain.reserve(domain_json.size());
  for (const auto& d : domain_json) {
    if (!d.is_number_integer()) throw Error(Errc::ParseError, "\"domain\" entries must be integers");
    domain.push_back(d.get<int>());
  }
  std::vector<std::vector<double>> values;
  values.reserve(values_json.size());
  for (const auto& row : values_json) {
    std::vector<double> r;
    if (row.is_number()) {
      r.push_back(row.get<double>());  // scalar shorthand: a flat list of numbers
    } else if (row.is_array()) {
      for (const auto& v : row) {
        if (!v.is_number()) throw Error(Errc::ParseError, "\"values\" entries must be numbers");
        r.push_back(v.get<double>());
      }
    } else {
      throw Error(Errc::ParseError, "\"values\" rows must be numbers or arrays of numbers");
    }
    values.push_back(std::move(r));
  }
  double K = 1.0;
  if (j.contains("K")) {
    if (!j.at("K").is_number()) throw Error(Errc::ParseError, "\"K\" must be a number");
    K = j.at("K").get<double>();
  }
  return make_partial_function(std::move(domain), std::move(values), K);
}

// ---------------------------------------------------------------------------
// Reports and outcomes

inline const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::RC: return "RC";
    case ViolationKind::D1: return "D1";
    case ViolationKind::D2: return "D2";
  }
  return "?";
}

inline json report_to_json(const RadialityReport& r) {
  json violations = json::array();
  for (const auto& w : r.violations)
    violations.push_back({{"kind", violation_kind_name(w.kind)},
                          {"triple", {w.x, w.y, w.z}},
                          {"lhs", w.lhs},
                          {"rhs", w.rhs}});
  return json{{"radially_convex", r.radially_convex},
              {"d1", r.d1_holds},
              {"d2", r.d2_holds},
              {"radial", r.radial},
              {"violations", std::move(violations)}};
}

inline const char* selector_name(Selector s) {
  switch (s) {
    case Selector::Min: return "min";
    case Selector::Max: return "max";
    case Selector::Mid: return "mid";
  }
  return "?";
}

inline const char* point_order_name(PointOrder p) {
  switch (p) {
    case PointOrder::Ascending: return "ascending";
    case PointOrder::Descending: return "descending";
    case PointOrder::Custom: return "custom";
  }
  return "?";
}

inline json outcome_to_json(const ExtensionOutcome& o) {
  json infeasible = json::array();
  for (auto [p, t] : o.infeasible_points) infeasible.push_back({p, t});
  json policy = {{"selector", selector_name(o.policy_used.selector)},
                 {"point_order", point_order_name(o.policy_used.point_order)}};
  if (o.policy_used.point_order == PointOrder::Custom) policy["custom_order"] = o.policy_used.custom_order;
  return json{{"status", o.status == ExtensionStatus::Feasible ? "Feasible" : "Infeasible"},
              {"F", o.F},
              {"infeasible_points", std::move(infeasible)},
              {"policy", std::move(policy)},
              {"visit_order", o.visit_order}};
}

inline json interval_to_json(const AdmissibleInterval& iv) {
  return json{{"point", iv.point},     {"coord", iv.coord},
              {"a", detail::num_or_inf(iv.a)},     {"b", detail::num_or_inf(iv.b)},
              {"alpha", detail::num_or_inf(iv.alpha)}, {"beta", detail::num_or_inf(iv.beta)},
              {"lo", detail::num_or_inf(iv.lo())}, {"hi", detail::num_or_inf(iv.hi())}};
}

// ---------------------------------------------------------------------------
// Families and strict maps

inline json family_to_json(const FunctionFamily& fam) {
  json tags = json::array();
  for (const auto& t : fam.tags) {
    if (t.derived)
      tags.push_back(nullptr);
    else
      tags.push_back({t.x, t.y});
  }
  return json{{"members", fam.members}, {"tags", std::move(tags)}};
}

inline json strict_map_to_json(const StrictMonotoneMap& m) {
  return json{{"values", m.values},
              {"margin_bound", detail::num_or_inf(m.margin_bound)},
              {"margin_observed", detail::num_or_inf(m.margin_observed)}};
}

// ---------------------------------------------------------------------------
// Uniform-continuity pipeline artifacts

inline json modulus_to_json(const ModulusSample& ms) {
  return json{{"breakpoints", ms.breakpoints}, {"omega", ms.omega}};
}

inline json majorant_to_json(const ConcaveMajorant& phi) {
  json vertices = json::array();
  for (const auto& [t, p] : phi.vertices) vertices.push_back({t, p});
  return json{{"vertices", std::move(vertices)}, {"degenerate", phi.degenerate}};
}

inline json certificate_to_json(const ModulusCertificate& c) {
  return json{{"max_violation", detail::num_or_inf(c.max_violation)},
              {"pair", {c.x, c.y}},
              {"holds", c.holds}};
}

inline json uniform_to_json(const UniformExtension& u) {
  return json{{"omega", modulus_to_json(u.modulus)},
              {"phi", majorant_to_json(u.majorant)},
              {"remetrized", poset_to_json(u.remetrized)},
              {"outcome", outcome_to_json(u.outcome)},
              {"certificate", certificate_to_json(u.certificate)},
              {"constant_shortcircuit", u.constant_shortcircuit}};
}

// ---------------------------------------------------------------------------
// Generator specs

inline GeneratorKind generator_kind_from_string(const std::string& kind) {
  if (kind == "example1") return GeneratorKind::Example1;
  if (kind == "example2") return GeneratorKind::Example2Tree;
  if (kind == "example3") return GeneratorKind::Example3Sum;
  if (kind == "example4") return GeneratorKind::Example4Mixed;
  if (kind == "random-discrete") return GeneratorKind::RandomDiscrete;
  if (kind == "random-euclidean") return GeneratorKind::RandomEuclidean;
  if (kind == "random-loset") return GeneratorKind::RandomLoset;
  if (kind == "random-metric-loset") return GeneratorKind::RandomMetricLoset;
  throw Error(Errc::ParseError, "unknown generator kind \"" + kind + "\"");
}

inline GeneratorSpec spec_from_json(const json& j) {
  GeneratorSpec spec;
  const json& kind_json = detail::require(j, "kind", "generator spec");
  if (!kind_json.is_string()) throw Error(Errc::ParseError, "\"kind\" must be a string");
  spec.kind = generator_kind_from_string(kind_json.get<std::string>());

  auto number = [&](const char* key, double& slot) {
    if (j.contains(key)) {
      if (!j.at(key).is_number()) throw Error(Errc::ParseError, std::string("\"") + key + "\" must be a number");
      slot = j.at(key).get<double>();
    }
  };
  auto integer = [&](const char* key, int& slot) {
    if (j.contains(key)) {
      if (!j.at(key).is_number_integer())
        throw Error(Errc::ParseError, std::string("\"") + key + "\" must be an integer");
      slot = j.at(key).get<int>();
    }
  };
  auto reals = [&](const char* key, std::vector<double>& slot) {
    if (j.contains(key)) {
      if (!j.at(key).is_array()) throw Error(Errc::ParseError, std::string("\"") + key + "\" must be an array");
      slot.clear();
      for (const auto& v : j.at(key)) {
        if (!v.is_number()) throw Error(Errc::ParseError, std::string("\"") + key + "\" entries must be numbers");
        slot.push_back(v.get<double>());
      }
    }
  };
  number("a", spec.a);
  number("b", spec.b);
  number("theta", spec.theta);
  number("edge_prob", spec.edge_prob);
  integer("root", spec.root);
  integer("antichain", spec.antichain);
  integer("n", spec.n);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_integer()) throw Error(Errc::ParseError, "\"seed\" must be an integer");
    spec.seed = j.at("seed").get<std::uint64_t>();
  }
  reals("a_points", spec.a_points);
  reals("b_points", spec.b_points);
  reals("samples", spec.samples);
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw Error(Errc::ParseError, "\"edges\" must be an array");
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw Error(Errc::ParseError, "edges must be [u, v] vertex pairs");
      spec.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  if (j.contains("metric")) {
    const json& m = j.at("metric");
    if (!m.is_string() || (m.get<std::string>() != "dt" && m.get<std::string>() != "rho"))
      throw Error(Errc::ParseError, "\"metric\" must be \"dt\" or \"rho\"");
    spec.rho_metric = m.get<std::string>() == "rho";
  }
  return spec;
}

// ---------------------------------------------------------------------------
// TSV tables (flat, for spreadsheets; JSON stays the canonical format)

inline std::string function_table_tsv(const MetricPoset& poset,
                                      const std::vector<std::vector<double>>& F) {
  std::ostringstream out;
  const int m = F.empty() ? 0 : static_cast<int>(F[0].size());
  out << "point\tlabel";
  for (int t = 0; t < m; ++t) out << "\tf" << t;
  out << "\n";
  for (int p = 0; p < static_cast<int>(F.size()); ++p) {
    out << p << "\t" << (poset.labels.empty() ? "p" + std::to_string(p) : poset.labels[p]);
    for (int t = 0; t < m; ++t) out << "\t" << detail::fixed17(F[p][t]);
    out << "\n";
  }
  return out.str();
}

inline std::string report_tsv(const RadialityReport& r) {
  std::ostringstream out;
  out << "radially_convex\t" << (r.radially_convex ? "true" : "false") << "\n";
  out << "d1\t" << (r.d1_holds ? "true" : "false") << "\n";
  out << "d2\t" << (r.d2_holds ? "true" : "false") << "\n";
  out << "radial\t" << (r.radial ? "true" : "false") << "\n";
  for (const auto& w : r.violations)
    out << "violation\t" << violation_kind_name(w.kind) << "\t" << w.x << "\t" << w.y << "\t" << w.z << "\t"
        << detail::fixed17(w.lhs) << "\t" << detail::fixed17(w.rhs) << "\n";
  return out.str();
}

inline std::string family_tsv(const MetricPoset& poset, const FunctionFamily& fam) {
  std::ostringstream out;
  out << "point\tlabel";
  for (int k = 0; k < fam.size(); ++k) {
    out << "\tF" << k;
    if (!fam.tags[k].derived) out << "(" << fam.tags[k].x << ">=" << fam.tags[k].y << ")";
  }
  out << "\n";
  for (int p = 0; p < poset.size(); ++p) {
    out << p << "\t" << (poset.labels.empty() ? "p" + std::to_string(p) : poset.labels[p]);
    for (int k = 0; k < fam.size(); ++k) out << "\t" << detail::fixed17(fam.members[k][p]);
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Files

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
  return j;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot open " + path + " for writing");
  out << content;
  if (!out) throw Error(Errc::IoError, "failed writing " + path);
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline MetricPoset read_instance(const std::string& path, const Context& ctx = {}) {
  return poset_from_json(read_json_file(path), ctx);
}

inline PartialFunction read_function(const std::string& path, const Context& ctx = {}) {
  return function_from_json(read_json_file(path), ctx);
}

}  // namespace ordlip::io
