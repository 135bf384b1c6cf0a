#include "borelab/report.hpp"

#include <iomanip>
#include <sstream>

namespace borelab {

namespace {

Json nodes_json(NodeSet s) {
  Json a = Json::array();
  for (int i : s.nodes()) a.push_back(i);
  return a;
}

Json word_json(const RootSystem& rs, const WeylElement& w) {
  Json a = Json::array();
  for (int j : reduced_word(rs, w)) a.push_back(j);
  return a;
}

std::string word_text(const Json& word) {
  if (word.empty()) return "1";
  std::string s;
  for (const auto& j : word) s += (s.empty() ? "s" : " s") + std::to_string(j.get<int>());
  return s;
}

std::string nodes_text(const Json& nodes) {
  std::string s;
  for (const auto& j : nodes) s += (s.empty() ? "" : ",") + std::to_string(j.get<int>());
  return "{" + s + "}";
}

}  // namespace

Json involution_json(const GradedContext& ctx) {
  const auto& spec = ctx.spec();
  Json doc;
  doc["diagram"] = spec.diagram;
  doc["k"] = spec.k;
  doc["s"] = spec.s;
  doc["pi1"] = nodes_json(ctx.pi1());
  doc["adjoint"] = spec.adjoint;
  doc["hermitian"] = ctx.hermitian();
  doc["pi0"] = ctx.pi0_name();
  doc["components"] = Json::array();
  for (const auto& c : ctx.components()) {
    Json j;
    j["nodes"] = nodes_json(c.nodes);
    j["type_name"] = c.name;
    j["theta"] = c.theta.to_vector();
    j["type"] = c.type;
    j["complex"] = c.complex;
    j["in_walls"] = c.is_wall;
    j["a_set"] = nodes_json(c.a_set);
    j["gamma"] = nodes_json(c.gamma);
    j["b_set"] = nodes_json(c.b_set);
    doc["components"].push_back(j);
  }
  doc["walls"] = Json::array();
  for (const auto& w : ctx.walls()) {
    Json j;
    j["label"] = w.label;
    j["kind"] = w.kind == WallKind::component ? "component" : "pi1";
    j["root"] = w.root.to_vector();
    j["type"] = w.type;
    j["b_mu"] = nodes_json(ctx.b_mu(w));
    j["pi_hat"] = nodes_json(ctx.pi_hat_mu(w));
    doc["walls"].push_back(j);
  }
  return doc;
}

std::string involution_text(const GradedContext& ctx) {
  Json doc = involution_json(ctx);
  std::ostringstream os;
  os << "Pi_1 = " << nodes_text(doc["pi1"]) << "  k = " << ctx.k() << "  Pi_0: " << ctx.pi0_name()
     << (ctx.spec().adjoint ? "  (adjoint)" : "") << (ctx.hermitian() ? "  (hermitian)" : "") << "\n";
  int idx = 1;
  for (const auto& c : doc["components"]) {
    os << "  Sigma_" << idx++ << " " << std::left << std::setw(20) << nodes_text(c["nodes"]) << std::setw(10)
       << c["type_name"].get<std::string>() << " type " << c["type"].get<int>() << (c["complex"].get<bool>() ? " complex" : "")
       << "  A = " << nodes_text(c["a_set"]) << "  Gamma = " << nodes_text(c["gamma"])
       << (c["in_walls"].get<bool>() ? "" : "  (wall not in Phi_sigma)") << "\n";
  }
  for (const auto& w : doc["walls"])
    os << "  " << std::left << std::setw(6) << w["label"].get<std::string>() << " root " << std::setw(24)
       << RootVector(w["root"].get<std::vector<int>>()).to_string() << " B = " << std::setw(10) << nodes_text(w["b_mu"])
       << " Pi_hat = " << nodes_text(w["pi_hat"]) << "\n";
  return os.str();
}

Json result_document(const GradedContext& ctx, const MinusculePoset& poset, const FamilyTable& families,
                     const std::vector<CheckResult>* checks) {
  const auto& rs = ctx.roots();
  Json doc;
  doc["diagram"] = ctx.spec().diagram;
  doc["k"] = ctx.k();
  doc["pi1"] = nodes_json(ctx.pi1());
  doc["adjoint"] = ctx.spec().adjoint;
  doc["pi0"] = ctx.pi0_name();
  doc["poset_size"] = poset.size();
  doc["hasse_edges"] = poset.edge_count();
  doc["maxima"] = Json::array();
  for (const auto& p : maxima_parameters(ctx)) {
    Json m;
    m["param"] = p.to_string();
    m["dim_formula"] = dimension_formula(ctx, p);
    auto top = family_maximum(poset, parameter_family(ctx, families, p));
    m["dim_enumerated"] = top ? Json(poset.elements[*top].length()) : Json(nullptr);
    m["word"] = top ? word_json(rs, poset.elements[*top]) : Json(nullptr);
    doc["maxima"].push_back(m);
  }
  doc["families"] = Json::array();
  for (std::size_t w = 0; w < ctx.walls().size(); ++w)
    for (int a = 0; a < ctx.nodes(); ++a) {
      const auto& members = families.of(static_cast<int>(w), a);
      if (members.empty()) continue;
      Json f;
      f["alpha"] = a;
      f["mu"] = ctx.walls()[w].label;
      f["size"] = members.size();
      auto lo = family_minimum(poset, members);
      f["min_word"] = lo ? word_json(rs, poset.elements[*lo]) : Json(nullptr);
      doc["families"].push_back(f);
    }
  doc["checks"] = Json::array();
  if (checks)
    for (const auto& c : *checks) doc["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return doc;
}

std::string result_text(const Json& doc) {
  std::ostringstream os;
  os << doc["diagram"].get<std::string>() << "  Pi_1 = " << nodes_text(doc["pi1"]) << "  k = " << doc["k"].get<int>()
     << "  Pi_0: " << doc["pi0"].get<std::string>() << (doc["adjoint"].get<bool>() ? "  (adjoint)" : "") << "\n";
  os << "sigma-minuscule elements: " << doc["poset_size"].get<std::size_t>() << "\n";
  os << "maxima: " << doc["maxima"].size() << "\n";
  os << "  " << std::left << std::setw(16) << "param" << std::setw(9) << "formula" << std::setw(12) << "enumerated"
     << "word\n";
  for (const auto& m : doc["maxima"]) {
    std::string enumerated = m["dim_enumerated"].is_null() ? "-" : std::to_string(m["dim_enumerated"].get<int>());
    os << "  " << std::setw(16) << m["param"].get<std::string>() << std::setw(9) << m["dim_formula"].get<int>()
       << std::setw(12) << enumerated << (m["word"].is_null() ? "-" : word_text(m["word"])) << "\n";
  }
  os << "families: " << doc["families"].size() << "\n";
  for (const auto& f : doc["families"])
    os << "  a" << std::setw(3) << f["alpha"].get<int>() << std::setw(6) << f["mu"].get<std::string>() << " size "
       << std::setw(6) << f["size"].get<std::size_t>() << " min " << word_text(f["min_word"]) << "\n";
  return os.str();
}

std::string checks_text(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  for (const auto& c : checks)
    os << "  " << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(20) << c.name << c.detail << "\n";
  return os.str();
}

std::string hasse_dot(const GradedContext& ctx, const MinusculePoset& poset) {
  const auto& rs = ctx.roots();
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  std::vector<char> is_max(poset.size(), 0);
  for (int m : poset.maximal()) is_max[m] = 1;
  for (std::size_t e = 0; e < poset.size(); ++e) {
    os << "  n" << e << " [label=\"" << word_text(word_json(rs, poset.elements[e])) << "\"";
    if (is_max[e]) os << ", style=filled, fillcolor=gold";
    os << "];\n";
  }
  for (std::size_t e = 0; e < poset.size(); ++e)
    for (auto [gen, target] : poset.up[e]) os << "  n" << e << " -> n" << target << " [label=\"" << gen << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace borelab
