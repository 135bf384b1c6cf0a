// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "borelab/verify.hpp"
#include "oracles.hpp"

using namespace borelab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

struct Run {
  std::shared_ptr<GradedContext> ctx;
  MinusculePoset poset;
  FamilyTable families;
};

Run run(const std::string& label, NodeSet pi1, bool adjoint = false) {
  AffineDiagram d = load_diagram(label);
  auto ctx = std::make_shared<GradedContext>(std::make_shared<RootSystem>(d), make_involution(d, pi1, adjoint));
  Run r{ctx, enumerate(*ctx), {}};
  r.families = ideal_families(*ctx, r.poset);
  return r;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Every involution of the sweep diagrams, plus the adjoint ones of A1-A3.
std::vector<InvolutionSpec> sweep_specs() {
  std::vector<InvolutionSpec> out;
  for (const auto& label : {"A2~1", "A3~1", "A4~1", "A5~1", "B2~1", "B3~1", "B4~1", "C3~1", "D4~1", "D5~1", "G2~1",
                            "F4~1", "A2~2", "A3~2", "A4~2", "A5~2", "D4~2", "D5~2"}) {
    AffineDiagram d = load_diagram(label);
    for (auto& s : catalog_involutions(d, false, false)) out.push_back(s);
  }
  for (const auto& label : {"A1~1", "A2~1", "A3~1"})
    for (auto& s : catalog_involutions(load_diagram(label), true, false))
      if (s.adjoint) out.push_back(s);
  return out;
}

struct SweepEntry {
  InvolutionSpec spec;
  std::map<std::string, CheckResult> checks;
};

const std::vector<SweepEntry>& sweep(double& seconds) {
  static std::vector<SweepEntry> entries;
  static double elapsed = 0;
  if (entries.empty()) {
    auto t0 = Clock::now();
    std::map<std::string, std::shared_ptr<const RootSystem>> systems;
    for (const auto& spec : sweep_specs()) {
      auto& rs = systems[spec.diagram];
      if (!rs) rs = std::make_shared<RootSystem>(load_diagram(spec.diagram));
      GradedContext ctx(rs, spec);
      MinusculePoset p = enumerate(ctx);
      SweepEntry e{spec, {}};
      for (auto& c : verify_all(ctx, p, {.max_length = 0})) e.checks[c.name] = c;
      entries.push_back(std::move(e));
    }
    elapsed = seconds_since(t0);
  }
  seconds = elapsed;
  return entries;
}

Outcome sweep_checks(const std::vector<std::string>& names, std::string& note) {
  Outcome o;
  double s = 0;
  const auto& entries = sweep(s);
  long cases = 0;
  for (const auto& e : entries)
    for (const auto& name : names) {
      const CheckResult& c = e.checks.at(name);
      o.expect(c.pass, e.spec.file_stem() + " " + name + ": " + c.detail);
      ++cases;
    }
  note = std::to_string(entries.size()) + " involutions, " + std::to_string(cases) + " check runs, sweep " +
         std::to_string(s).substr(0, 5) + " s";
  o.expect(s < 600, "sweep slower than 10 min");
  return o;
}

std::vector<int> lengths(const MinusculePoset& p, const std::vector<int>& ids) {
  std::vector<int> out;
  for (int i : ids) out.push_back(p.elements[i].length());
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::pair<int, int>> nonempty_pairs(const Run& r) {
  std::set<std::pair<int, int>> out;
  for (std::size_t w = 0; w < r.ctx->walls().size(); ++w)
    for (int a = 0; a < r.ctx->nodes(); ++a)
      if (!r.families.of(static_cast<int>(w), a).empty()) out.insert({a, static_cast<int>(w) + 1});
  return out;
}

// Maximal abelian ideal sizes of the Borel subalgebra by subset search.
std::vector<int> maximal_abelian_ideal_sizes(const AffineDiagram& d, const std::vector<int>& nodes) {
  auto roots = oracle::finite_positive_roots(d, nodes);
  std::set<oracle::Vec> root_set(roots.begin(), roots.end());
  const int m = static_cast<int>(roots.size());
  std::vector<std::uint32_t> ideals;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (int i : nodes) {
        oracle::Vec up = roots[a];
        up[i] += 1;
        auto it = std::find(roots.begin(), roots.end(), up);
        if (it != roots.end() && !((mask >> (it - roots.begin())) & 1)) ok = false;
      }
      for (int b = a; b < m && ok; ++b)
        if (((mask >> b) & 1) && root_set.count(oracle::add(roots[a], roots[b]))) ok = false;
    }
    if (ok) ideals.push_back(mask);
  }
  std::vector<int> sizes;
  for (auto x : ideals) {
    bool maximal = std::none_of(ideals.begin(), ideals.end(), [&](auto y) { return y != x && (x & y) == x; });
    if (maximal) sizes.push_back(std::popcount(x));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

Outcome criterion1(std::string& note) {
  Outcome o;
  const std::vector<std::pair<std::string, std::size_t>> cases{{"A1~1", 2}, {"A2~1", 4}, {"A3~1", 8}, {"B2~1", 4},
                                                               {"G2~1", 4}, {"B3~1", 8}, {"A4~1", 16}};
  double worst = 0;
  for (const auto& [label, count] : cases) {
    auto t0 = Clock::now();
    Run r = run(label, NodeSet{0}, true);
    double s = seconds_since(t0);
    worst = std::max(worst, s);
    o.expect(r.poset.size() == count, label + " gives " + std::to_string(r.poset.size()));
    o.expect(s < 1.0, label + " slower than 1 s");
  }
  note = "slowest " + std::to_string(worst).substr(0, 6) + " s";
  return o;
}

Outcome criterion2(std::string& note) {
  Outcome o;
  Run r = run("E8~1", NodeSet{1});
  const auto& ctx = *r.ctx;
  o.expect(r.poset.maximal().size() == 14, "maxima count " + std::to_string(r.poset.maximal().size()));
  std::map<std::string, int> dims;
  for (const auto& p : maxima_parameters(ctx)) {
    auto top = family_maximum(r.poset, parameter_family(ctx, r.families, p));
    if (!top) {
      o.fail("no maximum for " + p.to_string());
      continue;
    }
    int len = r.poset.elements[*top].length();
    o.expect(len == dimension_formula(ctx, p), p.to_string() + " formula disagrees");
    dims[p.to_string()] = len;
  }
  std::map<std::string, int> expected{{"gamma:a6", 12}, {"gamma:a5", 13}, {"gamma:a4", 14}, {"gamma:a8", 14},
                                      {"gamma:a3", 16}, {"gamma:a2", 20}, {"pi1:a1", 29}};
  for (int i = 2; i <= 8; ++i) expected["pair:a0,a" + std::to_string(i)] = 28;
  o.expect(dims == expected, "dimension table differs");
  std::set<std::pair<int, int>> pairs;
  for (int k = 1; k <= 8; ++k) pairs.insert({k, 1});
  for (int k : {0, 1, 2, 3, 4, 5, 6, 8}) pairs.insert({k, 2});
  pairs.insert({1, 3});
  o.expect(nonempty_pairs(r) == pairs, "nonempty families differ");
  o.expect(ctx.b_mu(ctx.walls()[1]) == NodeSet{7}, "B_mu2 = " + ctx.b_mu(ctx.walls()[1]).to_string());
  o.expect(ctx.b_mu(ctx.walls()[2]) == NodeSet{1}, "B_mu3 = " + ctx.b_mu(ctx.walls()[2]).to_string());
  note = std::to_string(r.poset.size()) + " elements";
  return o;
}

Outcome criterion3(std::string& note) {
  Outcome o;
  Run r = run("D5~2", NodeSet{1});
  o.expect(nonempty_pairs(r) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}, {2, 2}}, "nonempty families differ");
  o.expect(lengths(r.poset, r.poset.maximal()) == std::vector<int>{3, 7, 7}, "maxima dimensions differ");
  for (const auto& p : maxima_parameters(*r.ctx)) {
    auto top = family_maximum(r.poset, parameter_family(*r.ctx, r.families, p));
    o.expect(top && r.poset.elements[*top].length() == dimension_formula(*r.ctx, p), p.to_string() + " formula disagrees");
  }
  o.expect(r.ctx->orthogonal_simples(2) == NodeSet{0, 4}, "Pi_hat_a2 = " + r.ctx->orthogonal_simples(2).to_string());
  note = std::to_string(r.poset.size()) + " elements";
  return o;
}

Outcome criterion4(std::string& note) {
  Outcome o;
  auto component = [](const GradedContext& ctx, NodeSet nodes) -> const Component* {
    for (const auto& c : ctx.components())
      if (c.nodes == nodes) return &c;
    return nullptr;
  };
  auto ctx_of = [](const std::string& label, NodeSet pi1) {
    AffineDiagram d = load_diagram(label);
    return GradedContext(std::make_shared<RootSystem>(d), make_involution(d, pi1));
  };
  GradedContext b7 = ctx_of("B7~1", NodeSet{4});
  auto* s1 = component(b7, NodeSet{0, 1, 2, 3});
  auto* s2 = component(b7, NodeSet{5, 6, 7});
  o.expect(s1 && s1->a_set == NodeSet{3, 4, 5, 6, 7} && s1->gamma == NodeSet{3}, "B7 Sigma_1");
  o.expect(s2 && s2->a_set == NodeSet{0, 1, 2, 3, 4, 5} && s2->gamma == NodeSet{5}, "B7 Sigma_2");
  GradedContext e6 = ctx_of("E6~1", NodeSet{6});
  auto* big = component(e6, NodeSet{1, 2, 3, 4, 5});
  auto* small = component(e6, NodeSet{0});
  o.expect(big && big->gamma == NodeSet{2, 3, 4}, "E6 Sigma_1");
  o.expect(small && small->gamma.empty(), "E6 Sigma_2");
  GradedContext a6 = ctx_of("A6~1", NodeSet{0, 3});
  for (const auto& c : a6.components()) o.expect(c.gamma.empty(), "A6 Gamma of " + c.nodes.to_string());
  note = "3 examples";
  return o;
}

Outcome criterion8(std::string& note) {
  std::string sweep_note;
  Outcome o = sweep_checks({"max", "parametrization"}, sweep_note);
  int adjoint = 0;
  for (const auto& label : {"A1~1", "A2~1", "A3~1", "B2~1", "G2~1", "B3~1", "C3~1"}) {
    Run r = run(label, NodeSet{0}, true);
    const AffineDiagram& d = r.ctx->roots().diagram();
    std::vector<int> finite;
    for (int i = 1; i < d.nodes; ++i) finite.push_back(i);
    std::vector<int> dims;
    for (const auto& p : maxima_parameters(*r.ctx)) dims.push_back(dimension_formula(*r.ctx, p));
    std::sort(dims.begin(), dims.end());
    auto oracle_sizes = maximal_abelian_ideal_sizes(d, finite);
    o.expect(dims == oracle_sizes, std::string(label) + " adjoint dimensions differ from the ideal oracle");
    o.expect(lengths(r.poset, r.poset.maximal()) == oracle_sizes, std::string(label) + " adjoint maxima differ");
    ++adjoint;
  }
  note = sweep_note + "; " + std::to_string(adjoint) + " adjoint oracles";
  return o;
}

Outcome criterion10(std::string& note) {
  Outcome o;
  auto t0 = Clock::now();
  int contexts = 0;
  for (const auto& label : {"A2~1", "C2~1", "G2~1", "A2~2", "D3~2"}) {
    AffineDiagram d = load_diagram(label);
    auto rs = std::make_shared<RootSystem>(d);
    for (const auto& spec : catalog_involutions(d, true, false)) {
      CheckResult c = check_dsigma(GradedContext(rs, spec), 8);
      o.expect(c.pass, spec.file_stem() + ": " + c.detail);
      ++contexts;
    }
  }
  double s = seconds_since(t0);
  o.expect(s < 120, "slower than 2 min");
  note = std::to_string(contexts) + " contexts, L=8, " + std::to_string(s).substr(0, 5) + " s";
  return o;
}

Outcome criterion11(std::string& note) {
  Outcome o;
  int count = 0;
  for (const auto& label : {"A2~1", "A3~1", "A4~1", "A5~1", "A6~1", "C3~1", "D4~1", "D5~1"}) {
    AffineDiagram d = load_diagram(label);
    auto rs = std::make_shared<RootSystem>(d);
    for (const auto& spec : catalog_involutions(d, false, false)) {
      GradedContext ctx(rs, spec);
      if (!ctx.hermitian()) continue;
      ++count;
      MinusculePoset p = enumerate(ctx);
      FamilyTable fam = ideal_families(ctx, p);
      const std::size_t level_one = ctx.level_one_roots().size();
      int seen = 0;
      for (const auto& param : maxima_parameters(ctx)) {
        if (param.kind != MaximumParam::Kind::pi1) continue;
        ++seen;
        auto top = family_maximum(p, parameter_family(ctx, fam, param));
        o.expect(top && 2 * static_cast<std::size_t>(p.elements[*top].length()) == level_one,
                 spec.file_stem() + " " + param.to_string());
      }
      o.expect(seen == 2, spec.file_stem() + " has " + std::to_string(seen) + " Pi_1 maxima");
    }
  }
  note = std::to_string(count) + " hermitian involutions";
  return o;
}

Outcome criterion12(std::string& note) {
  const std::vector<std::string> suites{"poset_structure", "basic", "orto", "fuori", "om", "special_involution"};
  Outcome o;
  // each suite on its own, as the CLI's --check runs it
  int runs = 0;
  for (const auto& [label, pi1] : std::vector<std::pair<std::string, NodeSet>>{
           {"E8~1", NodeSet{1}}, {"D5~2", NodeSet{1}}, {"C4~1", NodeSet{0, 4}}, {"B5~1", NodeSet{4}}, {"E6~2", NodeSet{4}}}) {
    Run r = run(label, pi1);
    for (const auto& s : suites) {
      auto res = verify_all(*r.ctx, r.poset, {.only = {s}});
      o.expect(res.size() == 1 && res[0].name == s && res[0].pass, label + " " + s);
      ++runs;
    }
  }
  std::string sweep_note;
  Outcome all = sweep_checks(suites, sweep_note);
  if (!all.pass) o.fail(all.note);
  note = std::to_string(runs) + " standalone runs; " + sweep_note;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome(std::string&)>>> criteria{
      {"adjoint counts 2^rank", criterion1},
      {"E8 / A1 x E7 golden table", criterion2},
      {"D5 twisted / A1 x B3 golden table", criterion3},
      {"A and Gamma goldens", criterion4},
      {"family minima equal the construction", [](std::string& n) { return sweep_checks({"min"}, n); }},
      {"families are translated coset posets", [](std::string& n) { return sweep_checks({"slamu"}, n); }},
      {"intersections of families", [](std::string& n) { return sweep_checks({"minimax", "coppie"}, n); }},
      {"parametrization of maxima and dimensions", criterion8},
      {"lengths of minima", [](std::string& n) { return sweep_checks({"lengths"}, n); }},
      {"sigma-minuscule iff N(w) avoids Phi_sigma", criterion10},
      {"hermitian half dimension", criterion11},
      {"structural suites", criterion12},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    std::string note;
    Outcome o;
    try {
      o = criteria[i].second(note);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double s = seconds_since(t0);
    failures += !o.pass;
    std::printf("%s %2zu  %-44s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), s,
                o.pass ? note.c_str() : o.note.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
