#include <doctest.h>

#include <map>

#include "borelab/minuscule.hpp"
#include "oracles.hpp"

using namespace borelab;

namespace {

GradedContext make(const std::string& label, NodeSet pi1, bool adjoint = false) {
  AffineDiagram d = load_diagram(label);
  return GradedContext(std::make_shared<RootSystem>(d), make_involution(d, pi1, adjoint));
}

std::vector<int> sorted_lengths(const MinusculePoset& p, const std::vector<int>& ids) {
  std::vector<int> out;
  for (int i : ids) out.push_back(p.elements[i].length());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> all_ids(const MinusculePoset& p) {
  std::vector<int> ids(p.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

// Sizes of the abelian ideals that are maximal under inclusion, by brute force.
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
    bool maximal = true;
    for (auto y : ideals)
      if (y != x && (x & y) == x) maximal = false;
    if (maximal) sizes.push_back(std::popcount(x));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("adjoint counts are powers of two") {
  const std::map<std::string, std::size_t> expected{{"A1~1", 2}, {"A2~1", 4}, {"A3~1", 8}, {"C2~1", 4},
                                                   {"G2~1", 4}, {"B3~1", 8}, {"A4~1", 16}, {"C3~1", 8}};
  for (const auto& [label, count] : expected) {
    CAPTURE(label);
    CHECK(enumerate(make(label, NodeSet{0}, true)).size() == count);
  }
}

TEST_CASE("adjoint lengths match the abelian ideal oracle") {
  for (const auto& label : {"A1~1", "A2~1", "A3~1", "C2~1", "G2~1", "B3~1", "C3~1"}) {
    CAPTURE(label);
    GradedContext ctx = make(label, NodeSet{0}, true);
    MinusculePoset p = enumerate(ctx);
    std::vector<int> finite_nodes;
    for (int i = 1; i < ctx.nodes(); ++i) finite_nodes.push_back(i);
    const AffineDiagram& d = ctx.roots().diagram();
    CHECK(sorted_lengths(p, all_ids(p)) == oracle::abelian_ideal_sizes(d, finite_nodes));
    CHECK(sorted_lengths(p, p.maximal()) == maximal_abelian_ideal_sizes(d, finite_nodes));

    std::vector<int> dims;
    auto fam = ideal_families(ctx, p);
    for (const auto& param : maxima_parameters(ctx)) {
      dims.push_back(dimension_formula(ctx, param));
      auto lo = family_maximum(p, parameter_family(ctx, fam, param));
      REQUIRE(lo);
      CHECK(p.elements[*lo].length() == dims.back());
    }
    std::sort(dims.begin(), dims.end());
    CHECK(dims == maximal_abelian_ideal_sizes(d, finite_nodes));
  }
  MinusculePoset a2 = enumerate(make("A2~1", NodeSet{0}, true));
  CHECK(sorted_lengths(a2, all_ids(a2)) == std::vector<int>{0, 1, 2, 2});
}

TEST_CASE("serial and parallel enumeration agree element for element") {
  for (const auto& [label, pi1] : std::vector<std::pair<std::string, NodeSet>>{
           {"E8~1", NodeSet{1}}, {"D5~2", NodeSet{1}}, {"F4~1", NodeSet{4}}, {"A5~1", NodeSet{0, 3}}}) {
    GradedContext ctx = make(label, pi1);
    MinusculePoset ref = enumerate_serial(ctx);
    for (int jobs : {1, 2, 3}) {
      MinusculePoset par = enumerate(ctx, jobs);
      REQUIRE(par.size() == ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i) CHECK(par.elements[i] == ref.elements[i]);
      CHECK(par.up == ref.up);
      CHECK(par.down == ref.down);
    }
  }
}

TEST_CASE("enumerated elements are sigma-minuscule and closed downward") {
  GradedContext ctx = make("C3~1", NodeSet{0, 3});
  MinusculePoset p = enumerate(ctx);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const WeylElement& w = p.elements[i];
    CHECK(is_sigma_minuscule(ctx, w));
    CHECK(avoids_phi_sigma(ctx, w));
    for (int j : p.down[i]) CHECK(weak_le(p.elements[j], w));
    for (auto [gen, j] : p.up[i]) CHECK(p.elements[j] == *extend(ctx.roots(), w, gen));
  }
}

TEST_CASE("E8 with Pi_0 of type A1 x E7") {
  GradedContext ctx = make("E8~1", NodeSet{1});
  MinusculePoset p = enumerate(ctx);
  FamilyTable fam = ideal_families(ctx, p);
  CHECK(ctx.walls().size() == 3);

  std::set<std::pair<int, int>> nonempty, expected;
  for (std::size_t w = 0; w < ctx.walls().size(); ++w)
    for (int a = 0; a < ctx.nodes(); ++a)
      if (!fam.of(static_cast<int>(w), a).empty()) nonempty.insert({a, static_cast<int>(w) + 1});
  for (int k = 1; k <= 8; ++k) expected.insert({k, 1});
  for (int k : {0, 1, 2, 3, 4, 5, 6, 8}) expected.insert({k, 2});
  expected.insert({1, 3});
  CHECK(nonempty == expected);

  auto maxima = p.maximal();
  CHECK(maxima.size() == 14);
  std::map<std::string, int> dims;
  for (const auto& param : maxima_parameters(ctx)) {
    auto top = family_maximum(p, parameter_family(ctx, fam, param));
    REQUIRE(top);
    CHECK(p.elements[*top].length() == dimension_formula(ctx, param));
    dims[param.to_string()] = p.elements[*top].length();
  }
  std::map<std::string, int> expected_dims{{"gamma:a6", 12}, {"gamma:a5", 13}, {"gamma:a4", 14}, {"gamma:a8", 14},
                                           {"gamma:a3", 16}, {"gamma:a2", 20}, {"pi1:a1", 29}};
  for (int i = 2; i <= 8; ++i) expected_dims["pair:a0,a" + std::to_string(i)] = 28;
  CHECK(dims == expected_dims);
}

TEST_CASE("E8 intersections and the exchange element") {
  GradedContext ctx = make("E8~1", NodeSet{1});
  MinusculePoset p = enumerate(ctx);
  FamilyTable fam = ideal_families(ctx, p);
  const auto& rs = ctx.roots();
  WeylElement u = u_element(ctx, 0, 1);
  CHECK(u.length() == 30 - 2 - 18 + 2);
  for (int i = 2; i <= 8; ++i) {
    auto both = intersect_sorted(fam.of(1, 0), fam.of(0, i));
    REQUIRE_FALSE(both.empty());
    auto lo = family_minimum(p, both);
    REQUIRE(lo);
    CHECK(p.elements[*lo] == cross_minimum(ctx, 0, i));
    // all of Pi_hat_a0 & Pi_hat_ai lies in Pi_0, so the intersection is a single element
    CHECK(both.size() == 1);
  }
  // walls through Pi_1 never meet another family of a different root
  for (int a = 0; a < ctx.nodes(); ++a)
    if (a != 1) CHECK(intersect_sorted(fam.of(2, 1), fam.of(1, a)).empty());
  CHECK(u.apply(rs.simple(0)) == ctx.walls()[1].root);
}

TEST_CASE("D5 twisted with Pi_0 of type A1 x B3") {
  GradedContext ctx = make("D5~2", NodeSet{1});
  MinusculePoset p = enumerate(ctx);
  FamilyTable fam = ideal_families(ctx, p);
  std::set<std::pair<int, int>> nonempty;
  for (std::size_t w = 0; w < ctx.walls().size(); ++w)
    for (int a = 0; a < ctx.nodes(); ++a)
      if (!fam.of(static_cast<int>(w), a).empty()) nonempty.insert({a, static_cast<int>(w) + 1});
  CHECK(nonempty == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}, {2, 2}});
  CHECK(sorted_lengths(p, p.maximal()) == std::vector<int>{3, 7, 7});
  for (const auto& param : maxima_parameters(ctx)) {
    auto top = family_maximum(p, parameter_family(ctx, fam, param));
    REQUIRE(top);
    CHECK(p.elements[*top].length() == dimension_formula(ctx, param));
  }
}

TEST_CASE("minima of families equal the closed-form construction") {
  for (const auto& [label, pi1] : std::vector<std::pair<std::string, NodeSet>>{
           {"E8~1", NodeSet{1}}, {"D5~2", NodeSet{1}}, {"B4~1", NodeSet{3}}, {"G2~1", NodeSet{1}}, {"A4~2", NodeSet{2}}}) {
    CAPTURE(label);
    GradedContext ctx = make(label, pi1);
    MinusculePoset p = enumerate(ctx);
    FamilyTable fam = ideal_families(ctx, p);
    for (std::size_t w = 0; w < ctx.walls().size(); ++w)
      for (int a = 0; a < ctx.nodes(); ++a) {
        const auto& members = fam.of(static_cast<int>(w), a);
        auto built = construct_minimum(ctx, a, static_cast<int>(w));
        CHECK(members.empty() == !built.has_value());
        if (members.empty()) continue;
        auto lo = family_minimum(p, members);
        REQUIRE(lo);
        CHECK(p.elements[*lo] == *built);
        CHECK(built->apply(ctx.roots().simple(a)) == ctx.walls()[w].root);
      }
  }
}

TEST_CASE("special involution closed forms") {
  // k = 2: reflection in delta - theta
  for (const auto& [label, pi1] : std::vector<std::pair<std::string, NodeSet>>{
           {"D5~2", NodeSet{1}}, {"A4~2", NodeSet{2}}, {"A5~2", NodeSet{3}}, {"A5~2", NodeSet{0}}, {"E6~2", NodeSet{4}}, {"E6~2", NodeSet{0}}}) {
    GradedContext ctx = make(label, pi1);
    REQUIRE(ctx.k() == 2);
    for (std::size_t c = 0; c < ctx.components().size(); ++c) {
      const Component& comp = ctx.components()[c];
      if (!comp.is_wall || comp.type != 2) continue;
      CHECK(special_involution(ctx, static_cast<int>(c)) == reflection(ctx.roots(), ctx.roots().delta() - comp.theta));
    }
  }
  // C_n with Pi_1 = {0, n}: the component between has N(s) = {a0, an}
  for (int n : {2, 3, 4}) {
    GradedContext ctx = make("C" + std::to_string(n) + "~1", NodeSet{0, n});
    const auto& rs = ctx.roots();
    for (std::size_t c = 0; c < ctx.components().size(); ++c) {
      if (ctx.components()[c].type != 2) continue;
      WeylElement s = special_involution(ctx, static_cast<int>(c));
      CHECK(s.inversions() == std::vector<RootVector>{rs.simple(n), rs.simple(0)});
    }
  }
}

TEST_CASE("hermitian maxima have half the level-one dimension") {
  for (const auto& label : {"A2~1", "A3~1", "A4~1", "A5~1", "A6~1", "C3~1", "D4~1", "D5~1"}) {
    AffineDiagram d = load_diagram(label);
    auto rs = std::make_shared<RootSystem>(d);
    for (const auto& spec : catalog_involutions(d, false, false)) {
      GradedContext ctx(rs, spec);
      if (!ctx.hermitian()) continue;
      CAPTURE(spec.file_stem());
      MinusculePoset p = enumerate(ctx);
      FamilyTable fam = ideal_families(ctx, p);
      int half = static_cast<int>(ctx.level_one_roots().size()) / 2;
      int seen = 0;
      for (const auto& param : maxima_parameters(ctx)) {
        if (param.kind != MaximumParam::Kind::pi1) continue;
        ++seen;
        auto top = family_maximum(p, parameter_family(ctx, fam, param));
        REQUIRE(top);
        CHECK(p.elements[*top].length() == half);
      }
      CHECK(seen == 2);
    }
  }
  CHECK(make("A3~1", NodeSet{0, 2}).level_one_roots().size() / 2 == 4);
  CHECK(make("A6~1", NodeSet{0, 3}).level_one_roots().size() / 2 == 12);
}
