#include "borelab/minuscule.hpp"

#include <algorithm>
#include <omp.h>

namespace borelab {

std::optional<int> MinusculePoset::find(const WeylElement& w) const {
  if (auto it = index.find(w.matrix()); it != index.end()) return it->second;
  return std::nullopt;
}

std::vector<int> MinusculePoset::maximal() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (up[i].empty()) out.push_back(static_cast<int>(i));
  return out;
}

std::size_t MinusculePoset::edge_count() const {
  std::size_t e = 0;
  for (const auto& u : up) e += u.size();
  return e;
}

namespace {

bool extends_minuscule(const GradedContext& ctx, const WeylElement& w, int i) {
  RootVector beta = w.image(i);
  return beta.is_positive() && ctx.ht_sigma(beta) == 1;
}

void check_cap(const GradedContext& ctx, const WeylElement& w) {
  if (w.length() > static_cast<int>(ctx.level_one_roots().size()))
    throw Error("enumeration exceeded the number of sigma-height one roots");
}

MinusculePoset start_poset(const GradedContext& ctx) {
  MinusculePoset p;
  p.elements.push_back(WeylElement::identity(ctx.nodes()));
  p.index.emplace(p.elements[0].matrix(), 0);
  p.up.emplace_back();
  p.down.emplace_back();
  return p;
}

void attach(MinusculePoset& p, int parent, int gen, WeylElement&& w) {
  auto [it, fresh] = p.index.emplace(w.matrix(), static_cast<int>(p.elements.size()));
  if (fresh) {
    p.elements.push_back(std::move(w));
    p.up.emplace_back();
    p.down.emplace_back();
  }
  p.up[parent].emplace_back(gen, it->second);
  p.down[it->second].push_back(parent);
}

}  // namespace

MinusculePoset enumerate_serial(const GradedContext& ctx) {
  MinusculePoset p = start_poset(ctx);
  const auto& rs = ctx.roots();
  for (std::size_t k = 0; k < p.elements.size(); ++k)
    for (int i = 0; i < ctx.nodes(); ++i) {
      if (!extends_minuscule(ctx, p.elements[k], i)) continue;
      WeylElement next = *extend(rs, p.elements[k], i);
      check_cap(ctx, next);
      attach(p, static_cast<int>(k), i, std::move(next));
    }
  return p;
}

MinusculePoset enumerate(const GradedContext& ctx, int jobs) {
  MinusculePoset p = start_poset(ctx);
  const auto& rs = ctx.roots();
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::size_t level_begin = 0;
  while (level_begin < p.elements.size()) {
    const std::size_t level_end = p.elements.size();
    const auto width = static_cast<long>(level_end - level_begin);
    std::vector<std::vector<std::pair<int, WeylElement>>> found(width);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (long t = 0; t < width; ++t) {
      const WeylElement& w = p.elements[level_begin + t];
      for (int i = 0; i < ctx.nodes(); ++i)
        if (extends_minuscule(ctx, w, i)) found[t].emplace_back(i, *extend(rs, w, i));
    }
    for (long t = 0; t < width; ++t)
      for (auto& [i, w] : found[t]) {
        check_cap(ctx, w);
        attach(p, static_cast<int>(level_begin + t), i, std::move(w));
      }
    level_begin = level_end;
  }
  return p;
}

bool is_sigma_minuscule(const GradedContext& ctx, const WeylElement& w) {
  for (const auto& b : w.inversions())
    if (ctx.ht_sigma(b) != 1) return false;
  return true;
}

bool avoids_phi_sigma(const GradedContext& ctx, const WeylElement& w) {
  for (const auto& b : w.inversions())
    if (ctx.in_phi_sigma(b)) return false;
  return true;
}

FamilyTable ideal_families(const GradedContext& ctx, const MinusculePoset& poset) {
  const int n = ctx.nodes();
  const auto& walls = ctx.walls();
  FamilyTable t;
  t.members.assign(walls.size(), std::vector<std::vector<int>>(n));
  for (std::size_t e = 0; e < poset.size(); ++e)
    for (int a = 0; a < n; ++a) {
      RootVector img = poset.elements[e].image(a);
      for (std::size_t m = 0; m < walls.size(); ++m)
        if (img == walls[m].root) t.members[m][a].push_back(static_cast<int>(e));
    }
  return t;
}

std::optional<int> family_minimum(const MinusculePoset& poset, const std::vector<int>& members) {
  if (members.empty()) return std::nullopt;
  int best = members.front();
  for (int m : members)
    if (poset.elements[m].length() < poset.elements[best].length()) best = m;
  for (int m : members)
    if (!weak_le(poset.elements[best], poset.elements[m])) return std::nullopt;
  return best;
}

std::optional<int> family_maximum(const MinusculePoset& poset, const std::vector<int>& members) {
  if (members.empty()) return std::nullopt;
  int best = members.front();
  for (int m : members)
    if (poset.elements[m].length() > poset.elements[best].length()) best = m;
  for (int m : members)
    if (!weak_le(poset.elements[m], poset.elements[best])) return std::nullopt;
  return best;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int wall_of_component(const GradedContext& ctx, int component) {
  const auto& walls = ctx.walls();
  for (std::size_t m = 0; m < walls.size(); ++m)
    if (walls[m].kind == WallKind::component && walls[m].index == component) return static_cast<int>(m);
  return -1;
}

int wall_of_pi1(const GradedContext& ctx, int beta) {
  const auto& walls = ctx.walls();
  for (std::size_t m = 0; m < walls.size(); ++m)
    if (walls[m].kind == WallKind::pi1 && walls[m].index == beta) return static_cast<int>(m);
  return -1;
}

WeylElement special_involution(const GradedContext& ctx, int component) {
  const Component& c = ctx.components().at(component);
  auto s = minimal_mapper(ctx.roots(), c.a_set, c.theta, c.wall);
  if (!s) throw Error("no element of W(A(Sigma)) maps theta to its wall");
  return *s;
}

WeylElement u_element(const GradedContext& ctx, int comp_a, int comp_b) {
  const auto& rs = ctx.roots();
  NodeSet s = ctx.components().at(comp_a).a_set & ctx.components().at(comp_b).a_set;
  WeylElement w0 = longest_element(rs, s);
  WeylElement w0p = longest_element(rs, s - ctx.pi1());
  return multiply(rs, w0p, w0);
}

std::optional<WeylElement> construct_minimum(const GradedContext& ctx, int alpha, int wall) {
  const Wall& mu = ctx.walls().at(wall);
  if (!ctx.pi_hat_mu(mu).contains(alpha)) return std::nullopt;
  const auto& rs = ctx.roots();
  if (mu.kind == WallKind::component) {
    const Component& c = ctx.components()[mu.index];
    if (c.type == 1) return minimal_mapper(rs, c.a_set, rs.simple(alpha), mu.root);
    auto v = minimal_mapper(rs, c.nodes, rs.simple(alpha), c.theta);
    if (!v) return std::nullopt;
    return multiply(rs, special_involution(ctx, mu.index), *v);
  }
  const int beta = mu.index;
  WeylElement w0 = longest_element(rs, ctx.pi0());
  WeylElement w0b = longest_element(rs, ctx.pi0() & ctx.orthogonal_simples(beta));
  return multiply(rs, from_word(rs, {beta}), multiply(rs, w0b, w0));
}

WeylElement cross_minimum(const GradedContext& ctx, int alpha, int beta) {
  const auto& rs = ctx.roots();
  int ca = ctx.component_of(alpha), cb = ctx.component_of(beta);
  if (ca < 0 || cb < 0 || ca == cb) throw Error("cross minimum needs roots in two different components");
  const Component& a = ctx.components()[ca];
  const Component& b = ctx.components()[cb];
  auto va = minimal_mapper(rs, a.nodes, rs.simple(alpha), a.theta);
  auto vb = minimal_mapper(rs, b.nodes, rs.simple(beta), b.theta);
  if (!va || !vb) throw Error("cross minimum needs roots of the same length as theta");
  return multiply(rs, u_element(ctx, ca, cb), multiply(rs, *va, *vb));
}

std::string MaximumParam::to_string() const {
  switch (kind) {
    case Kind::gamma:
      return "gamma:a" + std::to_string(alpha);
    case Kind::sigma:
      return "sigma:a" + std::to_string(alpha);
    case Kind::pi1:
      return "pi1:a" + std::to_string(alpha);
    default:
      return "pair:a" + std::to_string(alpha) + ",a" + std::to_string(beta);
  }
}

std::vector<MaximumParam> maxima_parameters(const GradedContext& ctx) {
  using K = MaximumParam::Kind;
  std::vector<MaximumParam> out;
  const auto& comps = ctx.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (wall_of_component(ctx, static_cast<int>(c)) < 0) continue;
    const Component& s = comps[c];
    if (s.type == 1) {
      for (int a : ctx.same_length_nodes(s.gamma, s.theta).nodes()) out.push_back({K::gamma, a});
    } else {
      for (int a : ctx.same_length_nodes(s.nodes, s.theta).nodes()) out.push_back({K::sigma, a});
    }
  }
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t c2 = c + 1; c2 < comps.size(); ++c2) {
      if (wall_of_component(ctx, static_cast<int>(c)) < 0 || wall_of_component(ctx, static_cast<int>(c2)) < 0) continue;
      if (comps[c].type != 1 || comps[c2].type != 1) continue;
      for (int a : ctx.same_length_nodes(comps[c].nodes, comps[c].theta).nodes())
        for (int b : ctx.same_length_nodes(comps[c2].nodes, comps[c2].theta).nodes()) out.push_back({K::pair, a, b});
    }
  for (int a : ctx.pi1().nodes())
    if (wall_of_pi1(ctx, a) >= 0) out.push_back({K::pi1, a});
  return out;
}

namespace {

int positive_count(const RootSystem& rs, NodeSet s) {
  return s.empty() ? 0 : static_cast<int>(rs.positive_roots(s).size());
}

}  // namespace

int dimension_formula(const GradedContext& ctx, const MaximumParam& p) {
  const auto& rs = ctx.roots();
  const int g = ctx.dual_coxeter();
  if (p.kind == MaximumParam::Kind::pair) {
    NodeSet both = ctx.orthogonal_simples(p.alpha) & ctx.orthogonal_simples(p.beta);
    return g - 2 + positive_count(rs, both) - positive_count(rs, both - ctx.pi1());
  }
  int wall;
  if (p.kind == MaximumParam::Kind::pi1)
    wall = wall_of_pi1(ctx, ctx.pi1_partner(p.alpha));
  else
    wall = wall_of_component(ctx, ctx.component_of(p.alpha));
  const Wall& mu = ctx.walls().at(wall);
  NodeSet orth = ctx.orthogonal_simples(p.alpha);
  int base = p.kind == MaximumParam::Kind::gamma ? g - ctx.components()[mu.index].dual_coxeter : g - 1;
  return base + positive_count(rs, orth) - positive_count(rs, ctx.pi_hat_alpha_mu(p.alpha, mu));
}

std::vector<int> parameter_family(const GradedContext& ctx, const FamilyTable& families, const MaximumParam& p) {
  switch (p.kind) {
    case MaximumParam::Kind::pair: {
      int wa = wall_of_component(ctx, ctx.component_of(p.beta));
      int wb = wall_of_component(ctx, ctx.component_of(p.alpha));
      return intersect_sorted(families.of(wa, p.alpha), families.of(wb, p.beta));
    }
    case MaximumParam::Kind::pi1:
      return families.of(wall_of_pi1(ctx, ctx.pi1_partner(p.alpha)), p.alpha);
    default:
      return families.of(wall_of_component(ctx, ctx.component_of(p.alpha)), p.alpha);
  }
}

}  // namespace borelab
