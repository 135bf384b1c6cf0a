#include "borelab/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <omp.h>
#include <set>
#include <sstream>
#include <unordered_set>

namespace borelab {

namespace {

// Failures of one work item; merged in item order so reports do not depend on scheduling.
struct Tally {
  long cases = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok) failures.push_back(what());
  }
};

CheckResult summarize(std::string name, const std::vector<Tally>& parts, const std::string& note = "") {
  long cases = 0;
  std::vector<std::string> failures;
  for (const auto& t : parts) {
    cases += t.cases;
    failures.insert(failures.end(), t.failures.begin(), t.failures.end());
  }
  CheckResult r{std::move(name), failures.empty(), ""};
  std::ostringstream os;
  if (failures.empty()) {
    os << cases << (cases == 1 ? " case" : " cases");
  } else {
    os << failures.size() << " of " << cases << " cases failed";
    for (std::size_t i = 0; i < failures.size() && i < 3; ++i) os << "; " << failures[i];
  }
  if (!note.empty()) os << "; " << note;
  r.detail = os.str();
  return r;
}

CheckResult summarize(std::string name, const Tally& t, const std::string& note = "") {
  return summarize(std::move(name), std::vector<Tally>{t}, note);
}

template <class F>
std::vector<Tally> run_items(long count, int jobs, F&& body) {
  std::vector<Tally> parts(count);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < count; ++i) body(i, parts[i]);
  return parts;
}

struct FamilyKey {
  int wall;
  int alpha;
};

std::vector<FamilyKey> all_families(const VerifyInput& in) {
  std::vector<FamilyKey> out;
  for (std::size_t m = 0; m < in.ctx.walls().size(); ++m)
    for (int a = 0; a < in.ctx.nodes(); ++a) out.push_back({static_cast<int>(m), a});
  return out;
}

std::vector<FamilyKey> nonempty_families(const VerifyInput& in) {
  std::vector<FamilyKey> out;
  for (auto f : all_families(in))
    if (!in.families.of(f.wall, f.alpha).empty()) out.push_back(f);
  return out;
}

std::string family_name(const GradedContext& ctx, FamilyKey f) {
  return "(a" + std::to_string(f.alpha) + "," + ctx.walls()[f.wall].label + ")";
}

bool contains_sorted(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

std::vector<RootVector> sorted_union(std::vector<RootVector> a, const std::vector<RootVector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<RootVector> positive_roots_or_empty(const RootSystem& rs, NodeSet s) {
  return s.empty() ? std::vector<RootVector>{} : rs.positive_roots(s);
}

std::string word_string(const RootSystem& rs, const WeylElement& w) {
  std::string s;
  for (int j : reduced_word(rs, w)) s += (s.empty() ? "s" : " s") + std::to_string(j);
  return s.empty() ? "1" : s;
}

}  // namespace

int default_sweep_length(const GradedContext& ctx) {
  return ctx.nodes() <= 4 ? 10 : 8;
}

CheckResult check_dsigma(const GradedContext& ctx, int max_length) {
  const auto& rs = ctx.roots();
  Tally t;
  long minuscule = 0;
  std::vector<WeylElement> level{WeylElement::identity(ctx.nodes())};
  for (int len = 0; len <= max_length && !level.empty(); ++len) {
    std::vector<WeylElement> next;
    std::unordered_set<std::vector<int>, MatrixHash> seen;
    for (const auto& w : level) {
      bool a = is_sigma_minuscule(ctx, w), b = avoids_phi_sigma(ctx, w);
      minuscule += a;
      t.expect(a == b, [&] { return "disagreement at " + word_string(rs, w); });
      if (len == max_length) continue;
      for (int i = 0; i < ctx.nodes(); ++i) {
        auto x = extend(rs, w, i);
        if (x && seen.insert(x->matrix()).second) next.push_back(std::move(*x));
      }
    }
    level = std::move(next);
  }
  return summarize("dsigma", t, "L=" + std::to_string(max_length) + ", " + std::to_string(minuscule) + " minuscule");
}

CheckResult check_poset_structure(const VerifyInput& in) {
  const auto& rs = in.ctx.roots();
  auto parts = run_items(static_cast<long>(in.poset.size()), in.jobs, [&](long e, Tally& t) {
    const WeylElement& w = in.poset.elements[e];
    t.expect(is_sigma_minuscule(in.ctx, w), [&] { return "not sigma-minuscule: " + word_string(rs, w); });
    t.expect(is_biconvex(rs, w.inversions()), [&] { return "N(w) not biconvex: " + word_string(rs, w); });
    for (auto [gen, target] : in.poset.up[e])
      t.expect(in.poset.elements[target].length() == w.length() + 1, [&] { return "Hasse edge changes length by more than one"; });
    for (int i : descents(w).right.nodes()) {
      auto below = multiply(rs, w, from_word(rs, {i}));
      t.expect(in.poset.find(below).has_value(), [&] { return "not closed downward below " + word_string(rs, w); });
    }
  });
  return summarize("poset_structure", parts);
}

CheckResult check_min(const VerifyInput& in) {
  const auto& rs = in.ctx.roots();
  auto fams = all_families(in);
  auto parts = run_items(static_cast<long>(fams.size()), in.jobs, [&](long i, Tally& t) {
    FamilyKey f = fams[i];
    const auto& members = in.families.of(f.wall, f.alpha);
    bool admissible = in.ctx.pi_hat_mu(in.ctx.walls()[f.wall]).contains(f.alpha);
    t.expect(members.empty() != admissible, [&] { return "nonemptiness mismatch at " + family_name(in.ctx, f); });
    if (members.empty() || !admissible) return;
    auto lo = family_minimum(in.poset, members);
    auto built = construct_minimum(in.ctx, f.alpha, f.wall);
    t.expect(lo && built && in.poset.elements[*lo] == *built, [&] {
      return "minimum of " + family_name(in.ctx, f) + " is " + (lo ? word_string(rs, in.poset.elements[*lo]) : "missing") +
             ", construction gives " + (built ? word_string(rs, *built) : "nothing");
    });
  });
  return summarize("min", parts);
}

CheckResult check_lengths(const VerifyInput& in) {
  const auto& ctx = in.ctx;
  const int g = ctx.dual_coxeter();
  Tally t;
  for (std::size_t m = 0; m < ctx.walls().size(); ++m) {
    const Wall& mu = ctx.walls()[m];
    int expected = g - 1;
    if (mu.kind == WallKind::component && ctx.components()[mu.index].type == 1)
      expected = g - ctx.components()[mu.index].dual_coxeter;
    for (int a : ctx.pi_hat_mu(mu).nodes()) {
      auto w = construct_minimum(ctx, a, static_cast<int>(m));
      t.expect(w && w->length() == expected, [&] {
        return "length of minimum at (a" + std::to_string(a) + "," + mu.label + ") is " +
               std::to_string(w ? w->length() : -1) + ", expected " + std::to_string(expected);
      });
    }
  }
  for (const auto& c : ctx.components()) {
    if (!c.is_wall || c.type != 1) continue;
    int ga = ctx.roots().finite_dual_coxeter(c.a_set);
    t.expect(ga == g - c.dual_coxeter + 2, [&] { return "dual Coxeter number of A(" + c.nodes.to_string() + ") is " + std::to_string(ga); });
  }
  return summarize("lengths", t);
}

CheckResult check_slamu(const VerifyInput& in) {
  const auto& rs = in.ctx.roots();
  auto fams = nonempty_families(in);
  auto parts = run_items(static_cast<long>(fams.size()), in.jobs, [&](long i, Tally& t) {
    FamilyKey f = fams[i];
    const auto& members = in.families.of(f.wall, f.alpha);
    auto lo = family_minimum(in.poset, members);
    t.expect(lo.has_value(), [&] { return "no minimum in " + family_name(in.ctx, f); });
    if (!lo) return;
    const WeylElement& w = in.poset.elements[*lo];
    CosetPoset cp = coset_poset(rs, in.ctx.orthogonal_simples(f.alpha), in.ctx.pi_hat_star(f.alpha, in.ctx.walls()[f.wall]));
    std::vector<int> image;
    for (const auto& x : cp.elements) {
      auto id = in.poset.find(multiply(rs, w, x));
      image.push_back(id && contains_sorted(members, *id) ? *id : -1);
    }
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    t.expect(sorted == members, [&] {
      return "image of the coset poset differs from " + family_name(in.ctx, f) + " (" + std::to_string(cp.elements.size()) +
             " vs " + std::to_string(members.size()) + ")";
    });
    if (sorted != members) return;
    std::set<std::pair<int, int>> family_edges;
    for (int m : members)
      for (auto [gen, target] : in.poset.up[m])
        if (contains_sorted(members, target)) family_edges.emplace(m, target);
    std::set<std::pair<int, int>> mapped;
    for (auto [x, y] : cp.covers) mapped.emplace(image[x], image[y]);
    t.expect(mapped == family_edges, [&] { return "covers not preserved in " + family_name(in.ctx, f); });
  });
  return summarize("slamu", parts);
}

CheckResult check_valfa(const VerifyInput& in) {
  const auto& rs = in.ctx.roots();
  auto fams = nonempty_families(in);
  auto parts = run_items(static_cast<long>(fams.size()), in.jobs, [&](long i, Tally& t) {
    FamilyKey f = fams[i];
    const auto& members = in.families.of(f.wall, f.alpha);
    auto lo = family_minimum(in.poset, members);
    if (!lo) {
      t.expect(false, [&] { return "no minimum in " + family_name(in.ctx, f); });
      return;
    }
    NodeSet b = in.ctx.b_mu(in.ctx.walls()[f.wall]);
    NodeSet orth = in.ctx.orthogonal_simples(f.alpha);
    std::vector<WeylElement> v{WeylElement::identity(in.ctx.nodes())};
    std::set<std::vector<int>> v_set{v[0].matrix()};
    for (std::size_t k = 0; k < v.size(); ++k)
      for (int j : orth.nodes()) {
        RootVector beta = v[k].image(j);
        if (!beta.is_positive() || beta.height_on(b) != 1) continue;
        auto next = extend(rs, v[k], j);
        if (v_set.insert(next->matrix()).second) v.push_back(std::move(*next));
      }
    WeylElement w_inv = inverse(rs, in.poset.elements[*lo]);
    std::set<std::vector<int>> translated;
    for (int m : members) translated.insert(multiply(rs, w_inv, in.poset.elements[m]).matrix());
    t.expect(translated == v_set, [&] {
      return "height-one subset has " + std::to_string(v_set.size()) + " elements, translated " + family_name(in.ctx, f) +
             " has " + std::to_string(translated.size());
    });
  });
  return summarize("valfa", parts);
}

CheckResult check_orto(const VerifyInput& in) {
  const auto& rs = in.ctx.roots();
  auto fams = nonempty_families(in);
  auto parts = run_items(static_cast<long>(fams.size()), in.jobs, [&](long i, Tally& t) {
    FamilyKey f = fams[i];
    const auto& members = in.families.of(f.wall, f.alpha);
    auto lo = family_minimum(in.poset, members);
    if (!lo) {
      t.expect(false, [&] { return "no minimum in " + family_name(in.ctx, f); });
      return;
    }
    NodeSet orth = in.ctx.orthogonal_simples(f.alpha);
    WeylElement w_inv = inverse(rs, in.poset.elements[*lo]);
    for (int m : members) {
      WeylElement x = multiply(rs, w_inv, in.poset.elements[m]);
      bool inside = x.image(f.alpha) == rs.simple(f.alpha);
      for (const auto& b : x.inversions()) inside = inside && b.support().subset_of(orth);
      t.expect(inside, [&] { return word_string(rs, x) + " leaves the stabilizer of a" + std::to_string(f.alpha); });
    }
  });
  return summarize("orto", parts);
}

CheckResult check_basic(const VerifyInput& in) {
  const auto& rs = in.ctx.roots();
  auto fams = nonempty_families(in);
  auto parts = run_items(static_cast<long>(fams.size()), in.jobs, [&](long i, Tally& t) {
    FamilyKey f = fams[i];
    const RootVector& mu = in.ctx.walls()[f.wall].root;
    const auto& splits = rs.decompositions(mu);
    for (int m : in.families.of(f.wall, f.alpha)) {
      const WeylElement& w = in.poset.elements[m];
      for (const auto& b : w.inversions())
        t.expect(!w.inverts(mu + b), [&] { return "wall plus an inversion is an inversion of " + word_string(rs, w); });
      for (const auto& [e, g] : splits)
        t.expect(w.inverts(e) != w.inverts(g), [&] {
          return "split " + e.to_string() + "+" + g.to_string() + " of " + family_name(in.ctx, f) + " at " + word_string(rs, w);
        });
    }
  });
  return summarize("basic", parts);
}

CheckResult check_minimo(const VerifyInput& in) {
  const auto& rs = in.ctx.roots();
  auto fams = nonempty_families(in);
  auto parts = run_items(static_cast<long>(fams.size()), in.jobs, [&](long i, Tally& t) {
    FamilyKey f = fams[i];
    if (in.ctx.walls()[f.wall].kind != WallKind::component) return;
    const RootVector& mu = in.ctx.walls()[f.wall].root;
    const auto& members = in.families.of(f.wall, f.alpha);
    std::set<std::vector<RootVector>> inversion_sets;
    for (int m : members) inversion_sets.insert(in.poset.elements[m].inversions());
    for (int m : members) {
      std::vector<RootVector> lower;
      for (const auto& b : in.poset.elements[m].inversions()) {
        RootVector rest = mu - b;
        if (rest.is_positive() && rs.is_root(rest)) lower.push_back(b);
      }
      t.expect(inversion_sets.count(lower) > 0,
               [&] { return "no member below " + word_string(rs, in.poset.elements[m]) + " with the predicted inversions"; });
    }
  });
  return summarize("minimo", parts);
}

CheckResult check_fuori(const VerifyInput& in) {
  auto fams = nonempty_families(in);
  auto parts = run_items(static_cast<long>(fams.size()), in.jobs, [&](long i, Tally& t) {
    FamilyKey f = fams[i];
    const auto& members = in.families.of(f.wall, f.alpha);
    std::vector<char> above(in.poset.size(), 0);
    std::vector<int> stack(members.begin(), members.end());
    for (int m : members) above[m] = 1;
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      for (auto [gen, target] : in.poset.up[e])
        if (!above[target]) {
          above[target] = 1;
          stack.push_back(target);
        }
    }
    int other = in.ctx.pi1().contains(f.alpha) ? wall_of_pi1(in.ctx, in.ctx.pi1_partner(f.alpha)) : -1;
    for (std::size_t e = 0; e < in.poset.size(); ++e) {
      if (!above[e] || contains_sorted(members, static_cast<int>(e))) continue;
      t.expect(other >= 0 && contains_sorted(in.families.of(other, f.alpha), static_cast<int>(e)),
               [&] { return "element above " + family_name(in.ctx, f) + " escapes to an unexpected family"; });
    }
  });
  return summarize("fuori", parts);
}

CheckResult check_om(const GradedContext& ctx) {
  const auto& rs = ctx.roots();
  Tally t;
  WeylElement w0 = longest_element(rs, ctx.pi0());
  NodeSet p1 = ctx.pi1();
  if (p1.size() == 1) {
    int a = p1.front();
    t.expect(w0.image(a) == ctx.k_delta() - rs.simple(a), [&] { return "w0 image of a" + std::to_string(a) + " is " + w0.image(a).to_string(); });
  } else {
    for (int a : p1.nodes()) {
      int b = ctx.pi1_partner(a);
      t.expect(w0.image(a) == rs.delta() - rs.simple(b), [&] { return "w0 image of a" + std::to_string(a) + " is " + w0.image(a).to_string(); });
    }
  }
  return summarize("om", t);
}

CheckResult check_max(const VerifyInput& in) {
  const auto& rs = in.ctx.roots();
  Tally t;
  for (int e : in.poset.maximal()) {
    const WeylElement& w = in.poset.elements[e];
    bool hits = false;
    for (int a = 0; a < in.ctx.nodes() && !hits; ++a)
      for (const auto& mu : in.ctx.walls()) hits = hits || w.image(a) == mu.root;
    t.expect(hits, [&] { return "maximal element " + word_string(rs, w) + " maps no simple root to a wall"; });
  }
  return summarize("max", t);
}

CheckResult check_coppie(const VerifyInput& in) {
  const auto& ctx = in.ctx;
  const auto& rs = ctx.roots();
  const auto& comps = ctx.components();
  Tally t;
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t c2 = 0; c2 < comps.size(); ++c2) {
      int wall = wall_of_component(ctx, static_cast<int>(c));
      int wall2 = wall_of_component(ctx, static_cast<int>(c2));
      if (c == c2 || wall < 0 || wall2 < 0 || comps[c].type != 1 || comps[c2].type != 1) continue;
      for (int a : comps[c].nodes.nodes()) {
        const auto& members = in.families.of(wall2, a);
        for (int m : members) {
          const WeylElement& w = in.poset.elements[m];
          bool is_max = true;
          for (int n : members) is_max = is_max && (n == m || !weak_le(w, in.poset.elements[n]));
          if (!is_max) continue;
          bool found = false;
          for (int eta : comps[c2].nodes.nodes()) found = found || w.image(eta) == comps[c].wall;
          t.expect(found, [&] { return "maximal " + word_string(rs, w) + " sends nothing of the other component to the wall"; });
        }
      }
    }
  return summarize("coppie", t);
}

CheckResult check_minimax(const VerifyInput& in) {
  const auto& ctx = in.ctx;
  const auto& rs = ctx.roots();
  auto fams = nonempty_families(in);
  std::vector<std::pair<FamilyKey, FamilyKey>> pairs;
  auto all = all_families(in);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i].alpha != all[j].alpha) pairs.emplace_back(all[i], all[j]);
  auto parts = run_items(static_cast<long>(pairs.size()), in.jobs, [&](long i, Tally& t) {
    auto [f, g] = pairs[i];
    auto both = intersect_sorted(in.families.of(f.wall, f.alpha), in.families.of(g.wall, g.alpha));
    const Wall& mu = ctx.walls()[f.wall];
    const Wall& nu = ctx.walls()[g.wall];
    bool predicted = mu.kind == WallKind::component && nu.kind == WallKind::component && mu.index != nu.index &&
                     ctx.component_of(f.alpha) == nu.index && ctx.component_of(g.alpha) == mu.index &&
                     ctx.root_type(rs.simple(f.alpha)) == 1 && ctx.root_type(rs.simple(g.alpha)) == 1 && mu.type == 1 &&
                     nu.type == 1;
    std::string name = family_name(ctx, f) + "&" + family_name(ctx, g);
    t.expect(both.empty() != predicted, [&] { return "nonemptiness mismatch at " + name; });
    if (both.empty() || !predicted) return;
    auto lo = family_minimum(in.poset, both);
    WeylElement built = cross_minimum(ctx, f.alpha, g.alpha);
    t.expect(lo && in.poset.elements[*lo] == built, [&] { return "minimum of " + name + " differs from u v v"; });
    if (!lo) return;
    auto lo_f = family_minimum(in.poset, in.families.of(f.wall, f.alpha));
    auto lo_g = family_minimum(in.poset, in.families.of(g.wall, g.alpha));
    t.expect(lo_f && lo_g &&
                 in.poset.elements[*lo].inversions() ==
                     sorted_union(in.poset.elements[*lo_f].inversions(), in.poset.elements[*lo_g].inversions()),
             [&] { return "minimum of " + name + " is not the join of the two minima"; });
    NodeSet j = ctx.orthogonal_simples(f.alpha) & ctx.orthogonal_simples(g.alpha);
    auto expected = rs.weyl_group_order(j) / rs.weyl_group_order(j - ctx.pi1());
    t.expect(both.size() == expected, [&] {
      return name + " has " + std::to_string(both.size()) + " elements, expected " + std::to_string(expected);
    });
    std::vector<RootVector> small;
    for (int x : (j - ctx.pi1()).nodes()) small.push_back(rs.simple(x));
    CosetPoset cp = coset_poset(rs, j, small);
    std::vector<int> image;
    for (const auto& x : cp.elements) {
      auto id = in.poset.find(multiply(rs, in.poset.elements[*lo], x));
      image.push_back(id ? *id : -1);
    }
    std::sort(image.begin(), image.end());
    t.expect(image == both, [&] { return name + " is not the translated coset poset"; });
  });
  return summarize("minimax", parts);
}

CheckResult check_parametrization(const VerifyInput& in) {
  const auto& ctx = in.ctx;
  const auto& rs = ctx.roots();
  Tally t;
  auto params = maxima_parameters(ctx);
  std::vector<int> hit;
  for (const auto& p : params) {
    auto fam = parameter_family(ctx, in.families, p);
    auto top = family_maximum(in.poset, fam);
    t.expect(top.has_value(), [&] { return "family of " + p.to_string() + " has no maximum"; });
    if (!top) continue;
    hit.push_back(*top);
    t.expect(in.poset.up[*top].empty(), [&] { return "maximum of " + p.to_string() + " is not maximal in the poset"; });
    int dim = dimension_formula(ctx, p);
    t.expect(dim == in.poset.elements[*top].length(), [&] {
      return p.to_string() + ": formula " + std::to_string(dim) + ", enumeration " + std::to_string(in.poset.elements[*top].length());
    });
  }
  std::vector<int> sorted = hit;
  std::sort(sorted.begin(), sorted.end());
  t.expect(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), [] { return "two parameters share a maximum"; });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  t.expect(sorted == in.poset.maximal(), [&] {
    return std::to_string(in.poset.maximal().size()) + " maximal elements, " + std::to_string(sorted.size()) + " parametrized";
  });
  if (ctx.spec().adjoint) {
    NodeSet alphas, long_nodes;
    for (const auto& p : params) alphas.insert(p.alpha);
    for (int i : ctx.pi0().nodes())
      if (rs.is_long(rs.simple(i))) long_nodes.insert(i);
    t.expect(alphas == long_nodes, [&] { return "adjoint parameters " + alphas.to_string() + " are not the long simple roots"; });
  }
  return summarize("parametrization", t, std::to_string(params.size()) + " maxima");
}

CheckResult check_special_involution(const VerifyInput& in) {
  const auto& ctx = in.ctx;
  const auto& rs = ctx.roots();
  const auto& d = rs.diagram();
  const int n = d.nodes - 1;
  Tally t;
  for (std::size_t c = 0; c < ctx.components().size(); ++c) {
    const Component& comp = ctx.components()[c];
    if (!comp.is_wall || comp.type != 2) continue;
    WeylElement s = special_involution(ctx, static_cast<int>(c));
    std::string tag = "s for " + comp.nodes.to_string();
    t.expect(multiply(rs, s, s) == WeylElement::identity(ctx.nodes()), [&] { return tag + " is not an involution"; });
    t.expect(s.apply(comp.theta) == comp.wall, [&] { return tag + " misses the wall"; });
    std::vector<RootVector> predicted;
    for (const auto& b : ctx.level_one_roots())
      if (rs.coroot_pair(b, comp.theta) == -2) predicted.push_back(b);
    t.expect(s.inversions() == predicted, [&] { return tag + " has the wrong inversion set"; });
    t.expect(in.poset.find(s).has_value(), [&] { return tag + " is not sigma-minuscule"; });
    if (ctx.k() == 2)
      t.expect(s == reflection(rs, rs.delta() - comp.theta), [&] { return tag + " is not the reflection in delta - theta"; });
    if (d.family == 'C' && d.twist == 1 && ctx.pi1() == (NodeSet::single(0) | NodeSet::single(n))) {
      t.expect(s == from_word(rs, {0, n}), [&] { return tag + " is not s0 sn"; });
      t.expect(s.inversions() == std::vector<RootVector>{rs.simple(n), rs.simple(0)} ||
                   s.inversions() == std::vector<RootVector>{rs.simple(0), rs.simple(n)},
               [&] { return tag + " does not invert exactly a0 and an"; });
    }
    if (d.family == 'B' && d.twist == 1 && ctx.k() == 1 && ctx.pi1() == NodeSet::single(n - 1)) {
      std::vector<int> word;
      for (int i = n - 1; i >= 2; --i) word.push_back(i);
      word.push_back(0);
      for (int i = 1; i <= n - 1; ++i) word.push_back(i);
      t.expect(s == from_word(rs, word), [&] { return tag + " differs from the closed-form word"; });
    }
  }
  return summarize("special_involution", t);
}

CheckResult check_u_element(const VerifyInput& in) {
  const auto& ctx = in.ctx;
  const auto& rs = ctx.roots();
  const auto& comps = ctx.components();
  const int g = ctx.dual_coxeter();
  Tally t;
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t c2 = c + 1; c2 < comps.size(); ++c2) {
      if (!comps[c].is_wall || !comps[c2].is_wall) continue;
      WeylElement u = u_element(ctx, static_cast<int>(c), static_cast<int>(c2));
      std::string tag = "u for " + comps[c].nodes.to_string() + "," + comps[c2].nodes.to_string();
      t.expect(in.poset.find(u).has_value(), [&] { return tag + " is not sigma-minuscule"; });
      std::vector<RootVector> predicted;
      for (const auto& b : positive_roots_or_empty(rs, comps[c].a_set & comps[c2].a_set))
        if (ctx.ht_sigma(b) > 0) predicted.push_back(b);
      std::sort(predicted.begin(), predicted.end());
      t.expect(u.inversions() == predicted, [&] { return tag + " has the wrong inversion set"; });
      if (comps[c].type != 1 || comps[c2].type != 1) continue;
      t.expect(u.apply(comps[c].theta) == comps[c2].wall && u.apply(comps[c2].theta) == comps[c].wall,
               [&] { return tag + " does not exchange theta with the other wall"; });
      t.expect(multiply(rs, u, u) == WeylElement::identity(ctx.nodes()), [&] { return tag + " is not an involution"; });
      int expected = g - comps[c].dual_coxeter - comps[c2].dual_coxeter + 2;
      t.expect(u.length() == expected, [&] { return tag + " has length " + std::to_string(u.length()) + ", expected " + std::to_string(expected); });
    }
  return summarize("u_element", t);
}

CheckResult check_hr(const GradedContext& ctx) {
  const auto& rs = ctx.roots();
  Tally t;
  for (const auto& c : ctx.components()) {
    if (!c.is_wall) continue;
    if (c.type == 1) {
      t.expect(c.wall == rs.highest_root(c.a_set), [&] { return "wall of " + c.nodes.to_string() + " is not the highest root of A"; });
    } else if (ctx.k() == 2) {
      RootVector x = rs.delta() - c.theta;
      bool dominant = rs.is_real_root(x) && x.is_positive() && x.support().subset_of(c.a_set);
      for (int j : c.a_set.nodes()) dominant = dominant && rs.pair(x, j) >= 0;
      t.expect(dominant, [&] { return "delta - theta of " + c.nodes.to_string() + " is not dominant for A"; });
    }
  }
  return summarize("hr", t);
}

CheckResult check_fund(const GradedContext& ctx) {
  const auto& rs = ctx.roots();
  Tally t;
  for (const auto& c : ctx.components()) {
    if (c.r <= 0 || ctx.k() % c.r != 0) continue;
    RootVector x = (ctx.k() / c.r) * rs.delta() - c.theta;
    t.expect(rs.is_real_root(x) && x.support().subset_of(c.a_set),
             [&] { return "shifted theta of " + c.nodes.to_string() + " is not a root of A"; });
    t.expect(is_connected(rs.diagram(), c.a_set), [&] { return "A(" + c.nodes.to_string() + ") is disconnected"; });
  }
  return summarize("fund", t);
}

CheckResult check_exp_identity(const GradedContext& ctx) {
  const auto& rs = ctx.roots();
  std::vector<RootVector> probes = ctx.level_one_roots();
  for (const auto& b : positive_roots_or_empty(rs, ctx.pi0())) {
    probes.push_back(b);
    probes.push_back(b + rs.delta());
    probes.push_back(rs.delta() - b);
  }
  Tally t;
  for (const auto& c : ctx.components()) {
    if (!c.is_wall) continue;
    for (const auto& eta : probes) {
      int lhs = rs.coroot_pair(eta, c.wall);
      int rhs = ctx.ht_sigma(eta) * c.r - eta.height_on(c.b_set) * c.epsilon;
      t.expect(lhs == rhs, [&] { return "pairing of " + eta.to_string() + " with the wall of " + c.nodes.to_string(); });
    }
  }
  return summarize("exp_identity", t);
}

CheckResult check_m2(const GradedContext& ctx) {
  const auto& rs = ctx.roots();
  Tally t;
  for (const auto& mu : ctx.walls()) {
    NodeSet b = ctx.b_mu(mu);
    for (int a : ctx.pi_hat_mu(mu).nodes()) {
      std::vector<RootVector> high;
      for (const auto& g : positive_roots_or_empty(rs, ctx.orthogonal_simples(a)))
        if (g.height_on(b) >= 2) high.push_back(g);
      bool starred = ctx.pi_hat_star(a, mu).size() > ctx.pi_hat_alpha_mu(a, mu).nodes().size();
      std::string tag = "(a" + std::to_string(a) + "," + mu.label + ")";
      t.expect(high.empty() != starred, [&] { return "height-two roots mismatch at " + tag; });
      if (high.empty() || !starred) continue;
      const RootVector& theta = ctx.components()[mu.index].theta;
      bool least = theta.height_on(b) == 2;
      for (const auto& g : high) least = least && theta.leq(g);
      t.expect(least, [&] { return "theta is not the least height-two root at " + tag; });
    }
  }
  return summarize("m2", t);
}

CheckResult check_hermitian_half(const VerifyInput& in) {
  const auto& ctx = in.ctx;
  Tally t;
  if (!ctx.hermitian()) return summarize("hermitian_half", t, "not hermitian");
  const long half2 = static_cast<long>(ctx.level_one_roots().size());
  for (const auto& p : maxima_parameters(ctx)) {
    if (p.kind != MaximumParam::Kind::pi1) continue;
    auto top = family_maximum(in.poset, parameter_family(ctx, in.families, p));
    t.expect(top && 2L * in.poset.elements[*top].length() == half2, [&] {
      return p.to_string() + " has dimension " + std::to_string(top ? in.poset.elements[*top].length() : -1) +
             ", level one has " + std::to_string(half2);
    });
  }
  return summarize("hermitian_half", t, "dim level one " + std::to_string(half2));
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "dsigma",     "poset_structure", "min",         "lengths", "slamu",  "valfa",
      "orto",       "basic",           "minimo",      "fuori",   "om",     "max",
      "coppie",     "minimax",         "parametrization", "special_involution", "u_element", "hr",
      "fund",       "exp_identity",    "m2",          "hermitian_half"};
  return names;
}

std::vector<CheckResult> verify_all(const GradedContext& ctx, const MinusculePoset& poset, const VerifyOptions& opts) {
  for (const auto& name : opts.only)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw Error("unknown check '" + name + "'");
  VerifyInput in(ctx, poset, opts.jobs);
  const int len = opts.max_length >= 0 ? opts.max_length : default_sweep_length(ctx);
  const std::vector<std::function<CheckResult()>> runs{
      [&] { return check_dsigma(ctx, len); },      [&] { return check_poset_structure(in); },
      [&] { return check_min(in); },               [&] { return check_lengths(in); },
      [&] { return check_slamu(in); },             [&] { return check_valfa(in); },
      [&] { return check_orto(in); },              [&] { return check_basic(in); },
      [&] { return check_minimo(in); },            [&] { return check_fuori(in); },
      [&] { return check_om(ctx); },               [&] { return check_max(in); },
      [&] { return check_coppie(in); },            [&] { return check_minimax(in); },
      [&] { return check_parametrization(in); },   [&] { return check_special_involution(in); },
      [&] { return check_u_element(in); },         [&] { return check_hr(ctx); },
      [&] { return check_fund(ctx); },             [&] { return check_exp_identity(ctx); },
      [&] { return check_m2(ctx); },               [&] { return check_hermitian_half(in); },
  };
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& name = check_names()[i];
    if (opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), name) != opts.only.end()) out.push_back(runs[i]());
  }
  return out;
}

}  // namespace borelab
