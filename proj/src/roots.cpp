#include "borelab/roots.hpp"

#include <algorithm>
#include <set>

namespace borelab {

RootSystem::RootSystem(AffineDiagram d) : d_(std::move(d)) {}

int RootSystem::pair(const RootVector& g, int i) const {
  int p = 0;
  for (int j = 0; j < d_.nodes; ++j) p += d_.a(i, j) * g[j];
  return p;
}

long long RootSystem::bilinear_scaled(const RootVector& g, const RootVector& h) const {
  long long s = 0;
  for (int i = 0; i < d_.nodes; ++i)
    if (g[i] != 0) s += 1LL * g[i] * d_.symmetrizer[i] * pair(h, i);
  return s;
}

Rational RootSystem::bilinear(const RootVector& g, const RootVector& h) const {
  return Rational(bilinear_scaled(g, h), d_.long_symmetrizer());
}

int RootSystem::coroot_pair(const RootVector& g, const RootVector& h) const {
  long long hh = norm_scaled(h);
  if (hh <= 0) throw Error("coroot of a non-real vector " + h.to_string());
  long long num = 2 * bilinear_scaled(g, h);
  if (num % hh != 0) throw Error("non-integral pairing with " + h.to_string());
  return static_cast<int>(num / hh);
}

RootVector RootSystem::reflect(const RootVector& g, int i) const {
  RootVector r = g;
  r.add(i, -pair(g, i));
  return r;
}

RootVector RootSystem::reflect_in(const RootVector& g, const RootVector& beta) const {
  return g - coroot_pair(g, beta) * beta;
}

namespace {

bool multiple_of(const RootVector& g, const RootVector& delta) {
  int m = g[0] / delta[0];
  if (m == 0) return false;
  for (int i = 0; i < g.size(); ++i)
    if (g[i] != m * delta[i]) return false;
  return true;
}

}  // namespace

// Descent: a positive real root other than alpha_i with positive pairing
// against alpha_i^vee reflects to a lower positive real root.
RootKind RootSystem::classify_uncached(const RootVector& start, std::vector<RootVector>& visited) const {
  RootVector g = start;
  const RootVector delta = d_.delta();
  const int cap = 4 * std::max(1, g.height()) + 4;
  for (int step = 0; step <= cap; ++step) {
    {
      std::shared_lock lock(root_mutex_);
      if (auto it = kind_memo_.find(g); it != kind_memo_.end()) return it->second;
    }
    visited.push_back(g);
    if (!g.is_positive()) return RootKind::not_a_root;
    if (g.height() == 1) return RootKind::real;
    if (multiple_of(g, delta)) return RootKind::imaginary;
    int best = -1, best_pair = 0;
    for (int i = 0; i < d_.nodes; ++i) {
      int p = pair(g, i);
      if (p > best_pair) {
        best_pair = p;
        best = i;
      }
    }
    if (best < 0) return RootKind::not_a_root;
    g.add(best, -best_pair);
  }
  return RootKind::not_a_root;
}

RootKind RootSystem::classify(const RootVector& g) const {
  if (g.size() != d_.nodes) throw Error("root vector has wrong dimension");
  if (g.is_zero()) return RootKind::not_a_root;
  if (!g.is_positive()) {
    RootVector m = -g;
    return m.is_positive() ? classify(m) : RootKind::not_a_root;
  }
  {
    std::shared_lock lock(root_mutex_);
    if (auto it = kind_memo_.find(g); it != kind_memo_.end()) return it->second;
  }
  std::vector<RootVector> visited;
  RootKind k = classify_uncached(g, visited);
  std::unique_lock lock(root_mutex_);
  for (const auto& v : visited)
    if (v.is_positive()) kind_memo_.emplace(v, k);
  return k;
}

const std::vector<RootVector>& RootSystem::positive_roots(NodeSet s) const {
  {
    std::lock_guard lock(table_mutex_);
    if (auto it = closure_memo_.find(s.bits()); it != closure_memo_.end()) return it->second;
  }
  if (!s.subset_of(d_.all_nodes())) throw Error("node set out of range");
  if (s == d_.all_nodes()) throw Error("closure of the full affine diagram is infinite");
  std::set<RootVector> found;
  std::vector<RootVector> frontier;
  for (int i : s.nodes()) {
    found.insert(simple(i));
    frontier.push_back(simple(i));
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& r : frontier)
      for (int j : s.nodes()) {
        RootVector c = r + simple(j);
        if (!found.count(c) && is_real_root(c)) {
          found.insert(c);
          next.push_back(c);
        }
      }
    frontier = std::move(next);
  }
  std::vector<RootVector> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
    return a.height() != b.height() ? a.height() < b.height() : a < b;
  });
  std::lock_guard lock(table_mutex_);
  return closure_memo_.emplace(s.bits(), std::move(out)).first->second;
}

RootVector RootSystem::highest_root(NodeSet s) const {
  RootVector theta = dominant_long_root(d_, s);
  const auto& roots = positive_roots(s);
  if (roots.back() != theta) throw Error("highest root is not the unique height maximum");
  return theta;
}

const std::vector<RootPair>& RootSystem::decompositions(const RootVector& g) const {
  {
    std::lock_guard lock(table_mutex_);
    if (auto it = decomposition_memo_.find(g); it != decomposition_memo_.end()) return it->second;
  }
  std::vector<RootPair> out;
  if (g.is_positive()) {
    std::set<RootVector> below;
    std::vector<RootVector> frontier;
    for (int i = 0; i < d_.nodes; ++i)
      if (g[i] > 0) {
        below.insert(simple(i));
        frontier.push_back(simple(i));
      }
    while (!frontier.empty()) {
      std::vector<RootVector> next;
      for (const auto& r : frontier)
        for (int j = 0; j < d_.nodes; ++j) {
          RootVector c = r + simple(j);
          if (c.leq(g) && c != g && !below.count(c) && is_root(c)) {
            below.insert(c);
            next.push_back(c);
          }
        }
      frontier = std::move(next);
    }
    for (const auto& e : below) {
      RootVector f = g - e;
      if (e <= f && below.count(f)) out.emplace_back(e, f);
    }
  }
  std::lock_guard lock(table_mutex_);
  return decomposition_memo_.emplace(g, std::move(out)).first->second;
}

RootSystem::ComponentType RootSystem::component_type(NodeSet comp) const {
  const int r = comp.size();
  const int count = static_cast<int>(positive_roots(comp).size());
  int max_sym = 0, shorts = 0;
  for (int i : comp.nodes()) max_sym = std::max(max_sym, d_.symmetrizer[i]);
  for (int i : comp.nodes()) shorts += d_.symmetrizer[i] < max_sym;
  if (shorts == 0) {
    if (count == r * (r + 1) / 2) return {'A', r};
    if (count == r * (r - 1)) return {'D', r};
    if (r >= 6 && r <= 8) return {'E', r};
  } else {
    if (r == 2 && count == 6) return {'G', 2};
    if (r == 4 && count == 24) return {'F', 4};
    if (count == r * r) return {(shorts == 1 || r == 2) ? 'B' : 'C', r};
  }
  throw Error("unrecognized finite subsystem on " + comp.to_string());
}

std::string RootSystem::finite_type_name(NodeSet s) const {
  std::string out;
  for (NodeSet comp : connected_components(d_, s)) {
    auto t = component_type(comp);
    if (!out.empty()) out += " x ";
    out += std::string(1, t.letter) + std::to_string(t.rank);
  }
  return out.empty() ? "trivial" : out;
}

std::uint64_t RootSystem::weyl_group_order(NodeSet s) const {
  std::uint64_t total = 1;
  for (NodeSet comp : connected_components(d_, s)) {
    auto t = component_type(comp);
    std::uint64_t fact = 1;
    for (int i = 2; i <= t.rank; ++i) fact *= i;
    switch (t.letter) {
      case 'A':
        total *= fact * (t.rank + 1);
        break;
      case 'B':
      case 'C':
        total *= fact << t.rank;
        break;
      case 'D':
        total *= fact << (t.rank - 1);
        break;
      case 'E':
        total *= t.rank == 6 ? 51840ULL : t.rank == 7 ? 2903040ULL : 696729600ULL;
        break;
      case 'F':
        total *= 1152;
        break;
      default:
        total *= 12;
    }
  }
  return total;
}

}  // namespace borelab
