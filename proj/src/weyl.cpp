#include "borelab/weyl.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace borelab {

namespace {

// m <- m s_i, column-major n x n.
void right_mul_simple(const AffineDiagram& d, std::vector<int>& m, int i) {
  const int n = d.nodes;
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    int c = d.a(i, j);
    if (c == 0) continue;
    for (int r = 0; r < n; ++r) m[j * n + r] -= c * m[i * n + r];
  }
  for (int r = 0; r < n; ++r) m[i * n + r] = -m[i * n + r];
}

std::vector<int> identity_matrix(int n) {
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

int column_sign(const std::vector<int>& m, int n, int j) {
  for (int r = 0; r < n; ++r) {
    if (m[j * n + r] > 0) return 1;
    if (m[j * n + r] < 0) return -1;
  }
  return 0;
}

RootVector column(const std::vector<int>& m, int n, int j) {
  RootVector r(n);
  for (int k = 0; k < n; ++k) r.set(k, m[j * n + k]);
  return r;
}

// Reduced word read off right descents.
std::vector<int> some_reduced_word(const AffineDiagram& d, std::vector<int> m) {
  const int n = d.nodes;
  std::vector<int> rev;
  const int cap = 1 << 16;
  for (;;) {
    int i = 0;
    while (i < n && column_sign(m, n, i) > 0) ++i;
    if (i == n) break;
    if (column_sign(m, n, i) == 0 || static_cast<int>(rev.size()) > cap)
      throw Error("matrix is not an affine Weyl group element");
    right_mul_simple(d, m, i);
    rev.push_back(i);
  }
  if (m != identity_matrix(n)) throw Error("matrix is not an affine Weyl group element");
  return {rev.rbegin(), rev.rend()};
}

std::vector<RootVector> inversions_of_word(const AffineDiagram& d, const std::vector<int>& word) {
  const int n = d.nodes;
  std::vector<int> prefix = identity_matrix(n);
  std::vector<RootVector> out;
  out.reserve(word.size());
  for (int i : word) {
    out.push_back(column(prefix, n, i));
    right_mul_simple(d, prefix, i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

WeylElement WeylElement::identity(int nodes) {
  WeylElement w;
  w.n_ = nodes;
  w.m_ = identity_matrix(nodes);
  return w;
}

RootVector WeylElement::image(int j) const { return column(m_, n_, j); }

RootVector WeylElement::apply(const RootVector& g) const {
  RootVector r(n_);
  for (int j = 0; j < n_; ++j) {
    if (g[j] == 0) continue;
    for (int k = 0; k < n_; ++k) r.add(k, g[j] * m_[j * n_ + k]);
  }
  return r;
}

bool WeylElement::inverts(const RootVector& beta) const { return std::binary_search(inv_.begin(), inv_.end(), beta); }

std::size_t MatrixHash::operator()(const std::vector<int>& m) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : m) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

WeylElement from_matrix(const RootSystem& rs, std::vector<int> matrix) {
  const auto& d = rs.diagram();
  if (static_cast<int>(matrix.size()) != d.nodes * d.nodes) throw Error("matrix has wrong size");
  WeylElement w;
  w.n_ = d.nodes;
  w.inv_ = inversions_of_word(d, some_reduced_word(d, matrix));
  w.m_ = std::move(matrix);
  return w;
}

WeylElement from_word(const RootSystem& rs, std::span<const int> word) {
  const auto& d = rs.diagram();
  std::vector<int> m = identity_matrix(d.nodes);
  for (int i : word) {
    if (i < 0 || i >= d.nodes) throw Error("generator index out of range");
    right_mul_simple(d, m, i);
  }
  return from_matrix(rs, std::move(m));
}

WeylElement from_word(const RootSystem& rs, std::initializer_list<int> word) {
  return from_word(rs, std::span<const int>(word.begin(), word.size()));
}

std::optional<WeylElement> extend(const RootSystem& rs, const WeylElement& w, int i) {
  const int n = w.n_;
  if (column_sign(w.m_, n, i) < 0) return std::nullopt;
  WeylElement out;
  out.n_ = n;
  out.m_ = w.m_;
  RootVector beta = column(w.m_, n, i);
  right_mul_simple(rs.diagram(), out.m_, i);
  out.inv_.reserve(w.inv_.size() + 1);
  auto pos = std::lower_bound(w.inv_.begin(), w.inv_.end(), beta);
  out.inv_.assign(w.inv_.begin(), pos);
  out.inv_.push_back(beta);
  out.inv_.insert(out.inv_.end(), pos, w.inv_.end());
  return out;
}

WeylElement multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
  const int n = u.nodes();
  std::vector<int> m(n * n, 0);
  const auto& um = u.matrix();
  const auto& vm = v.matrix();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      int c = vm[j * n + i];
      if (c == 0) continue;
      for (int k = 0; k < n; ++k) m[j * n + k] += c * um[i * n + k];
    }
  return from_matrix(rs, std::move(m));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  auto word = some_reduced_word(rs.diagram(), w.matrix());
  std::reverse(word.begin(), word.end());
  return from_word(rs, word);
}

WeylElement reflection(const RootSystem& rs, const RootVector& beta) {
  const int n = rs.nodes();
  std::vector<int> m = identity_matrix(n);
  for (int j = 0; j < n; ++j) {
    int c = rs.coroot_pair(rs.simple(j), beta);
    for (int k = 0; k < n; ++k) m[j * n + k] -= c * beta[k];
  }
  return from_matrix(rs, std::move(m));
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
  const auto& d = rs.diagram();
  const int n = d.nodes;
  auto word = some_reduced_word(d, w.matrix());
  std::vector<int> inv = identity_matrix(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) right_mul_simple(d, inv, *it);
  std::vector<int> out;
  for (;;) {
    int i = 0;
    while (i < n && column_sign(inv, n, i) > 0) ++i;
    if (i == n) break;
    out.push_back(i);
    right_mul_simple(d, inv, i);
  }
  return out;
}

bool weak_le(const WeylElement& u, const WeylElement& w) {
  return u.length() <= w.length() &&
         std::includes(w.inversions().begin(), w.inversions().end(), u.inversions().begin(), u.inversions().end());
}

Descents descents(const WeylElement& w) {
  Descents out;
  const int n = w.nodes();
  for (int i = 0; i < n; ++i) {
    if (w.inverts(RootVector::simple(n, i))) out.left.insert(i);
    if (w.image(i).is_negative()) out.right.insert(i);
  }
  return out;
}

WeylElement longest_element(const RootSystem& rs, NodeSet s) {
  if (s == rs.diagram().all_nodes()) throw Error("the affine Weyl group has no longest element");
  WeylElement w = WeylElement::identity(rs.nodes());
  for (bool grown = true; grown;) {
    grown = false;
    for (int j : s.nodes())
      if (auto next = extend(rs, w, j)) {
        w = std::move(*next);
        grown = true;
        break;
      }
  }
  return w;
}

std::vector<RootVector> reflection_subgroup_roots(const RootSystem& rs, const std::vector<RootVector>& simples) {
  std::unordered_set<RootVector, RootVectorHash> seen(simples.begin(), simples.end());
  std::vector<RootVector> queue(simples.begin(), simples.end());
  const std::size_t cap = 100000;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    if (queue.size() > cap) throw Error("reflection subgroup is not finite");
    for (const auto& b : simples) {
      RootVector y = rs.reflect_in(queue[k], b);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  std::vector<RootVector> out;
  for (const auto& r : queue)
    if (r.is_positive()) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

WeylElement minimal_coset_rep(const RootSystem& rs, const WeylElement& g, const std::vector<RootVector>& simples) {
  WeylElement w = g;
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& b : simples)
      if (w.inverts(b)) {
        w = multiply(rs, reflection(rs, b), w);
        moved = true;
        break;
      }
  }
  return w;
}

CosetPoset coset_poset(const RootSystem& rs, NodeSet big, const std::vector<RootVector>& small_simples) {
  for (const auto& b : small_simples)
    if (!b.is_positive() || !b.support().subset_of(big) || !rs.is_real_root(b))
      throw Error("subgroup simple root " + b.to_string() + " is not a positive root of the big subsystem");
  auto sub = reflection_subgroup_roots(rs, small_simples);
  std::unordered_set<RootVector, RootVectorHash> sub_set(sub.begin(), sub.end());
  CosetPoset out;
  std::unordered_map<std::vector<int>, int, MatrixHash> index;
  out.elements.push_back(WeylElement::identity(rs.nodes()));
  index.emplace(out.elements[0].matrix(), 0);
  for (std::size_t k = 0; k < out.elements.size(); ++k) {
    for (int j : big.nodes()) {
      RootVector beta = out.elements[k].image(j);
      if (!beta.is_positive() || sub_set.count(beta)) continue;
      auto next = extend(rs, out.elements[k], j);
      auto [it, fresh] = index.emplace(next->matrix(), static_cast<int>(out.elements.size()));
      if (fresh) out.elements.push_back(std::move(*next));
      out.covers.emplace_back(static_cast<int>(k), it->second);
    }
  }
  return out;
}

std::optional<WeylElement> minimal_mapper(const RootSystem& rs, NodeSet s, const RootVector& from,
                                          const RootVector& to) {
  if (s == rs.diagram().all_nodes()) throw Error("orbit search needs a finite parabolic subgroup");
  struct Step {
    int parent;
    int gen;
  };
  std::vector<RootVector> orbit{from};
  std::vector<Step> steps{{-1, -1}};
  std::unordered_map<RootVector, int, RootVectorHash> seen{{from, 0}};
  int hit = from == to ? 0 : -1;
  for (std::size_t k = 0; k < orbit.size() && hit < 0; ++k)
    for (int j : s.nodes()) {
      RootVector y = rs.reflect(orbit[k], j);
      if (seen.count(y)) continue;
      seen.emplace(y, static_cast<int>(orbit.size()));
      orbit.push_back(y);
      steps.push_back({static_cast<int>(k), j});
      if (y == to) {
        hit = static_cast<int>(orbit.size()) - 1;
        break;
      }
    }
  if (hit < 0) return std::nullopt;
  // the generator applied last is the leftmost letter
  std::vector<int> word;
  for (int v = hit; steps[v].parent >= 0; v = steps[v].parent) word.push_back(steps[v].gen);
  return from_word(rs, word);
}

bool is_biconvex(const RootSystem& rs, const std::vector<RootVector>& set) {
  std::unordered_set<RootVector, RootVectorHash> members(set.begin(), set.end());
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      RootVector s = set[a] + set[b];
      if (!members.count(s) && rs.is_root(s)) return false;
    }
  for (const auto& g : set)
    for (const auto& [e, f] : rs.decompositions(g))
      if (!members.count(e) && !members.count(f)) return false;
  return true;
}

}  // namespace borelab
