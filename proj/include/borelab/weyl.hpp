#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "borelab/roots.hpp"

namespace borelab {

// Element of the affine Weyl group, identified by its action on the root
// lattice. Column j of the matrix is w(alpha_j). The inversion set
// N(w) = {beta > 0 : w^{-1} beta < 0} is kept sorted.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(int nodes);

  int nodes() const { return n_; }
  RootVector image(int j) const;
  RootVector apply(const RootVector& g) const;
  int length() const { return static_cast<int>(inv_.size()); }
  const std::vector<RootVector>& inversions() const { return inv_; }
  bool inverts(const RootVector& beta) const;
  const std::vector<int>& matrix() const { return m_; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m_ == b.m_; }

 private:
  friend WeylElement from_matrix(const RootSystem&, std::vector<int>);
  friend std::optional<WeylElement> extend(const RootSystem&, const WeylElement&, int);

  int n_ = 0;
  std::vector<int> m_;
  std::vector<RootVector> inv_;
};

struct MatrixHash {
  std::size_t operator()(const std::vector<int>& m) const;
};

// Builds the element from its action matrix; throws if it is not in the group.
WeylElement from_matrix(const RootSystem& rs, std::vector<int> matrix);
// Product s_{word[0]} ... s_{word[k-1]}; the word need not be reduced.
WeylElement from_word(const RootSystem& rs, std::span<const int> word);
WeylElement from_word(const RootSystem& rs, std::initializer_list<int> word);

// w s_i when w(alpha_i) > 0, so that N(w s_i) = N(w) + {w(alpha_i)}.
std::optional<WeylElement> extend(const RootSystem& rs, const WeylElement& w, int i);

WeylElement multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);
WeylElement reflection(const RootSystem& rs, const RootVector& beta);

// Lexicographically smallest reduced word.
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w);

// Weak order: N(u) contained in N(w).
bool weak_le(const WeylElement& u, const WeylElement& w);

struct Descents {
  NodeSet left;   // simple roots in N(w)
  NodeSet right;  // simple roots in N(w^{-1})
};
Descents descents(const WeylElement& w);

WeylElement longest_element(const RootSystem& rs, NodeSet s);

// Positive roots of the reflection subgroup generated by the given simple system.
std::vector<RootVector> reflection_subgroup_roots(const RootSystem& rs, const std::vector<RootVector>& simples);

// Minimal element of the coset W' g, W' generated by reflections in `simples`.
WeylElement minimal_coset_rep(const RootSystem& rs, const WeylElement& g, const std::vector<RootVector>& simples);

struct CosetPoset {
  std::vector<WeylElement> elements;       // by length, identity first
  std::vector<std::pair<int, int>> covers;  // (x, x s_j)
};
// Minimal representatives of W' \ W(big) under the weak order.
CosetPoset coset_poset(const RootSystem& rs, NodeSet big, const std::vector<RootVector>& small_simples);

// Minimal-length y in W(S) with y(from) == to, by breadth-first search over the orbit.
std::optional<WeylElement> minimal_mapper(const RootSystem& rs, NodeSet s, const RootVector& from, const RootVector& to);

// Closed under root sums and every decomposition of a member has a summand in the set.
bool is_biconvex(const RootSystem& rs, const std::vector<RootVector>& set);

}  // namespace borelab
