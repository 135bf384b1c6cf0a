#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "borelab/node_set.hpp"
#include "borelab/root_vector.hpp"

namespace borelab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Affine Dynkin diagram in Kac numbering. cartan(i, j) = <alpha_j, alpha_i^vee>.
struct AffineDiagram {
  std::string label;  // e.g. "E8~1"
  char family = 'A';
  int rank = 0;
  int twist = 1;
  int nodes = 0;
  std::vector<int> cartan_entries;  // row-major
  std::vector<int> marks;           // coefficients of the null root delta
  std::vector<int> comarks;
  // Integer symmetrizer with gcd 1: sym[i] * a(i,j) == sym[j] * a(j,i).
  // Squared length of alpha_i is 2 * sym[i] / max(sym).
  std::vector<int> symmetrizer;

  int a(int i, int j) const { return cartan_entries[i * nodes + j]; }
  int long_symmetrizer() const;
  bool adjacent(int i, int j) const { return i != j && a(i, j) != 0; }
  RootVector delta() const { return RootVector(marks); }
  NodeSet all_nodes() const { return NodeSet::all(nodes); }
};

// Parses labels like "E8~1", "D5~2", "A6~1". Throws Error on unknown types.
AffineDiagram load_diagram(std::string_view label);

// Sum of comarks.
int dual_coxeter_number(const AffineDiagram& d);

// Dual Coxeter number of the finite irreducible subsystem spanned by S.
int finite_dual_coxeter(const AffineDiagram& d, NodeSet s);

// Highest root of a connected proper subdiagram, found by climbing the
// orbit of a long simple root to the dominant chamber.
RootVector dominant_long_root(const AffineDiagram& d, NodeSet s);

std::vector<NodeSet> connected_components(const AffineDiagram& d, NodeSet s);
bool is_connected(const AffineDiagram& d, NodeSet s);

// All node permutations p with a(p[i], p[j]) == a(i, j).
std::vector<std::vector<int>> diagram_automorphisms(const AffineDiagram& d);

// Node numbering rendered as ASCII art, marks in parentheses.
std::string ascii_layout(const AffineDiagram& d);

// Labels of every diagram the catalog knows up to the given rank.
std::vector<std::string> known_labels(int max_rank);

}  // namespace borelab
