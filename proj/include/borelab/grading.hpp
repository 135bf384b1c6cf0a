#pragma once

#include <memory>
#include <string>
#include <vector>

#include "borelab/roots.hpp"

namespace borelab {

// Involution of a simple Lie algebra in Kac coordinates: the nodes with
// s_i = 1 form Pi_1 and k * sum(s_i * mark_i) == 2.
struct InvolutionSpec {
  std::string diagram;
  int k = 1;
  std::vector<int> s;
  bool adjoint = false;

  NodeSet pi1() const;
  // "<diagram>__pi1-<nodes>[__adjoint]"
  std::string file_stem() const;
};

InvolutionSpec make_involution(const AffineDiagram& d, NodeSet pi1, bool adjoint = false);

// Every valid s-vector, optionally with the adjoint specs of an untwisted
// diagram, optionally keeping one representative per diagram-automorphism orbit.
std::vector<InvolutionSpec> catalog_involutions(const AffineDiagram& d, bool include_adjoint, bool dedupe);

// Connected component of Pi_0 with the data attached to its wall k delta - theta.
struct Component {
  NodeSet nodes;
  RootVector theta;
  RootVector wall;
  bool is_wall = false;  // wall belongs to Phi_sigma
  bool complex = false;
  int type = 2;
  int r = 0;        // -<alpha, theta^vee> for alpha in Pi_1
  int epsilon = 1;  // 2 for a single node
  NodeSet a_set;    // union of components of {(alpha, theta) <= 0} meeting Pi_1
  NodeSet gamma;    // a_set & nodes
  NodeSet b_set;    // {(alpha, theta) > 0}
  int dual_coxeter = 0;
  std::string name;
};

enum class WallKind { component, pi1 };

struct Wall {
  WallKind kind;
  int index;  // component index or Pi_1 node
  RootVector root;
  int type;
  std::string label;  // mu_1, mu_2, ...
};

class GradedContext {
 public:
  GradedContext(std::shared_ptr<const RootSystem> roots, InvolutionSpec spec);

  const RootSystem& roots() const { return *roots_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return roots_; }
  const InvolutionSpec& spec() const { return spec_; }
  int nodes() const { return roots_->nodes(); }
  int k() const { return spec_.k; }
  NodeSet pi0() const { return pi0_; }
  NodeSet pi1() const { return pi1_; }
  bool hermitian() const { return pi1_.size() == 2; }
  RootVector k_delta() const { return spec_.k * roots_->delta(); }
  int dual_coxeter() const { return dual_coxeter_; }

  int ht_sigma(const RootVector& g) const { return g.height_on(pi1_); }
  bool is_complex(const RootVector& g) const;
  // 1 when long and not complex, else 2.
  int root_type(const RootVector& g) const;

  const std::vector<Component>& components() const { return components_; }
  int component_of(int node) const;
  const std::vector<Wall>& walls() const { return walls_; }
  const std::vector<RootVector>& phi_sigma() const { return phi_; }
  bool in_phi_sigma(const RootVector& g) const;

  NodeSet b_mu(const Wall& mu) const;
  NodeSet pi_hat_mu(const Wall& mu) const;
  NodeSet orthogonal_simples(int alpha) const;
  NodeSet pi_hat_alpha_mu(int alpha, const Wall& mu) const;
  std::vector<RootVector> pi_hat_star(int alpha, const Wall& mu) const;
  // Pi_1 root paired with beta in the walls beta + k delta: beta itself or the other one.
  int pi1_partner(int beta) const;
  // Nodes of the given set having the same length as the reference root.
  NodeSet same_length_nodes(NodeSet s, const RootVector& ref) const;

  // Positive real roots of sigma-height one, sorted.
  const std::vector<RootVector>& level_one_roots() const { return level_one_; }
  std::string pi0_name() const;

 private:
  std::shared_ptr<const RootSystem> roots_;
  InvolutionSpec spec_;
  NodeSet pi0_, pi1_;
  int dual_coxeter_ = 0;
  std::vector<Component> components_;
  std::vector<Wall> walls_;
  std::vector<RootVector> phi_;
  std::vector<RootVector> level_one_;
};

}  // namespace borelab
