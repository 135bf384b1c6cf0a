#include "borelab/grading.hpp"

#include <algorithm>
#include <set>

namespace borelab {

NodeSet InvolutionSpec::pi1() const {
  NodeSet p;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == 1) p.insert(static_cast<int>(i));
  return p;
}

std::string InvolutionSpec::file_stem() const {
  std::string nodes;
  for (int i : pi1().nodes()) nodes += (nodes.empty() ? "" : ",") + std::to_string(i);
  return diagram + "__pi1-" + nodes + (adjoint ? "__adjoint" : "");
}

InvolutionSpec make_involution(const AffineDiagram& d, NodeSet pi1, bool adjoint) {
  if (pi1.empty() || !pi1.subset_of(d.all_nodes())) throw Error("Pi_1 must be a nonempty set of diagram nodes");
  if (pi1.size() > 2) throw Error("at most two nodes may carry s_i = 1");
  InvolutionSpec spec;
  spec.diagram = d.label;
  spec.adjoint = adjoint;
  spec.s.assign(d.nodes, 0);
  int weighted = 0;
  for (int i : pi1.nodes()) {
    spec.s[i] = 1;
    weighted += d.marks[i];
  }
  if (adjoint) {
    if (d.twist != 1) throw Error("the adjoint case needs an untwisted diagram");
    if (pi1.size() != 1 || weighted != 1) throw Error("the adjoint case needs a single node of mark 1");
    spec.k = 2;
  } else {
    spec.k = d.twist;
  }
  if (spec.k * weighted != 2)
    throw Error("s-vector " + pi1.to_string() + " violates k * sum(s_i a_i) = 2 on " + d.label);
  return spec;
}

std::vector<InvolutionSpec> catalog_involutions(const AffineDiagram& d, bool include_adjoint, bool dedupe) {
  std::vector<NodeSet> candidates;
  for (int i = 0; i < d.nodes; ++i) candidates.push_back(NodeSet::single(i));
  for (int i = 0; i < d.nodes; ++i)
    for (int j = i + 1; j < d.nodes; ++j) candidates.push_back(NodeSet{i, j});
  std::vector<std::vector<int>> autos;
  if (dedupe) autos = diagram_automorphisms(d);
  auto canonical = [&](NodeSet p) {
    NodeSet best = p;
    for (const auto& perm : autos) {
      NodeSet q;
      for (int i : p.nodes()) q.insert(perm[i]);
      if (q.bits() < best.bits()) best = q;
    }
    return best;
  };
  std::vector<InvolutionSpec> out;
  auto add_all = [&](bool adjoint) {
    std::set<std::uint32_t> seen;
    for (NodeSet p : candidates) {
      int weighted = 0;
      for (int i : p.nodes()) weighted += d.marks[i];
      int k = adjoint ? 2 : d.twist;
      if (k * weighted != 2 || (adjoint && p.size() != 1)) continue;
      if (dedupe && !seen.insert(canonical(p).bits()).second) continue;
      out.push_back(make_involution(d, p, adjoint));
    }
  };
  add_all(false);
  if (include_adjoint && d.twist == 1) add_all(true);
  return out;
}

GradedContext::GradedContext(std::shared_ptr<const RootSystem> roots, InvolutionSpec spec)
    : roots_(std::move(roots)), spec_(std::move(spec)) {
  const RootSystem& rs = *roots_;
  const AffineDiagram& d = rs.diagram();
  if (spec_.diagram != d.label) throw Error("involution spec refers to a different diagram");
  if (static_cast<int>(spec_.s.size()) != d.nodes) throw Error("s-vector has wrong length");
  pi1_ = spec_.pi1();
  pi0_ = d.all_nodes() - pi1_;
  {
    // revalidate through the constructor of record
    InvolutionSpec check = make_involution(d, pi1_, spec_.adjoint);
    if (check.k != spec_.k) throw Error("inconsistent k in involution spec");
  }
  dual_coxeter_ = dual_coxeter_number(d);
  const RootVector kd = k_delta();

  for (NodeSet comp : connected_components(d, pi0_)) {
    Component c;
    c.nodes = comp;
    c.theta = rs.highest_root(comp);
    c.wall = kd - c.theta;
    c.complex = is_complex(c.theta);
    c.type = root_type(c.theta);
    c.is_wall = rs.long_norm_scaled() <= 2 * rs.norm_scaled(c.theta);
    c.r = -rs.coroot_pair(rs.simple(pi1_.front()), c.theta);
    for (int b : pi1_.nodes())
      if (-rs.coroot_pair(rs.simple(b), c.theta) != c.r)
        throw Error("r_Sigma depends on the choice of Pi_1 root");
    c.epsilon = comp.size() == 1 ? 2 : 1;
    NodeSet nonpositive;
    for (int i = 0; i < d.nodes; ++i) {
      long long p = rs.bilinear_scaled(rs.simple(i), c.theta);
      if (p <= 0) nonpositive.insert(i);
      if (p > 0) c.b_set.insert(i);
    }
    for (NodeSet part : connected_components(d, nonpositive))
      if (part.intersects(pi1_)) c.a_set = c.a_set | part;
    c.gamma = c.a_set & comp;
    c.dual_coxeter = rs.finite_dual_coxeter(comp);
    c.name = rs.finite_type_name(comp);
    components_.push_back(c);
  }

  int label = 1;
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].is_wall)
      walls_.push_back({WallKind::component, static_cast<int>(i), components_[i].wall, components_[i].type,
                        "mu_" + std::to_string(label++)});
  for (int b : pi1_.nodes())
    if (root_type(rs.simple(b)) == 1)
      walls_.push_back({WallKind::pi1, b, rs.simple(b) + kd, 1, "mu_" + std::to_string(label++)});

  for (int i : pi0_.nodes()) phi_.push_back(rs.simple(i));
  for (const auto& w : walls_) phi_.push_back(w.root);
  std::sort(phi_.begin(), phi_.end());

  // Level-one roots: saturate upward from simple roots, staying at sigma-height <= 1.
  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (int i = 0; i < d.nodes; ++i) {
    seen.insert(rs.simple(i));
    frontier.push_back(rs.simple(i));
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& r : frontier)
      for (int j = 0; j < d.nodes; ++j) {
        RootVector c = r + rs.simple(j);
        if (ht_sigma(c) > 1 || seen.count(c) || !rs.is_root(c)) continue;
        seen.insert(c);
        next.push_back(c);
      }
    frontier = std::move(next);
  }
  for (const auto& r : seen)
    if (ht_sigma(r) == 1 && rs.is_real_root(r)) level_one_.push_back(r);
}

bool GradedContext::is_complex(const RootVector& g) const {
  return spec_.k == 2 && roots_->is_root(roots_->delta() + g);
}

int GradedContext::root_type(const RootVector& g) const {
  return roots_->is_long(g) && !is_complex(g) ? 1 : 2;
}

int GradedContext::component_of(int node) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].nodes.contains(node)) return static_cast<int>(i);
  return -1;
}

bool GradedContext::in_phi_sigma(const RootVector& g) const { return std::binary_search(phi_.begin(), phi_.end(), g); }

NodeSet GradedContext::same_length_nodes(NodeSet s, const RootVector& ref) const {
  NodeSet out;
  for (int i : s.nodes())
    if (roots_->same_length(roots_->simple(i), ref)) out.insert(i);
  return out;
}

int GradedContext::pi1_partner(int beta) const {
  if (!hermitian()) return beta;
  return (pi1_ - NodeSet::single(beta)).front();
}

NodeSet GradedContext::b_mu(const Wall& mu) const {
  if (mu.kind == WallKind::pi1) return NodeSet::single(mu.index);
  const Component& c = components_[mu.index];
  if (c.type == 2) return pi1_;
  NodeSet out;
  for (int i = 0; i < nodes(); ++i)
    if (roots_->coroot_pair(roots_->simple(i), c.theta) == 1) out.insert(i);
  return out;
}

NodeSet GradedContext::pi_hat_mu(const Wall& mu) const {
  if (mu.kind == WallKind::pi1) return hermitian() ? pi1_ - NodeSet::single(mu.index) : pi1_;
  const Component& c = components_[mu.index];
  return same_length_nodes(c.type == 1 ? c.a_set : c.nodes, c.theta);
}

NodeSet GradedContext::orthogonal_simples(int alpha) const {
  NodeSet out;
  for (int i = 0; i < nodes(); ++i)
    if (roots_->bilinear_scaled(roots_->simple(i), roots_->simple(alpha)) == 0) out.insert(i);
  return out;
}

NodeSet GradedContext::pi_hat_alpha_mu(int alpha, const Wall& mu) const { return orthogonal_simples(alpha) - b_mu(mu); }

std::vector<RootVector> GradedContext::pi_hat_star(int alpha, const Wall& mu) const {
  std::vector<RootVector> out;
  for (int i : pi_hat_alpha_mu(alpha, mu).nodes()) out.push_back(roots_->simple(i));
  if (mu.kind == WallKind::component) {
    const Component& c = components_[mu.index];
    if (c.type == 1 && c.nodes.size() > 1 && c.a_set.contains(alpha) && !c.nodes.contains(alpha) &&
        !pi1_.contains(alpha))
      out.push_back(c.theta);
  }
  return out;
}

std::string GradedContext::pi0_name() const { return roots_->finite_type_name(pi0_); }

}  // namespace borelab
