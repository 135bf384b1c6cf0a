#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "borelab/grading.hpp"
#include "borelab/weyl.hpp"

namespace borelab {

// sigma-minuscule elements under the weak order. Elements are stored in
// breadth-first order; Hasse edges are single right extensions w -> w s_i.
struct MinusculePoset {
  std::vector<WeylElement> elements;
  std::vector<std::vector<std::pair<int, int>>> up;  // (generator, target)
  std::vector<std::vector<int>> down;
  std::unordered_map<std::vector<int>, int, MatrixHash> index;

  std::size_t size() const { return elements.size(); }
  std::optional<int> find(const WeylElement& w) const;
  std::vector<int> maximal() const;
  std::size_t edge_count() const;
};

// Reference implementation, one element at a time.
MinusculePoset enumerate_serial(const GradedContext& ctx);
// Level-synchronous search, each frontier expanded by an OpenMP team and merged
// in parent order, so the result is identical to the serial one. jobs <= 0 uses the default.
MinusculePoset enumerate(const GradedContext& ctx, int jobs = 0);

// N(w) inside the sigma-height one roots.
bool is_sigma_minuscule(const GradedContext& ctx, const WeylElement& w);
// N(w) disjoint from Phi_sigma.
bool avoids_phi_sigma(const GradedContext& ctx, const WeylElement& w);

// members[wall][alpha]: poset indices of {w : w(alpha_alpha) = mu}, ascending.
struct FamilyTable {
  std::vector<std::vector<std::vector<int>>> members;
  const std::vector<int>& of(int wall, int alpha) const { return members[wall][alpha]; }
};
FamilyTable ideal_families(const GradedContext& ctx, const MinusculePoset& poset);

// Unique member below (above) all others, if any.
std::optional<int> family_minimum(const MinusculePoset& poset, const std::vector<int>& members);
std::optional<int> family_maximum(const MinusculePoset& poset, const std::vector<int>& members);
std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b);

// Closed-form minimum of the family of (alpha, wall); nullopt when alpha is
// outside the admissible set for the wall.
std::optional<WeylElement> construct_minimum(const GradedContext& ctx, int alpha, int wall);
// Minimal element mapping theta to k delta - theta for the given component.
WeylElement special_involution(const GradedContext& ctx, int component);
// Product of longest elements attached to a pair of components.
WeylElement u_element(const GradedContext& ctx, int comp_a, int comp_b);
// Closed-form minimum of the intersection where alpha (in the component of
// the first wall's partner) goes to the other component's wall and vice versa.
WeylElement cross_minimum(const GradedContext& ctx, int alpha, int beta);

int wall_of_component(const GradedContext& ctx, int component);
int wall_of_pi1(const GradedContext& ctx, int beta);

struct MaximumParam {
  enum class Kind { gamma, sigma, pi1, pair };
  Kind kind;
  int alpha;
  int beta = -1;  // second root for pairs
  std::string to_string() const;
};

std::vector<MaximumParam> maxima_parameters(const GradedContext& ctx);
int dimension_formula(const GradedContext& ctx, const MaximumParam& p);
// Members of the family (or intersection) whose maximum the parameter names.
std::vector<int> parameter_family(const GradedContext& ctx, const FamilyTable& families, const MaximumParam& p);

}  // namespace borelab
