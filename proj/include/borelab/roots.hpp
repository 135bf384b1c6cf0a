#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "borelab/affine_cartan.hpp"

namespace borelab {

enum class RootKind { not_a_root, real, imaginary };

using Rational = boost::rational<long long>;
using RootPair = std::pair<RootVector, RootVector>;

// Root data of an affine diagram. Memo tables are internally synchronized,
// so one instance can be shared by worker threads.
class RootSystem {
 public:
  explicit RootSystem(AffineDiagram d);

  const AffineDiagram& diagram() const { return d_; }
  int nodes() const { return d_.nodes; }
  RootVector delta() const { return d_.delta(); }
  RootVector simple(int i) const { return RootVector::simple(d_.nodes, i); }

  // <g, alpha_i^vee>
  int pair(const RootVector& g, int i) const;
  // (g, h) scaled by the long symmetrizer, so long roots have norm 2 * scale.
  long long bilinear_scaled(const RootVector& g, const RootVector& h) const;
  Rational bilinear(const RootVector& g, const RootVector& h) const;
  long long norm_scaled(const RootVector& g) const { return bilinear_scaled(g, g); }
  long long long_norm_scaled() const { return 2LL * d_.long_symmetrizer(); }
  // <g, h^vee> for a real root h.
  int coroot_pair(const RootVector& g, const RootVector& h) const;

  RootVector reflect(const RootVector& g, int i) const;
  RootVector reflect_in(const RootVector& g, const RootVector& beta) const;

  RootKind classify(const RootVector& g) const;
  bool is_root(const RootVector& g) const { return classify(g) != RootKind::not_a_root; }
  bool is_real_root(const RootVector& g) const { return classify(g) == RootKind::real; }

  // Positive roots of the finite subsystem on S, sorted by height then coordinates.
  const std::vector<RootVector>& positive_roots(NodeSet s) const;
  RootVector highest_root(NodeSet s) const;
  // Long with respect to the whole affine system.
  bool is_long(const RootVector& g) const { return norm_scaled(g) == long_norm_scaled(); }
  bool same_length(const RootVector& g, const RootVector& h) const { return norm_scaled(g) == norm_scaled(h); }

  // Unordered decompositions g = e + f into positive roots (real or imaginary), e <= f.
  const std::vector<RootPair>& decompositions(const RootVector& g) const;

  // "A1 x E7" style name of the finite subsystem on S.
  std::string finite_type_name(NodeSet s) const;
  std::uint64_t weyl_group_order(NodeSet s) const;
  int finite_dual_coxeter(NodeSet s) const { return borelab::finite_dual_coxeter(d_, s); }

 private:
  struct ComponentType {
    char letter;
    int rank;
  };
  ComponentType component_type(NodeSet comp) const;
  RootKind classify_uncached(const RootVector& g, std::vector<RootVector>& visited) const;

  AffineDiagram d_;
  mutable std::shared_mutex root_mutex_;
  mutable std::unordered_map<RootVector, RootKind, RootVectorHash> kind_memo_;
  mutable std::mutex table_mutex_;
  mutable std::map<std::uint32_t, std::vector<RootVector>> closure_memo_;
  mutable std::unordered_map<RootVector, std::vector<RootPair>, RootVectorHash> decomposition_memo_;
};

}  // namespace borelab
