#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace borelab {

// Subset of diagram nodes stored as a bit mask.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t bits) : bits_(bits) {}
  NodeSet(std::initializer_list<int> nodes) {
    for (int i : nodes) insert(i);
  }

  static NodeSet all(int n) { return NodeSet(n >= 32 ? ~0u : ((1u << n) - 1u)); }
  static NodeSet single(int i) { return NodeSet(1u << i); }

  bool contains(int i) const { return (bits_ >> i) & 1u; }
  void insert(int i) { bits_ |= 1u << i; }
  void erase(int i) { bits_ &= ~(1u << i); }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }
  int front() const { return std::countr_zero(bits_); }

  std::vector<int> nodes() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(NodeSet other) const { return (bits_ & other.bits_) != 0; }

  friend NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits_ | b.bits_); }
  friend NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & b.bits_); }
  friend NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & ~b.bits_); }
  friend bool operator==(NodeSet, NodeSet) = default;
  friend auto operator<=>(NodeSet, NodeSet) = default;

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : nodes()) {
      if (!first) s += ',';
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace borelab
