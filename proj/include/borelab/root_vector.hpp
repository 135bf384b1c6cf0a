#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "borelab/node_set.hpp"

namespace borelab {

inline constexpr int kMaxNodes = 12;

// Integer coordinates of a root-lattice element in the simple-root basis.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(int size);
  RootVector(std::initializer_list<int> coords);
  explicit RootVector(const std::vector<int>& coords);

  static RootVector simple(int size, int i);

  int size() const { return n_; }
  int operator[](int i) const { return c_[i]; }
  void set(int i, int v) { c_[i] = static_cast<std::int16_t>(v); }
  void add(int i, int v) { c_[i] = static_cast<std::int16_t>(c_[i] + v); }

  bool is_zero() const;
  // Nonzero with all coordinates >= 0.
  bool is_positive() const;
  bool is_negative() const;
  int height() const;
  int height_on(NodeSet nodes) const;
  NodeSet support() const;
  bool leq(const RootVector& other) const;
  std::vector<int> to_vector() const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator-(const RootVector& a);
  friend RootVector operator*(int k, const RootVector& a);

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::array<std::int16_t, kMaxNodes> c_{};
  std::int8_t n_ = 0;
};

struct RootVectorHash {
  std::size_t operator()(const RootVector& r) const { return r.hash(); }
};

}  // namespace borelab
