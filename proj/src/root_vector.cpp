#include "borelab/root_vector.hpp"

#include <stdexcept>

namespace borelab {

RootVector::RootVector(int size) : n_(static_cast<std::int8_t>(size)) {
  if (size < 0 || size > kMaxNodes) throw std::invalid_argument("root vector size out of range");
}

RootVector::RootVector(std::initializer_list<int> coords) : RootVector(static_cast<int>(coords.size())) {
  int i = 0;
  for (int v : coords) c_[i++] = static_cast<std::int16_t>(v);
}

RootVector::RootVector(const std::vector<int>& coords) : RootVector(static_cast<int>(coords.size())) {
  for (int i = 0; i < n_; ++i) c_[i] = static_cast<std::int16_t>(coords[i]);
}

RootVector RootVector::simple(int size, int i) {
  RootVector r(size);
  r.c_[i] = 1;
  return r;
}

bool RootVector::is_zero() const {
  for (int i = 0; i < n_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool RootVector::is_positive() const {
  bool nonzero = false;
  for (int i = 0; i < n_; ++i) {
    if (c_[i] < 0) return false;
    if (c_[i] > 0) nonzero = true;
  }
  return nonzero;
}

bool RootVector::is_negative() const { return (-*this).is_positive(); }

int RootVector::height() const {
  int h = 0;
  for (int i = 0; i < n_; ++i) h += c_[i];
  return h;
}

int RootVector::height_on(NodeSet nodes) const {
  int h = 0;
  for (int i = 0; i < n_; ++i)
    if (nodes.contains(i)) h += c_[i];
  return h;
}

NodeSet RootVector::support() const {
  NodeSet s;
  for (int i = 0; i < n_; ++i)
    if (c_[i] != 0) s.insert(i);
  return s;
}

bool RootVector::leq(const RootVector& other) const {
  for (int i = 0; i < n_; ++i)
    if (c_[i] > other.c_[i]) return false;
  return true;
}

std::vector<int> RootVector::to_vector() const { return {c_.begin(), c_.begin() + n_}; }

RootVector& RootVector::operator+=(const RootVector& o) {
  for (int i = 0; i < n_; ++i) c_[i] = static_cast<std::int16_t>(c_[i] + o.c_[i]);
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  for (int i = 0; i < n_; ++i) c_[i] = static_cast<std::int16_t>(c_[i] - o.c_[i]);
  return *this;
}

RootVector operator-(const RootVector& a) {
  RootVector r(a.n_);
  for (int i = 0; i < a.n_; ++i) r.c_[i] = static_cast<std::int16_t>(-a.c_[i]);
  return r;
}

RootVector operator*(int k, const RootVector& a) {
  RootVector r(a.n_);
  for (int i = 0; i < a.n_; ++i) r.c_[i] = static_cast<std::int16_t>(k * a.c_[i]);
  return r;
}

std::size_t RootVector::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < n_; ++i) {
    h ^= static_cast<std::uint16_t>(c_[i]);
    h *= 1099511628211ull;
  }
  return h;
}

std::string RootVector::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

}  // namespace borelab
