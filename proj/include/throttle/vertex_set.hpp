#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace throttle {

using Vertex = int;
using Mask = std::uint64_t;

/// Largest order any Graph may have; vertex sets are single 64-bit words.
inline constexpr int kMaxOrder = 64;

inline constexpr Mask bit(Vertex v) { return Mask{1} << v; }

inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

/// Next larger integer with the same popcount (Gosper). Enumerates k-subsets
/// in colexicographic order.
inline Mask next_same_popcount(Mask m) {
  Mask c = m & -m;
  Mask r = m + c;
  return (((r ^ m) >> 2) / c) | r;
}

/// Subset of the vertices 0..order-1 of a particular graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int order, Mask bits = 0) : order_(order), bits_(bits) {
    if (order < 0 || order > kMaxOrder)
      throw std::invalid_argument("vertex set order out of range");
    if ((bits & ~full_mask(order)) != 0)
      throw std::out_of_range("vertex set member out of range");
  }
  VertexSet(int order, std::initializer_list<Vertex> members)
      : VertexSet(order, std::vector<Vertex>(members)) {}
  VertexSet(int order, const std::vector<Vertex>& members) : VertexSet(order) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(int order) { return VertexSet(order, full_mask(order)); }

  int order() const { return order_; }
  Mask bits() const { return bits_; }
  int size() const { return popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full_mask(order_); }

  bool contains(Vertex v) const {
    check(v);
    return (bits_ >> v) & 1;
  }
  void insert(Vertex v) {
    check(v);
    bits_ |= bit(v);
  }
  void erase(Vertex v) {
    check(v);
    bits_ &= ~bit(v);
  }

  VertexSet operator|(const VertexSet& o) const { return VertexSet(same(o), bits_ | o.bits_); }
  VertexSet operator&(const VertexSet& o) const { return VertexSet(same(o), bits_ & o.bits_); }
  VertexSet operator-(const VertexSet& o) const { return VertexSet(same(o), bits_ & ~o.bits_); }
  VertexSet complement() const { return VertexSet(order_, full_mask(order_) & ~bits_); }
  bool is_subset_of(const VertexSet& o) const {
    same(o);
    return (bits_ & ~o.bits_) == 0;
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (Mask m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  /// "{0, 3, 5}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (Vertex v : members()) {
      if (!first) s += ", ";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check(Vertex v) const {
    if (v < 0 || v >= order_) throw std::out_of_range("vertex label " + std::to_string(v) + " out of range");
  }
  int same(const VertexSet& o) const {
    if (o.order_ != order_) throw std::invalid_argument("vertex sets belong to graphs of different order");
    return order_;
  }

  int order_ = 0;
  Mask bits_ = 0;
};

}  // namespace throttle
