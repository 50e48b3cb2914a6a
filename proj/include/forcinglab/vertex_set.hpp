#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace forcinglab {

// Graphs in this library never exceed 64 vertices, so a vertex set is one word.
inline constexpr int kMaxVertices = 64;

// Set of vertex indices in [0, 64). Width is implied by context (the owning
// graph's order); operations that need the universe take it explicitly.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t raw) : bits_(raw) {}

  static constexpr VertexSet single(int v) {
    assert(v >= 0 && v < kMaxVertices);
    return VertexSet(std::uint64_t{1} << v);
  }

  // {0, 1, ..., n-1}
  static constexpr VertexSet full(int n) {
    assert(n >= 0 && n <= kMaxVertices);
    return n == kMaxVertices ? VertexSet(~std::uint64_t{0})
                             : VertexSet((std::uint64_t{1} << n) - 1);
  }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  constexpr std::uint64_t raw() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool is_singleton() const { return bits_ != 0 && (bits_ & (bits_ - 1)) == 0; }

  constexpr VertexSet& add(int v) {
    assert(v >= 0 && v < kMaxVertices);
    bits_ |= std::uint64_t{1} << v;
    return *this;
  }
  constexpr VertexSet& remove(int v) {
    bits_ &= ~(std::uint64_t{1} << v);
    return *this;
  }
  constexpr VertexSet with(int v) const { return VertexSet(*this).add(v); }
  constexpr VertexSet without(int v) const { return VertexSet(*this).remove(v); }

  // Lowest member; set must be nonempty.
  constexpr int lowest() const {
    assert(bits_ != 0);
    return std::countr_zero(bits_);
  }

  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet complement_within(int n) const {
    return VertexSet(~bits_) & full(n);
  }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }
  // Numeric order; subset scans use (count, raw) for reproducible enumeration.
  friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

  // Iterates members in increasing order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(iterator o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : *this) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

// Calls fn(VertexSet) for every k-subset of {0..n-1}, ascending bitmask order
// (Gosper's hack). k = 0 yields the empty set once; k > n yields nothing.
template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
  assert(0 <= k && 0 <= n && n <= kMaxVertices);
  if (k > n) return;
  if (k == 0) {
    fn(VertexSet{});
    return;
  }
  const std::uint64_t limit = VertexSet::full(n).raw();
  std::uint64_t m = (std::uint64_t{1} << k) - 1;
  while (true) {
    fn(VertexSet(m));
    if (n == kMaxVertices && k == kMaxVertices) break;  // lone full subset
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    if ((r & ~limit) != 0 || r == 0) break;
    m = r | (((m ^ r) >> 2) / c);
  }
}

}  // namespace forcinglab
