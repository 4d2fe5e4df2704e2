#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace domcrit {

// A subset of vertex ids 0..63 packed into one machine word.  All set
// algebra is O(1); iteration visits members in ascending id order.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  // {0, 1, ..., n-1}
  static constexpr VertexSet all(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool contains_all(VertexSet s) const {
    return (s.bits_ & ~bits_) == 0;
  }
  constexpr bool intersects(VertexSet s) const {
    return (bits_ & s.bits_) != 0;
  }

  constexpr int lowest() const {
    assert(bits_ != 0);
    return std::countr_zero(bits_);
  }

  constexpr VertexSet& add(int v) {
    bits_ |= std::uint64_t{1} << v;
    return *this;
  }
  constexpr VertexSet& remove(int v) {
    bits_ &= ~(std::uint64_t{1} << v);
    return *this;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  // set difference
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  constexpr VertexSet& operator|=(VertexSet b) {
    bits_ |= b.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet b) {
    bits_ &= b.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet b) {
    bits_ &= ~b.bits_;
    return *this;
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : *this) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    out += "}";
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace domcrit
