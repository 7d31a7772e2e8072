#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mlat {

/// Canonical element index inside a finite lattice.
using Element = std::uint32_t;

/// Hard cap on carrier size; element sets are single-word bitsets.
inline constexpr std::size_t kMaxElements = 64;

/// Subset of a lattice carrier, stored as a 64-bit mask.
class ElementSet {
 public:
  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t bits) : bits_(bits) {}
    Element operator*() const { return static_cast<Element>(std::countr_zero(bits_)); }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t bits_ = 0;
  };

  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<Element> elems) {
    for (Element e : elems) insert(e);
  }

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr ElementSet all(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElementSet single(Element e) { return from_bits(std::uint64_t{1} << e); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }
  /// Complement relative to a carrier of size n.
  constexpr ElementSet complement(std::size_t n) const { return from_bits(all(n).bits_ & ~bits_); }
  /// Least member; undefined on the empty set.
  Element first() const { return static_cast<Element>(std::countr_zero(bits_)); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return from_bits(a.bits_ & ~b.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace mlat
