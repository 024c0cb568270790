#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace gminor {

// Fixed-universe bitset over vertex labels [0, size).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int universe() const { return size_; }

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Smallest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        f(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gminor
