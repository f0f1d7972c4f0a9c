#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace projtree {

/// Fixed-universe bit set over the arcs of a digraph. Index j stands for the
/// (j+1)-th arc in the canonical edge order, so a set doubles as the 0/1
/// incidence vector of an arc subset.
class ArcSet {
 public:
  ArcSet() = default;

  explicit ArcSet(std::size_t universe_size)
      : size_(universe_size), words_((universe_size + 63) / 64, 0) {}

  static ArcSet of(std::size_t universe_size,
                   std::initializer_list<std::size_t> indices) {
    ArcSet s(universe_size);
    for (std::size_t i : indices) s.set(i);
    return s;
  }

  /// Set of the first k indices (0..k-1).
  static ArcSet first(std::size_t universe_size, std::size_t k) {
    if (k > universe_size) throw std::out_of_range("ArcSet::first: k exceeds universe");
    ArcSet s(universe_size);
    for (std::size_t i = 0; i < k; ++i) s.set(i);
    return s;
  }

  std::size_t universe_size() const { return size_; }

  bool test(std::size_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  ArcSet& set(std::size_t i) {
    check_index(i);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    return *this;
  }

  ArcSet& reset(std::size_t i) {
    check_index(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    return *this;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  bool is_subset_of(const ArcSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const ArcSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ArcSet operator&(const ArcSet& other) const {
    check_universe(other);
    ArcSet r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] & other.words_[i];
    return r;
  }

  ArcSet operator|(const ArcSet& other) const {
    check_universe(other);
    ArcSet r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] | other.words_[i];
    return r;
  }

  /// Elements of this set that are not in `other`.
  ArcSet minus(const ArcSet& other) const {
    check_universe(other);
    ArcSet r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] & ~other.words_[i];
    return r;
  }

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

  /// Member indices in ascending order.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= size_) throw std::out_of_range("ArcSet: index out of range");
  }
  void check_universe(const ArcSet& other) const {
    if (size_ != other.size_)
      throw std::invalid_argument("ArcSet: universe size mismatch");
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;

  friend bool index_lexicographic_less(const ArcSet& a, const ArcSet& b);
  friend struct ArcSetHash;
};

/// Orders sets by their increasing index sequences, compared element by
/// element with a missing element ranking before any present one. This is the
/// order used to number edge subsets within a level and in printed output.
inline bool index_lexicographic_less(const ArcSet& a, const ArcSet& b) {
  if (a.size_ != b.size_)
    throw std::invalid_argument("ArcSet: universe size mismatch");
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (!diff) continue;
    const int bit = std::countr_zero(diff);
    const bool in_a = (a.words_[w] >> bit) & 1u;
    // All indices below the first differing one are shared. The set owning
    // that index compares smaller unless it is a strict superset tail-wise.
    const ArcSet& other = in_a ? b : a;
    std::uint64_t rest = other.words_[w] & ~((std::uint64_t{2} << bit) - 1);
    bool other_has_later = rest != 0;
    for (std::size_t w2 = w + 1; !other_has_later && w2 < a.words_.size(); ++w2)
      other_has_later = other.words_[w2] != 0;
    return in_a ? other_has_later : !other_has_later;
  }
  return false;
}

struct ArcSetHash {
  std::size_t operator()(const ArcSet& s) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ s.size_;
    for (std::uint64_t w : s.words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace projtree
