#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace fvs {

// Fixed-size bit row over vertex ids 0..n-1. Used for adjacency rows and for
// "alive" masks of residual graphs.
class VertexBits {
 public:
  VertexBits() = default;
  explicit VertexBits(std::size_t n, bool fill = false)
      : n_(n), words_((n + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(std::size_t v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::size_t v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  VertexBits& operator&=(const VertexBits& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexBits& operator|=(const VertexBits& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexBits& subtract(const VertexBits& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexBits operator&(VertexBits a, const VertexBits& b) noexcept { return a &= b; }
  friend VertexBits operator|(VertexBits a, const VertexBits& b) noexcept { return a |= b; }
  friend bool operator==(const VertexBits&, const VertexBits&) = default;

  std::size_t count_and(const VertexBits& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  // Calls f on every index set in both rows, ascending.
  template <class F>
  void for_each_common(const VertexBits& o, F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i] & o.words_[i];
      while (w) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  // Clears every bit that is also set in `row`, calling f on each cleared
  // index in ascending order.
  template <class F>
  void take(const VertexBits& row, F&& f) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i] & row.words_[i];
      words_[i] &= ~w;
      while (w) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  // Smallest index set in all three rows.
  static std::optional<std::size_t> first_common(const VertexBits& a, const VertexBits& b,
                                                 const VertexBits& c) noexcept {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const std::uint64_t w = a.words_[i] & b.words_[i] & c.words_[i];
      if (w) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
    }
    return std::nullopt;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  void trim() noexcept {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace fvs
