#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace persuasion {

// Subset of a finite outcome set {0, ..., universe_size - 1}, stored as a
// packed bit vector. Bits at positions >= universe_size are always zero, so
// word-wise equality and hashing are exact.
class EventSet {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  EventSet() = default;
  explicit EventSet(std::size_t universe_size)
      : universe_size_(universe_size), words_(word_count(universe_size), 0) {}

  static EventSet full(std::size_t universe_size);
  // Throws IndexOutOfRange for any index >= universe_size.
  static EventSet from_indices(std::size_t universe_size, std::span<const std::size_t> indices);
  static EventSet from_indices(std::size_t universe_size, std::initializer_list<std::size_t> indices) {
    return from_indices(universe_size, std::span<const std::size_t>(indices.begin(), indices.size()));
  }

  std::size_t universe_size() const noexcept { return universe_size_; }
  std::span<const word_type> words() const noexcept { return words_; }

  bool contains(std::size_t i) const noexcept {
    return i < universe_size_ && ((words_[i / kWordBits] >> (i % kWordBits)) & 1u) != 0;
  }
  void insert(std::size_t i);
  void erase(std::size_t i);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == universe_size_; }
  bool is_subset_of(const EventSet& other) const;
  bool intersects(const EventSet& other) const;

  EventSet complement() const;

  EventSet& operator&=(const EventSet& other);
  EventSet& operator|=(const EventSet& other);
  // Set difference.
  EventSet& operator-=(const EventSet& other);

  friend EventSet operator&(EventSet a, const EventSet& b) { return a &= b; }
  friend EventSet operator|(EventSet a, const EventSet& b) { return a |= b; }
  friend EventSet operator-(EventSet a, const EventSet& b) { return a -= b; }

  friend bool operator==(const EventSet&, const EventSet&) = default;

  // Ascending member indices.
  std::vector<std::size_t> indices() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type bits = words_[w];
      while (bits != 0) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

 private:
  static std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }
  void check_same_universe(const EventSet& other) const;
  void clear_tail() noexcept;

  std::size_t universe_size_ = 0;
  std::vector<word_type> words_;
};

struct EventSetHash {
  std::size_t operator()(const EventSet& s) const noexcept { return s.hash(); }
};

}  // namespace persuasion
