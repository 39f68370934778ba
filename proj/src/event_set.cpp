#include "persuasion/event_set.hpp"

#include <string>

#include "persuasion/error.hpp"

namespace persuasion {

EventSet EventSet::full(std::size_t universe_size) {
  EventSet s(universe_size);
  for (auto& w : s.words_) w = ~word_type{0};
  s.clear_tail();
  return s;
}

EventSet EventSet::from_indices(std::size_t universe_size, std::span<const std::size_t> indices) {
  EventSet s(universe_size);
  for (std::size_t i : indices) s.insert(i);
  return s;
}

void EventSet::insert(std::size_t i) {
  if (i >= universe_size_) {
    throw Error(Errc::index_out_of_range, "outcome index " + std::to_string(i) +
                                              " outside universe of size " +
                                              std::to_string(universe_size_));
  }
  words_[i / kWordBits] |= word_type{1} << (i % kWordBits);
}

void EventSet::erase(std::size_t i) {
  if (i < universe_size_) words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits));
}

std::size_t EventSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool EventSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool EventSet::is_subset_of(const EventSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool EventSet::intersects(const EventSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

EventSet EventSet::complement() const {
  EventSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.clear_tail();
  return s;
}

EventSet& EventSet::operator&=(const EventSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

EventSet& EventSet::operator|=(const EventSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

EventSet& EventSet::operator-=(const EventSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<std::size_t> EventSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t EventSet::hash() const noexcept {
  // FNV-1a over words, seeded with the universe size.
  std::uint64_t h = 1469598103934665603ull ^ universe_size_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

void EventSet::check_same_universe(const EventSet& other) const {
  if (universe_size_ != other.universe_size_) {
    throw Error(Errc::universe_mismatch, "event universes differ: " + std::to_string(universe_size_) +
                                             " vs " + std::to_string(other.universe_size_));
  }
}

void EventSet::clear_tail() noexcept {
  const std::size_t rem = universe_size_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (word_type{1} << rem) - 1;
}

}  // namespace persuasion
