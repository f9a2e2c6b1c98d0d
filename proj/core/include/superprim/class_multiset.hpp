#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace superprim {

/// Finite multiset of labels with positive multiplicities, kept as a
/// sorted vector so that equality and iteration order are canonical.
template <class Key>
class ClassMultiset {
 public:
  using Entry = std::pair<Key, std::int64_t>;

  ClassMultiset() = default;

  /// Builds from unsorted labels, one unit of multiplicity each.
  static ClassMultiset from_labels(std::vector<Key> labels) {
    std::vector<Key*> order;
    order.reserve(labels.size());
    for (auto& key : labels) order.push_back(&key);
    if (!std::is_sorted(labels.begin(), labels.end())) {
      std::sort(order.begin(), order.end(), [](const Key* a, const Key* b) { return *a < *b; });
    }
    ClassMultiset out;
    for (Key* key : order) {
      if (!out.entries_.empty() && out.entries_.back().first == *key) {
        ++out.entries_.back().second;
      } else {
        out.entries_.emplace_back(std::move(*key), 1);
      }
    }
    return out;
  }

  /// Builds from unsorted (label, multiplicity) pairs; repeated labels add up.
  static ClassMultiset from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    ClassMultiset out;
    for (auto& [key, multiplicity] : entries) {
      if (multiplicity <= 0) continue;
      if (!out.entries_.empty() && out.entries_.back().first == key) {
        out.entries_.back().second += multiplicity;
      } else {
        out.entries_.emplace_back(std::move(key), multiplicity);
      }
    }
    return out;
  }

  void add(const Key& key, std::int64_t multiplicity = 1) {
    if (multiplicity <= 0) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const Entry& e, const Key& k) { return e.first < k; });
    if (it != entries_.end() && it->first == key) {
      it->second += multiplicity;
    } else {
      entries_.emplace(it, key, multiplicity);
    }
  }

  std::int64_t multiplicity(const Key& key) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const Entry& e, const Key& k) { return e.first < k; });
    return it != entries_.end() && it->first == key ? it->second : 0;
  }
  bool contains(const Key& key) const { return multiplicity(key) > 0; }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t distinct() const noexcept { return entries_.size(); }
  /// Sum of multiplicities.
  std::int64_t total() const noexcept {
    std::int64_t sum = 0;
    for (const auto& e : entries_) sum += e.second;
    return sum;
  }

  /// True when no label occurs in both multisets.
  bool disjoint(const ClassMultiset& other) const {
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
      if (a->first < b->first) {
        ++a;
      } else if (b->first < a->first) {
        ++b;
      } else {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const ClassMultiset&, const ClassMultiset&) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace superprim
