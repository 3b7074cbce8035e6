#ifndef HGPART_ADDRESSABLE_PQ_HPP
#define HGPART_ADDRESSABLE_PQ_HPP

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

namespace hgpart {

// Max-priority binary heap with an id -> slot map so that keys can be
// updated or entries deleted by id. Ids must be < capacity.
template <typename Key>
class AddressablePq {
 public:
  explicit AddressablePq(std::size_t capacity) : slot_(capacity, kAbsent) {}

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  bool contains(std::uint32_t id) const { return slot_[id] != kAbsent; }

  Key key_of(std::uint32_t id) const {
    assert(contains(id));
    return heap_[slot_[id]].key;
  }

  void insert(std::uint32_t id, Key key) {
    assert(!contains(id));
    slot_[id] = static_cast<std::uint32_t>(heap_.size());
    heap_.push_back({id, key});
    sift_up(heap_.size() - 1);
  }

  void update(std::uint32_t id, Key key) {
    assert(contains(id));
    const std::size_t s = slot_[id];
    const Key old = heap_[s].key;
    heap_[s].key = key;
    if (old < key) {
      sift_up(s);
    } else if (key < old) {
      sift_down(s);
    }
  }

  void adjust(std::uint32_t id, Key delta) { update(id, key_of(id) + delta); }

  void insert_or_update(std::uint32_t id, Key key) {
    if (contains(id)) {
      update(id, key);
    } else {
      insert(id, key);
    }
  }

  void remove(std::uint32_t id) {
    assert(contains(id));
    const std::size_t s = slot_[id];
    move_entry(heap_.size() - 1, s);
    heap_.pop_back();
    slot_[id] = kAbsent;
    if (s < heap_.size()) {
      sift_up(s);
      sift_down(s);
    }
  }

  void remove_if_contains(std::uint32_t id) {
    if (contains(id)) remove(id);
  }

  std::uint32_t top_id() const { return heap_.front().id; }
  Key top_key() const { return heap_.front().key; }

  std::pair<std::uint32_t, Key> extract_top() {
    const auto out = std::make_pair(heap_.front().id, heap_.front().key);
    remove(heap_.front().id);
    return out;
  }

  void clear() {
    for (const Entry& e : heap_) slot_[e.id] = kAbsent;
    heap_.clear();
  }

 private:
  struct Entry {
    std::uint32_t id;
    Key key;
  };

  static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};

  void move_entry(std::size_t from, std::size_t to) {
    if (from == to) return;
    heap_[to] = heap_[from];
    slot_[heap_[to].id] = static_cast<std::uint32_t>(to);
  }

  void sift_up(std::size_t s) {
    const Entry e = heap_[s];
    while (s > 0) {
      const std::size_t parent = (s - 1) / 2;
      if (!(heap_[parent].key < e.key)) break;
      move_entry(parent, s);
      s = parent;
    }
    heap_[s] = e;
    slot_[e.id] = static_cast<std::uint32_t>(s);
  }

  void sift_down(std::size_t s) {
    const Entry e = heap_[s];
    const std::size_t n = heap_.size();
    for (;;) {
      std::size_t child = 2 * s + 1;
      if (child >= n) break;
      if (child + 1 < n && heap_[child].key < heap_[child + 1].key) ++child;
      if (!(e.key < heap_[child].key)) break;
      move_entry(child, s);
      s = child;
    }
    heap_[s] = e;
    slot_[e.id] = static_cast<std::uint32_t>(s);
  }

  std::vector<Entry> heap_;
  std::vector<std::uint32_t> slot_;
};

}  // namespace hgpart

#endif
