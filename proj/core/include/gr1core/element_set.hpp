#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gr1core {

/// Element IDs are ordinals assigned in parse order, so the natural numeric
/// order of a set doubles as the deterministic iteration order used by all
/// minimization algorithms.
using ElementId = std::int32_t;

/// An ordered set of element IDs, stored as a sorted unique vector.
class ElementSet {
 public:
  ElementSet() = default;

  ElementSet(std::initializer_list<ElementId> ids) : ids_(ids) { normalize(); }

  explicit ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
    normalize();
  }

  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }

  bool contains(ElementId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  void insert(ElementId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) ids_.insert(it, id);
  }

  void erase(ElementId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it != ids_.end() && *it == id) ids_.erase(it);
  }

  bool subset_of(const ElementSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
  }

  ElementSet unioned(const ElementSet& other) const {
    std::vector<ElementId> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  ElementSet minus(const ElementSet& other) const {
    std::vector<ElementId> out;
    out.reserve(ids_.size());
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  ElementSet minus(ElementId id) const {
    ElementSet out = *this;
    out.erase(id);
    return out;
  }

  ElementSet intersect(const ElementSet& other) const {
    std::vector<ElementId> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<ElementId>& ids() const { return ids_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  static ElementSet from_sorted(std::vector<ElementId> ids) {
    ElementSet s;
    s.ids_ = std::move(ids);
    return s;
  }

  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<ElementId> ids_;
};

}  // namespace gr1core
