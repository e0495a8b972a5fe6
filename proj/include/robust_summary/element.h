// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROBUST_SUMMARY_ELEMENT_H_
#define ROBUST_SUMMARY_ELEMENT_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace robust_summary {

// Opaque identifier of a ground-set element.
enum class ElementId : std::uint32_t {};

constexpr std::uint32_t Index(ElementId e) {
  return static_cast<std::uint32_t>(e);
}

inline std::ostream& operator<<(std::ostream& os, ElementId e) {
  return os << Index(e);
}

using SetValue = double;

// Finite set of element ids kept as a sorted, duplicate-free vector so that
// iteration order (and therefore every algorithm built on it) is
// deterministic.
class ElementSet {
 public:
  using const_iterator = std::vector<ElementId>::const_iterator;

  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids)
      : ElementSet(std::vector<ElementId>(ids)) {}
  explicit ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }
  explicit ElementSet(std::span<const ElementId> ids)
      : ElementSet(std::vector<ElementId>(ids.begin(), ids.end())) {}

  // Returns true if `e` was not already present.
  bool Insert(ElementId e) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
    if (it != ids_.end() && *it == e) return false;
    ids_.insert(it, e);
    return true;
  }
  bool Erase(ElementId e) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
    if (it == ids_.end() || *it != e) return false;
    ids_.erase(it);
    return true;
  }
  bool Contains(ElementId e) const {
    return std::binary_search(ids_.begin(), ids_.end(), e);
  }
  bool IsSubsetOf(const ElementSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
  }

  ElementSet Union(const ElementSet& other) const {
    ElementSet out;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(out.ids_));
    return out;
  }
  ElementSet Difference(const ElementSet& other) const {
    ElementSet out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out.ids_));
    return out;
  }
  ElementSet Intersection(const ElementSet& other) const {
    ElementSet out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(out.ids_));
    return out;
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  std::span<const ElementId> ids() const { return ids_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<ElementId> ids_;
};

inline std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  os << '{';
  bool first = true;
  for (ElementId e : s) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  return os << '}';
}

// Convenience for building id lists from integers.
inline std::vector<ElementId> Ids(std::initializer_list<std::uint32_t> raw) {
  std::vector<ElementId> out;
  out.reserve(raw.size());
  for (auto r : raw) out.push_back(ElementId{r});
  return out;
}

}  // namespace robust_summary

#endif  // ROBUST_SUMMARY_ELEMENT_H_
