#pragma once

#include <cstddef>
#include <vector>

#include "metanil/perm.hpp"

namespace metanil {

/// A finite set of permutations of one degree, kept in canonical order
/// (lexicographic by image sequence) so iteration is deterministic and
/// independent of how the set was produced.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(int degree) : degree_(degree) {}

  /// Sorts, deduplicates and checks degrees.
  static ElementSet from_vector(int degree, std::vector<Perm> elems);

  int degree() const { return degree_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Perm& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<Perm>& items() const { return elems_; }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  /// Binary search under the canonical order.
  bool contains(const Perm& p) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

private:
  int degree_ = 0;
  std::vector<Perm> elems_;
};

}  // namespace metanil
