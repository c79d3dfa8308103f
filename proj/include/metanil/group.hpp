#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "metanil/element_set.hpp"
#include "metanil/perm.hpp"

namespace metanil {

/// Element enumeration refuses groups larger than this unless the caller
/// overrides the cap; value-set and pair scans are quadratic in it.
inline constexpr std::uint64_t kDefaultElementCap = 100000;

/// Coset actions refuse subgroup indexes larger than this.
inline constexpr std::uint64_t kDefaultIndexCap = 10000;

struct GroupSpec {
  std::string name;
  int degree = 0;
  std::vector<Perm> generators;

  /// Throws Errc::invalid_spec on empty generator lists, degree
  /// mismatches or non-positive degree.
  void validate() const;
};

struct ChainLevel {
  int base_point = -1;
  /// Strong generators fixing all earlier base points.
  std::vector<Perm> generators;
  /// Orbit of base_point under the level generators, in BFS discovery order.
  std::vector<int> orbit;
  /// transversal[p], when present, maps base_point to p.
  std::vector<std::optional<Perm>> transversal;
};

/// Base and strong generating set built by deterministic Schreier-Sims:
/// base points are the smallest points moved at each level, orbits are
/// BFS-ordered, so identical input yields an identical chain.
class StabilizerChain {
public:
  static StabilizerChain build(int degree, const std::vector<Perm>& generators);

  int degree() const { return degree_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<int> base() const;
  std::uint64_t order() const { return order_; }

  struct Sift {
    Perm residue;
    std::size_t level;  // level where the strip dropped out; levels().size() if it ran through
  };
  Sift sift(Perm p, std::size_t from_level = 0) const;
  bool contains(const Perm& p) const;

  /// All elements as transversal products; throws Errc::too_large when
  /// the order exceeds `cap`.
  std::vector<Perm> enumerate(std::uint64_t cap) const;

private:
  void recompute_orbit(std::size_t level);
  static int min_moved_point(const Perm& p);

  int degree_ = 0;
  std::vector<ChainLevel> levels_;
  std::uint64_t order_ = 1;
};

/// An immutable permutation group: generators plus a stabilizer-chain
/// certificate giving order, membership and element enumeration.
/// Copies share state and are safe to use across threads.
class Group {
public:
  static Group build(GroupSpec spec);

  const GroupSpec& spec() const { return state_->spec; }
  const std::string& name() const { return state_->spec.name; }
  int degree() const { return state_->spec.degree; }
  const StabilizerChain& chain() const { return state_->chain; }
  std::uint64_t order() const { return state_->chain.order(); }
  bool trivial() const { return order() == 1; }

  /// Membership via sifting. Throws Errc::degree_mismatch.
  bool contains(const Perm& p) const;

  /// Canonically ordered elements, computed once and cached.
  /// Throws Errc::too_large when order() > cap.
  const ElementSet& elements(std::uint64_t cap = kDefaultElementCap) const;

private:
  struct State {
    GroupSpec spec;
    StabilizerChain chain;
    mutable std::mutex cache_mutex;
    mutable std::optional<ElementSet> element_cache;
  };
  std::shared_ptr<const State> state_;
};

/// Spec-named free wrappers.
Group build_group(GroupSpec spec);
bool contains(const Group& g, const Perm& p);
const ElementSet& elements(const Group& g, std::uint64_t cap = kDefaultElementCap);

}  // namespace metanil
