#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "metanil/group.hpp"

namespace metanil {

/// A subgroup of a parent group, carried as a group of its own (same
/// degree, own chain) plus the generators it was produced from.
struct Subgroup {
  Group parent;
  Group group;
  std::vector<Perm> generator_witness;

  std::uint64_t order() const { return group.order(); }
  bool trivial() const { return group.order() == 1; }
};

Subgroup whole_group_as_subgroup(const Group& g);
Subgroup trivial_subgroup(const Group& g);

/// Equal order plus mutual generator containment.
bool same_subgroup(const Subgroup& a, const Subgroup& b);
/// Every generator of `inner` is a member of `outer`.
bool subgroup_contains(const Subgroup& outer, const Subgroup& inner);
bool is_abelian(const Group& g);

enum class SeriesKind { lower_central, derived };

struct SeriesRecord {
  SeriesKind kind;
  /// terms[0] is the whole group; each term contains the next.
  std::vector<Subgroup> terms;
  /// 1-based index of the first term of the constant tail; the list ends
  /// with that term and its (equal) successor.
  std::size_t stabilized_at = 0;

  std::vector<std::uint64_t> term_orders() const;
};

/// X_k, the set of gamma_k values: X_1 = all elements, X_{i+1} = all
/// [c, g] with c in X_i, g in G.
ElementSet gamma_values(const Group& g, int k, std::uint64_t cap = kDefaultElementCap);
/// X_1 .. X_k_max in one fixed-point run.
std::vector<ElementSet> gamma_value_sets(const Group& g, int k_max,
                                         std::uint64_t cap = kDefaultElementCap);

/// Smallest subgroup of g containing gens; throws Errc::not_member when a
/// generator is outside g.
Subgroup generated_subgroup(const Group& g, const std::vector<Perm>& gens);
Subgroup generated_subgroup(const Group& g, const ElementSet& gens);

/// Smallest normal subgroup of g containing seed.
Subgroup normal_closure(const Group& g, const std::vector<Perm>& seed);

SeriesRecord lower_central_series(const Group& g, std::uint64_t cap = kDefaultElementCap);
/// Independent route: term_{k+1} = [term_k, G] via full element pairs.
SeriesRecord lower_central_series_by_commutators(const Group& g,
                                                 std::uint64_t cap = kDefaultElementCap);
SeriesRecord derived_series(const Group& g, std::uint64_t cap = kDefaultElementCap);

struct Nilpotency {
  bool nilpotent = false;
  /// Nilpotency class; meaningful only when nilpotent (0 for the trivial group).
  int cls = 0;
};
Nilpotency nilpotency(const Group& g, std::uint64_t cap = kDefaultElementCap);
bool is_nilpotent(const Group& g, std::uint64_t cap = kDefaultElementCap);
Nilpotency nilpotency(const Subgroup& h, std::uint64_t cap = kDefaultElementCap);
bool is_nilpotent(const Subgroup& h, std::uint64_t cap = kDefaultElementCap);

Subgroup center(const Group& g, std::uint64_t cap = kDefaultElementCap);
Subgroup centralizer(const Group& g, const Perm& x, std::uint64_t cap = kDefaultElementCap);

/// Subgroup generated by [a, b] over all element pairs of A x B.
/// Quadratic by design; callers stay within the enumeration cap.
Subgroup mutual_commutator(const Group& g, const Subgroup& a, const Subgroup& b,
                           std::uint64_t cap = kDefaultElementCap);

/// Conjugates of N's generators by G's generators stay in N.
bool is_normal(const Group& g, const Subgroup& n);

/// Permutation action of g on the right cosets of a normal subgroup.
/// Cosets are indexed by their canonical (lexicographically least)
/// representative; index 0 is the kernel's own coset.
class QuotientGroup {
public:
  QuotientGroup(Group image, Subgroup kernel, std::vector<Perm> coset_reps,
                std::vector<Perm> kernel_elements);

  const Group& group() const { return image_; }
  const Subgroup& kernel() const { return kernel_; }
  std::uint64_t index() const { return coset_reps_.size(); }
  const std::vector<Perm>& coset_reps() const { return coset_reps_; }

  /// Index of the coset containing x; throws Errc::not_member when x is
  /// not covered by the coset table.
  int coset_of(const Perm& x) const;
  /// Image of a parent element under the coset action (the projection
  /// homomorphism).
  Perm project(const Perm& x) const;

private:
  Perm canonical_rep(const Perm& x) const;

  Group image_;
  Subgroup kernel_;
  std::vector<Perm> coset_reps_;
  std::vector<Perm> kernel_elements_;
  std::unordered_map<Perm, int, PermHash> rep_index_;
};

QuotientGroup quotient(const Group& g, const Subgroup& n,
                       std::uint64_t index_cap = kDefaultIndexCap,
                       std::uint64_t cap = kDefaultElementCap);

}  // namespace metanil
