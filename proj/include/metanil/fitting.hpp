#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "metanil/series.hpp"

namespace metanil {

struct PrimeSet {
  std::vector<std::uint64_t> primes;  // sorted, distinct

  bool contains(std::uint64_t p) const;
};

/// Sorted (prime, exponent) pairs by trial division. Group orders divide
/// degree!, so every prime factor is at most the degree and the division
/// loop stays short.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// True when n = p^m for some m >= 1; sets p.
bool is_prime_power(std::uint64_t n, std::uint64_t& p);

PrimeSet prime_set(std::uint64_t n);
PrimeSet prime_set(const Group& g);

/// y is Engel when for every x the chain z <- [z, y] starting at x hits
/// the identity. A revisited value without reaching the identity means
/// the chain never terminates, so a visited set decides exactly.
bool is_engel_element(const Group& g, const Perm& y, std::uint64_t cap = kDefaultElementCap);

/// The Fitting subgroup as the set of Engel elements, verified closed,
/// normal and nilpotent (Errc::internal_inconsistency otherwise).
/// `jobs` parallelizes the per-candidate scan with a deterministic merge.
Subgroup fitting_subgroup(const Group& g, std::uint64_t cap = kDefaultElementCap, int jobs = 1);

/// Independent characterization: x is collected iff the normal closure of
/// {x} is nilpotent. Kept separate from fitting_subgroup as its oracle.
Subgroup fitting_subgroup_by_normal_closure(const Group& g,
                                            std::uint64_t cap = kDefaultElementCap);

/// Elements of the Fitting subgroup of p-power order (its Sylow p-part).
Subgroup o_p(const Group& g, std::uint64_t p, std::uint64_t cap = kDefaultElementCap);
/// Elements of the Fitting subgroup of order coprime to p.
Subgroup o_pprime_of_fitting(const Group& g, std::uint64_t p,
                             std::uint64_t cap = kDefaultElementCap);

bool is_soluble(const Group& g, std::uint64_t cap = kDefaultElementCap);

/// Iterated Fitting quotients until trivial; soluble groups only
/// (Errc::not_soluble otherwise). The trivial group has height 0.
int fitting_height(const Group& g, std::uint64_t cap = kDefaultElementCap);

/// Soluble with Fitting height at most 2. Equivalent to the existence of
/// a normal nilpotent subgroup with nilpotent quotient: the Fitting
/// subgroup is the largest normal nilpotent subgroup, so any witness N
/// lies inside it and G/F is a quotient of the nilpotent G/N.
bool is_metanilpotent(const Group& g, std::uint64_t cap = kDefaultElementCap);

struct FittingData {
  Subgroup fitting;
  std::map<std::uint64_t, Subgroup> per_prime;  // O_p parts, keyed by p in pi(G)
  std::optional<int> height;                    // present iff soluble
  bool metanilpotent = false;
  bool soluble = false;
};
FittingData fitting_data(const Group& g, std::uint64_t cap = kDefaultElementCap);

/// Parts listed top to bottom: condition (3) reads [P_i, P_{i-1}] = P_i.
struct TowerCandidate {
  std::vector<Subgroup> parts;
  std::vector<std::uint64_t> primes;
};

/// (1) each part is a nontrivial p_i-group, (2) P_i normalizes P_j for
/// i < j, (3) [P_i, P_{i-1}] = P_i for i >= 2. Nontriviality keeps the
/// tower sound as a lower bound for Fitting height.
bool verify_tower(const Group& g, const TowerCandidate& t, std::uint64_t cap = kDefaultElementCap);

/// K = elements of order coprime to p; true iff |K| equals the p'-part of
/// |G| and K is product-closed (then K is the normal p-complement).
bool has_normal_p_complement(const Group& g, std::uint64_t p,
                             std::uint64_t cap = kDefaultElementCap);

}  // namespace metanil
