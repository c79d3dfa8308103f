#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "metanil/fitting.hpp"
#include "metanil/series.hpp"

namespace metanil {

/// fast short-circuits on the first violating pair; canonical scans every
/// coprime pair and reports the lexicographically least one, so canonical
/// reports are identical across runs and worker counts.
enum class ScanMode { fast, canonical };

struct Witness {
  Perm a;
  Perm b;
  std::uint64_t order_a = 0;
  std::uint64_t order_b = 0;
  std::uint64_t order_ab = 0;
};

/// Verdict of the coprime-pair condition on the gamma_k value set X_k:
/// |ab| = |a||b| for all a, b in X_k of coprime orders.
struct ConditionReport {
  int k = 0;
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
  std::uint64_t pairs_checked = 0;
  std::size_t x_size = 0;
  std::chrono::milliseconds elapsed{0};
};

ConditionReport check_condition(const Group& g, int k, ScanMode mode = ScanMode::canonical,
                                int jobs = 1, std::uint64_t cap = kDefaultElementCap);

/// The two sides of the equivalence, computed independently: the pair
/// condition on X_k, and nilpotency of the subgroup X_k generates.
/// `consistent` must be true for every finite group; false indicates an
/// implementation bug, never a counterexample.
struct TheoremVerdict {
  int k = 0;
  bool condition_holds = false;
  bool gamma_k_nilpotent = false;
  bool consistent = false;
  std::uint64_t gamma_k_order = 0;
};

TheoremVerdict verify_theorem(const Group& g, int k, ScanMode mode = ScanMode::canonical,
                              int jobs = 1, std::uint64_t cap = kDefaultElementCap);

/// The k = 1 instance: the condition over all element pairs versus
/// nilpotency of the group itself.
TheoremVerdict baumslag_wiegold(const Group& g, ScanMode mode = ScanMode::canonical, int jobs = 1,
                                std::uint64_t cap = kDefaultElementCap);

/// Least k <= k_max with gamma_k(G) nilpotent. k_max defaults to the
/// lower-central stabilization index + 1: the series is constant beyond
/// it, so larger k cannot change the answer.
std::optional<int> minimal_k(const Group& g, std::optional<int> k_max = std::nullopt,
                             std::uint64_t cap = kDefaultElementCap);

struct CorollaryVerdict {
  bool metanilpotent = false;
  std::optional<int> min_k;
  bool consistent = false;  // metanilpotent == min_k.has_value()
};

CorollaryVerdict verify_corollary(const Group& g, std::uint64_t cap = kDefaultElementCap);

/// For x in X_k and cyclic N = <y> normalized by x with (|N|, |x|) = 1,
/// [y, x] must be the identity. Requires the condition to hold at (G, k)
/// (Errc::hypothesis_not_met otherwise); returns violations, expected empty.
struct LemmaBbbViolation {
  Perm x;
  Perm y;
};
std::vector<LemmaBbbViolation> check_lemma_bbb(const Group& g, int k,
                                               std::uint64_t cap = kDefaultElementCap);

/// Perfect G only (Errc::not_perfect): G is generated by the gamma_k
/// values of prime-power order avoiding q.
bool check_lemma_gamma(const Group& g, int k, std::uint64_t q,
                       std::uint64_t cap = kDefaultElementCap);

/// Metanilpotent G only (Errc::not_metanilpotent): every p-element
/// centralizing O_{p'}(F(G)) lies in F(G). Returns violations, expected
/// empty.
struct LemmaMetaViolation {
  std::uint64_t p = 0;
  Perm x;
};
std::vector<LemmaMetaViolation> check_lemma_meta(const Group& g,
                                                 std::uint64_t cap = kDefaultElementCap);

/// Soluble G with the condition holding at k: gamma_k(G) is nilpotent.
bool check_lemma_solu(const Group& g, int k, std::uint64_t cap = kDefaultElementCap);

/// Coprime-action identities for a acting on N by conjugation:
///   (i)  [N, a] = [[N, a], a] as subgroups,
///   (ii) N = [N, a] x C_N(a) when N is abelian,
///   (iii) fixed points in N/M equal the image of C_N(a), for M running
///         over the lower-central terms of N (canonical a-invariant
///         normal subgroups).
struct CoprimeActionReport {
  bool commutator_stable = false;
  std::optional<bool> abelian_decomposition;  // present iff N abelian
  bool quotient_centralizer_match = false;

  bool all_hold() const {
    return commutator_stable && quotient_centralizer_match &&
           (!abelian_decomposition || *abelian_decomposition);
  }
};

CoprimeActionReport check_coprime_action(const Group& g, const Subgroup& n, const Perm& a,
                                         std::uint64_t cap = kDefaultElementCap);

}  // namespace metanil
