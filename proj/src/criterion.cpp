#include "metanil/criterion.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

#include "metanil/errors.hpp"

namespace metanil {

namespace {

struct PairViolation {
  std::size_t i;
  std::size_t j;

  bool operator<(const PairViolation& o) const { return i < o.i || (i == o.i && j < o.j); }
};

struct ScanResult {
  std::optional<PairViolation> best;
  std::uint64_t checked = 0;
};

/// Row-major scan of [lo, hi) x [0, n); the first violation found in this
/// order is the least one of the block.
ScanResult scan_rows(const ElementSet& x, const std::vector<std::uint64_t>& orders,
                     std::size_t lo, std::size_t hi, ScanMode mode,
                     const std::atomic<bool>* stop) {
  ScanResult r;
  const std::size_t n = x.size();
  for (std::size_t i = lo; i < hi; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::gcd(orders[i], orders[j]) != 1) continue;
      if (mode == ScanMode::fast && stop && stop->load(std::memory_order_relaxed) && !r.best)
        return r;
      ++r.checked;
      if (element_order(compose(x[i], x[j])) != orders[i] * orders[j]) {
        if (!r.best) r.best = PairViolation{i, j};
        if (mode == ScanMode::fast) return r;
      }
    }
  }
  return r;
}

bool group_is_perfect(const Group& g, std::uint64_t cap) {
  return generated_subgroup(g, gamma_values(g, 2, cap)).order() == g.order();
}

}  // namespace

ConditionReport check_condition(const Group& g, int k, ScanMode mode, int jobs,
                                std::uint64_t cap) {
  const auto t0 = std::chrono::steady_clock::now();
  ElementSet x = gamma_values(g, k, cap);
  const std::size_t n = x.size();
  std::vector<std::uint64_t> orders(n);
  for (std::size_t i = 0; i < n; ++i) orders[i] = element_order(x[i]);

  ConditionReport rep;
  rep.k = k;
  rep.x_size = n;

  std::optional<PairViolation> best;
  if (jobs <= 1 || n < 64) {
    ScanResult r = scan_rows(x, orders, 0, n, mode, nullptr);
    best = r.best;
    rep.pairs_checked = r.checked;
  } else {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<ScanResult> results(workers);
    std::atomic<bool> stop{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        std::size_t lo = n * w / workers;
        std::size_t hi = n * (w + 1) / workers;
        results[w] = scan_rows(x, orders, lo, hi, mode, &stop);
        if (results[w].best && mode == ScanMode::fast)
          stop.store(true, std::memory_order_relaxed);
      });
    }
    for (auto& t : pool) t.join();
    for (const ScanResult& r : results) {
      rep.pairs_checked += r.checked;
      if (r.best && (!best || *r.best < *best)) best = r.best;
    }
  }

  if (best) {
    rep.holds = false;
    Witness w;
    w.a = x[best->i];
    w.b = x[best->j];
    w.order_a = orders[best->i];
    w.order_b = orders[best->j];
    w.order_ab = element_order(compose(w.a, w.b));
    rep.witness = std::move(w);
  }
  rep.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return rep;
}

TheoremVerdict verify_theorem(const Group& g, int k, ScanMode mode, int jobs, std::uint64_t cap) {
  ConditionReport cond = check_condition(g, k, mode, jobs, cap);
  Subgroup gamma_k = generated_subgroup(g, gamma_values(g, k, cap));
  Nilpotency nil = nilpotency(gamma_k.group, cap);
  TheoremVerdict v;
  v.k = k;
  v.condition_holds = cond.holds;
  v.gamma_k_nilpotent = nil.nilpotent;
  v.consistent = (cond.holds == nil.nilpotent);
  v.gamma_k_order = gamma_k.order();
  return v;
}

TheoremVerdict baumslag_wiegold(const Group& g, ScanMode mode, int jobs, std::uint64_t cap) {
  return verify_theorem(g, 1, mode, jobs, cap);
}

std::optional<int> minimal_k(const Group& g, std::optional<int> k_max, std::uint64_t cap) {
  SeriesRecord lcs = lower_central_series(g, cap);
  const int limit = k_max ? *k_max : static_cast<int>(lcs.stabilized_at) + 1;
  for (int k = 1; k <= limit; ++k) {
    const Subgroup& term = k <= static_cast<int>(lcs.terms.size())
                               ? lcs.terms[static_cast<std::size_t>(k - 1)]
                               : lcs.terms.back();
    if (is_nilpotent(term.group, cap)) return k;
  }
  return std::nullopt;
}

CorollaryVerdict verify_corollary(const Group& g, std::uint64_t cap) {
  CorollaryVerdict v;
  v.metanilpotent = is_metanilpotent(g, cap);
  v.min_k = minimal_k(g, std::nullopt, cap);
  v.consistent = (v.metanilpotent == v.min_k.has_value());
  return v;
}

std::vector<LemmaBbbViolation> check_lemma_bbb(const Group& g, int k, std::uint64_t cap) {
  if (!check_condition(g, k, ScanMode::fast, 1, cap).holds)
    throw Error(Errc::hypothesis_not_met,
                "the coprime-pair condition fails at k = " + std::to_string(k));
  ElementSet x_set = gamma_values(g, k, cap);
  std::vector<LemmaBbbViolation> violations;
  for (const Perm& y : g.elements(cap)) {
    const std::uint64_t oy = element_order(y);
    std::vector<Perm> powers;
    powers.reserve(static_cast<std::size_t>(oy));
    Perm acc(g.degree());
    for (std::uint64_t e = 0; e < oy; ++e) {
      powers.push_back(acc);
      acc = compose(acc, y);
    }
    std::sort(powers.begin(), powers.end());
    for (const Perm& x : x_set) {
      if (std::gcd(element_order(x), oy) != 1) continue;
      if (!std::binary_search(powers.begin(), powers.end(), conjugate(y, x)))
        continue;  // x does not normalize <y>
      if (!commutator(y, x).is_identity()) violations.push_back({x, y});
    }
  }
  return violations;
}

bool check_lemma_gamma(const Group& g, int k, std::uint64_t q, std::uint64_t cap) {
  if (!is_prime(q)) throw Error(Errc::unsupported_parameter, std::to_string(q) + " is not prime");
  if (!prime_set(g).contains(q))
    throw Error(Errc::unsupported_parameter,
                std::to_string(q) + " does not divide the group order");
  if (!group_is_perfect(g, cap)) throw Error(Errc::not_perfect, "the group is not perfect");
  std::vector<Perm> gens;
  for (const Perm& x : gamma_values(g, k, cap)) {
    std::uint64_t p = 0;
    if (is_prime_power(element_order(x), p) && p != q) gens.push_back(x);
  }
  return generated_subgroup(g, gens).order() == g.order();
}

std::vector<LemmaMetaViolation> check_lemma_meta(const Group& g, std::uint64_t cap) {
  if (!is_metanilpotent(g, cap))
    throw Error(Errc::not_metanilpotent, "the group is not metanilpotent");
  Subgroup fitting = fitting_subgroup(g, cap);
  std::vector<LemmaMetaViolation> violations;
  for (std::uint64_t p : prime_set(g).primes) {
    Subgroup opprime = o_pprime_of_fitting(g, p, cap);
    for (const Perm& x : g.elements(cap)) {
      std::uint64_t base = 0;
      if (!is_prime_power(element_order(x), base) || base != p) continue;
      Subgroup cyclic = generated_subgroup(g, std::vector<Perm>{x});
      if (!mutual_commutator(g, opprime, cyclic, cap).trivial()) continue;
      if (!fitting.group.contains(x)) violations.push_back({p, x});
    }
  }
  return violations;
}

bool check_lemma_solu(const Group& g, int k, std::uint64_t cap) {
  if (!is_soluble(g, cap)) throw Error(Errc::not_soluble, "the group is not soluble");
  if (!check_condition(g, k, ScanMode::fast, 1, cap).holds)
    throw Error(Errc::hypothesis_not_met,
                "the coprime-pair condition fails at k = " + std::to_string(k));
  return is_nilpotent(generated_subgroup(g, gamma_values(g, k, cap)).group, cap);
}

CoprimeActionReport check_coprime_action(const Group& g, const Subgroup& n, const Perm& a,
                                         std::uint64_t cap) {
  if (a.degree() != g.degree()) throw Error(Errc::degree_mismatch, "acting element degree");
  if (!g.contains(a)) throw Error(Errc::not_member, "acting element is not in the ambient group");
  if (std::gcd(element_order(a), n.order()) != 1)
    throw Error(Errc::not_coprime, "the acting element order shares a prime with |N|");
  for (const Perm& gen : n.group.spec().generators)
    if (!n.group.contains(conjugate(gen, a)))
      throw Error(Errc::not_normal, "the acting element does not normalize N");

  const ElementSet& n_els = n.group.elements(cap);

  auto bracket_with_a = [&](const ElementSet& members) {
    std::unordered_set<Perm, PermHash> values;
    for (const Perm& m : members) values.insert(commutator(m, a));
    std::vector<Perm> gens(values.begin(), values.end());
    std::sort(gens.begin(), gens.end());
    return generated_subgroup(g, gens);
  };

  CoprimeActionReport rep;
  Subgroup na = bracket_with_a(n_els);
  Subgroup naa = bracket_with_a(na.group.elements(cap));
  rep.commutator_stable = same_subgroup(na, naa);

  std::vector<Perm> fixed_members;
  for (const Perm& m : n_els)
    if (commutator(m, a).is_identity()) fixed_members.push_back(m);
  Subgroup centralizer_in_n = generated_subgroup(g, fixed_members);

  if (is_abelian(n.group)) {
    bool orders_multiply = na.order() * centralizer_in_n.order() == n.order();
    std::size_t common = 0;
    for (const Perm& m : na.group.elements(cap))
      if (centralizer_in_n.group.contains(m)) ++common;
    rep.abelian_decomposition = orders_multiply && common == 1;
  }

  bool fixed_points_match = true;
  for (const Subgroup& m : lower_central_series(n.group, cap).terms) {
    QuotientGroup q = quotient(n.group, m, kDefaultIndexCap, cap);
    std::set<int> fixed;
    for (std::size_t i = 0; i < q.coset_reps().size(); ++i)
      if (q.coset_of(conjugate(q.coset_reps()[i], a)) == static_cast<int>(i))
        fixed.insert(static_cast<int>(i));
    std::set<int> image;
    for (const Perm& c : centralizer_in_n.group.elements(cap)) image.insert(q.coset_of(c));
    if (fixed != image) {
      fixed_points_match = false;
      break;
    }
  }
  rep.quotient_centralizer_match = fixed_points_match;
  return rep;
}

}  // namespace metanil
