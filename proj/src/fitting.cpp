#include "metanil/fitting.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "metanil/errors.hpp"

namespace metanil {

namespace {

Subgroup subgroup_from_members(const Group& g, std::vector<Perm> members) {
  std::vector<Perm> gens;
  for (Perm& m : members)
    if (!m.is_identity()) gens.push_back(std::move(m));
  if (gens.empty()) gens.push_back(Perm(g.degree()));
  GroupSpec spec{"", g.degree(), gens};
  return Subgroup{g, Group::build(std::move(spec)), std::move(gens)};
}

bool engel_chain_terminates(const Perm& x, const Perm& y) {
  std::unordered_set<Perm, PermHash> seen;
  Perm z = x;
  while (!z.is_identity()) {
    if (!seen.insert(z).second) return false;
    z = commutator(z, y);
  }
  return true;
}

}  // namespace

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes.begin(), primes.end(), p);
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

bool is_prime_power(std::uint64_t n, std::uint64_t& p) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  p = f[0].first;
  return true;
}

PrimeSet prime_set(std::uint64_t n) {
  PrimeSet s;
  for (auto& [p, e] : factorize(n)) s.primes.push_back(p);
  return s;
}

PrimeSet prime_set(const Group& g) { return prime_set(g.order()); }

bool is_engel_element(const Group& g, const Perm& y, std::uint64_t cap) {
  if (!g.contains(y)) throw Error(Errc::not_member, "Engel candidate is not in the group");
  for (const Perm& x : g.elements(cap))
    if (!engel_chain_terminates(x, y)) return false;
  return true;
}

Subgroup fitting_subgroup(const Group& g, std::uint64_t cap, int jobs) {
  const ElementSet& els = g.elements(cap);
  const std::size_t n = els.size();
  std::vector<char> engel(n, 0);

  auto scan = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      bool ok = true;
      for (const Perm& x : els)
        if (!engel_chain_terminates(x, els[i])) {
          ok = false;
          break;
        }
      engel[i] = ok ? 1 : 0;
    }
  };

  if (jobs <= 1 || n < 2) {
    scan(0, n);
  } else {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t lo = n * w / workers;
      std::size_t hi = n * (w + 1) / workers;
      pool.emplace_back(scan, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  std::vector<Perm> members;
  for (std::size_t i = 0; i < n; ++i)
    if (engel[i]) members.push_back(els[i]);
  const std::size_t engel_count = members.size();

  Subgroup f = subgroup_from_members(g, std::move(members));
  if (f.order() != engel_count)
    throw Error(Errc::internal_inconsistency, "Engel set is not closed under the group operation");
  if (!is_normal(g, f))
    throw Error(Errc::internal_inconsistency, "Engel set is not normal");
  if (!is_nilpotent(f.group, cap))
    throw Error(Errc::internal_inconsistency, "Engel set is not nilpotent");
  return f;
}

Subgroup fitting_subgroup_by_normal_closure(const Group& g, std::uint64_t cap) {
  std::vector<Perm> members;
  for (const Perm& x : g.elements(cap)) {
    Subgroup closure = normal_closure(g, {x});
    if (is_nilpotent(closure.group, cap)) members.push_back(x);
  }
  return subgroup_from_members(g, std::move(members));
}

Subgroup o_p(const Group& g, std::uint64_t p, std::uint64_t cap) {
  if (!is_prime(p)) throw Error(Errc::unsupported_parameter, std::to_string(p) + " is not prime");
  Subgroup f = fitting_subgroup(g, cap);
  std::vector<Perm> members;
  for (const Perm& x : f.group.elements(cap)) {
    std::uint64_t order = element_order(x);
    std::uint64_t base = 0;
    if (order == 1 || (is_prime_power(order, base) && base == p)) members.push_back(x);
  }
  return subgroup_from_members(g, std::move(members));
}

Subgroup o_pprime_of_fitting(const Group& g, std::uint64_t p, std::uint64_t cap) {
  if (!is_prime(p)) throw Error(Errc::unsupported_parameter, std::to_string(p) + " is not prime");
  Subgroup f = fitting_subgroup(g, cap);
  std::vector<Perm> members;
  for (const Perm& x : f.group.elements(cap))
    if (element_order(x) % p != 0) members.push_back(x);
  return subgroup_from_members(g, std::move(members));
}

bool is_soluble(const Group& g, std::uint64_t cap) {
  SeriesRecord d = derived_series(g, cap);
  return d.terms[d.stabilized_at - 1].trivial();
}

int fitting_height(const Group& g, std::uint64_t cap) {
  if (!is_soluble(g, cap)) throw Error(Errc::not_soluble, "Fitting height needs a soluble group");
  int height = 0;
  Group current = g;
  while (current.order() > 1) {
    Subgroup f = fitting_subgroup(current, cap);
    if (f.trivial())
      throw Error(Errc::internal_inconsistency,
                  "nontrivial soluble group with trivial Fitting subgroup");
    current = quotient(current, f, kDefaultIndexCap, cap).group();
    ++height;
  }
  return height;
}

bool is_metanilpotent(const Group& g, std::uint64_t cap) {
  if (!is_soluble(g, cap)) return false;
  return fitting_height(g, cap) <= 2;
}

FittingData fitting_data(const Group& g, std::uint64_t cap) {
  bool soluble = is_soluble(g, cap);
  FittingData data{fitting_subgroup(g, cap), {}, std::nullopt, false, soluble};
  for (std::uint64_t p : prime_set(g).primes) data.per_prime.emplace(p, o_p(g, p, cap));
  if (soluble) {
    data.height = fitting_height(g, cap);
    data.metanilpotent = *data.height <= 2;
  }
  return data;
}

bool verify_tower(const Group& g, const TowerCandidate& t, std::uint64_t cap) {
  if (t.parts.size() != t.primes.size())
    throw Error(Errc::unsupported_parameter, "tower parts and primes differ in length");
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    if (!is_prime(t.primes[i])) return false;
    std::uint64_t base = 0;
    if (!is_prime_power(t.parts[i].order(), base) || base != t.primes[i]) return false;
  }
  for (std::size_t i = 0; i < t.parts.size(); ++i)
    for (std::size_t j = i + 1; j < t.parts.size(); ++j)
      for (const Perm& pi : t.parts[i].group.spec().generators)
        for (const Perm& pj : t.parts[j].group.spec().generators)
          if (!t.parts[j].group.contains(conjugate(pj, pi))) return false;
  for (std::size_t i = 1; i < t.parts.size(); ++i) {
    Subgroup commutators = mutual_commutator(g, t.parts[i], t.parts[i - 1], cap);
    if (!same_subgroup(commutators, t.parts[i])) return false;
  }
  return true;
}

bool has_normal_p_complement(const Group& g, std::uint64_t p, std::uint64_t cap) {
  if (!is_prime(p)) throw Error(Errc::unsupported_parameter, std::to_string(p) + " is not prime");
  const ElementSet& els = g.elements(cap);
  std::vector<Perm> coprime_order;
  for (const Perm& x : els)
    if (element_order(x) % p != 0) coprime_order.push_back(x);

  std::uint64_t pprime_part = g.order();
  while (pprime_part % p == 0) pprime_part /= p;
  if (coprime_order.size() != pprime_part) return false;

  ElementSet k = ElementSet::from_vector(g.degree(), coprime_order);
  for (const Perm& a : k)
    for (const Perm& b : k)
      if (!k.contains(compose(a, b))) return false;
  return true;
}

}  // namespace metanil
