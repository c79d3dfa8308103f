#include "metanil/series.hpp"

#include <algorithm>
#include <unordered_set>

#include "metanil/errors.hpp"

namespace metanil {

namespace {

/// Subgroup constructor for generators already known to lie in the parent.
Subgroup make_subgroup(const Group& parent, std::vector<Perm> gens,
                       std::vector<Perm> witness) {
  std::vector<Perm> reduced;
  for (Perm& g : gens) {
    if (g.is_identity()) continue;
    if (std::find(reduced.begin(), reduced.end(), g) == reduced.end())
      reduced.push_back(std::move(g));
  }
  if (reduced.empty()) reduced.push_back(Perm(parent.degree()));
  GroupSpec spec{"", parent.degree(), std::move(reduced)};
  return Subgroup{parent, Group::build(std::move(spec)), std::move(witness)};
}

ElementSet next_gamma_set(const ElementSet& current, const ElementSet& group_elements) {
  std::unordered_set<Perm, PermHash> next;
  next.reserve(current.size() * 2);
  for (const Perm& c : current)
    for (const Perm& g : group_elements) next.insert(commutator(c, g));
  return ElementSet::from_vector(group_elements.degree(),
                                 std::vector<Perm>(next.begin(), next.end()));
}

}  // namespace

Subgroup whole_group_as_subgroup(const Group& g) {
  return Subgroup{g, g, g.spec().generators};
}

Subgroup trivial_subgroup(const Group& g) {
  return make_subgroup(g, {}, {Perm(g.degree())});
}

bool subgroup_contains(const Subgroup& outer, const Subgroup& inner) {
  for (const Perm& p : inner.group.spec().generators)
    if (!outer.group.contains(p)) return false;
  return true;
}

bool same_subgroup(const Subgroup& a, const Subgroup& b) {
  return a.order() == b.order() && subgroup_contains(a, b) && subgroup_contains(b, a);
}

bool is_abelian(const Group& g) {
  const auto& gens = g.spec().generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commutator(gens[i], gens[j]).is_identity()) return false;
  return true;
}

std::vector<std::uint64_t> SeriesRecord::term_orders() const {
  std::vector<std::uint64_t> out;
  out.reserve(terms.size());
  for (const Subgroup& t : terms) out.push_back(t.order());
  return out;
}

std::vector<ElementSet> gamma_value_sets(const Group& g, int k_max, std::uint64_t cap) {
  if (k_max < 1) throw Error(Errc::unsupported_parameter, "k must be positive");
  const ElementSet& els = g.elements(cap);
  std::vector<ElementSet> xs;
  xs.push_back(els);
  for (int k = 2; k <= k_max; ++k) xs.push_back(next_gamma_set(xs.back(), els));
  return xs;
}

ElementSet gamma_values(const Group& g, int k, std::uint64_t cap) {
  return gamma_value_sets(g, k, cap).back();
}

Subgroup generated_subgroup(const Group& g, const std::vector<Perm>& gens) {
  for (const Perm& p : gens)
    if (!g.contains(p))
      throw Error(Errc::not_member, "generator " + format_cycles(p) + " is not in the group");
  return make_subgroup(g, gens, gens);
}

Subgroup generated_subgroup(const Group& g, const ElementSet& gens) {
  return generated_subgroup(g, gens.items());
}

Subgroup normal_closure(const Group& g, const std::vector<Perm>& seed) {
  for (const Perm& p : seed)
    if (!g.contains(p))
      throw Error(Errc::not_member, "seed " + format_cycles(p) + " is not in the group");
  std::vector<Perm> gens;
  for (const Perm& p : seed)
    if (!p.is_identity() && std::find(gens.begin(), gens.end(), p) == gens.end())
      gens.push_back(p);
  Subgroup h = make_subgroup(g, gens, seed);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Perm> found;
    for (const Perm& s : gens)
      for (const Perm& gg : g.spec().generators) {
        Perm c = conjugate(s, gg);
        if (!h.group.contains(c) && std::find(found.begin(), found.end(), c) == found.end())
          found.push_back(std::move(c));
      }
    if (!found.empty()) {
      gens.insert(gens.end(), found.begin(), found.end());
      h = make_subgroup(g, gens, seed);
      changed = true;
    }
  }
  return h;
}

SeriesRecord lower_central_series(const Group& g, std::uint64_t cap) {
  const ElementSet& els = g.elements(cap);
  SeriesRecord rec;
  rec.kind = SeriesKind::lower_central;
  rec.terms.push_back(whole_group_as_subgroup(g));
  ElementSet x = els;
  while (true) {
    x = next_gamma_set(x, els);
    Subgroup next = make_subgroup(g, x.items(), x.items());
    if (!subgroup_contains(rec.terms.back(), next))
      throw Error(Errc::internal_inconsistency, "series term does not contain its successor");
    rec.terms.push_back(std::move(next));
    const std::size_t n = rec.terms.size();
    if (same_subgroup(rec.terms[n - 2], rec.terms[n - 1])) {
      rec.stabilized_at = n - 1;
      return rec;
    }
  }
}

SeriesRecord lower_central_series_by_commutators(const Group& g, std::uint64_t cap) {
  SeriesRecord rec;
  rec.kind = SeriesKind::lower_central;
  rec.terms.push_back(whole_group_as_subgroup(g));
  Subgroup whole = whole_group_as_subgroup(g);
  while (true) {
    Subgroup next = mutual_commutator(g, rec.terms.back(), whole, cap);
    if (!subgroup_contains(rec.terms.back(), next))
      throw Error(Errc::internal_inconsistency, "series term does not contain its successor");
    rec.terms.push_back(std::move(next));
    const std::size_t n = rec.terms.size();
    if (same_subgroup(rec.terms[n - 2], rec.terms[n - 1])) {
      rec.stabilized_at = n - 1;
      return rec;
    }
  }
}

SeriesRecord derived_series(const Group& g, std::uint64_t cap) {
  SeriesRecord rec;
  rec.kind = SeriesKind::derived;
  rec.terms.push_back(whole_group_as_subgroup(g));
  while (true) {
    ElementSet commutators = gamma_values(rec.terms.back().group, 2, cap);
    Subgroup next = make_subgroup(g, commutators.items(), commutators.items());
    if (!subgroup_contains(rec.terms.back(), next))
      throw Error(Errc::internal_inconsistency, "series term does not contain its successor");
    rec.terms.push_back(std::move(next));
    const std::size_t n = rec.terms.size();
    if (same_subgroup(rec.terms[n - 2], rec.terms[n - 1])) {
      rec.stabilized_at = n - 1;
      return rec;
    }
  }
}

Nilpotency nilpotency(const Group& g, std::uint64_t cap) {
  SeriesRecord lcs = lower_central_series(g, cap);
  const Subgroup& stable = lcs.terms[lcs.stabilized_at - 1];
  if (!stable.trivial()) return {false, 0};
  return {true, static_cast<int>(lcs.stabilized_at) - 1};
}

bool is_nilpotent(const Group& g, std::uint64_t cap) { return nilpotency(g, cap).nilpotent; }
Nilpotency nilpotency(const Subgroup& h, std::uint64_t cap) { return nilpotency(h.group, cap); }
bool is_nilpotent(const Subgroup& h, std::uint64_t cap) { return is_nilpotent(h.group, cap); }

Subgroup center(const Group& g, std::uint64_t cap) {
  const ElementSet& els = g.elements(cap);
  std::vector<Perm> central;
  for (const Perm& e : els) {
    bool commutes = true;
    for (const Perm& gen : g.spec().generators)
      if (!commutator(e, gen).is_identity()) {
        commutes = false;
        break;
      }
    if (commutes) central.push_back(e);
  }
  return make_subgroup(g, central, central);
}

Subgroup centralizer(const Group& g, const Perm& x, std::uint64_t cap) {
  if (x.degree() != g.degree()) throw Error(Errc::degree_mismatch, "centralizer degree mismatch");
  const ElementSet& els = g.elements(cap);
  std::vector<Perm> fixing;
  for (const Perm& e : els)
    if (commutator(e, x).is_identity()) fixing.push_back(e);
  return make_subgroup(g, fixing, fixing);
}

Subgroup mutual_commutator(const Group& g, const Subgroup& a, const Subgroup& b,
                           std::uint64_t cap) {
  const ElementSet& ea = a.group.elements(cap);
  const ElementSet& eb = b.group.elements(cap);
  std::unordered_set<Perm, PermHash> values;
  for (const Perm& x : ea)
    for (const Perm& y : eb) values.insert(commutator(x, y));
  std::vector<Perm> gens(values.begin(), values.end());
  std::sort(gens.begin(), gens.end());
  return make_subgroup(g, gens, gens);
}

bool is_normal(const Group& g, const Subgroup& n) {
  for (const Perm& ng : n.group.spec().generators)
    for (const Perm& gg : g.spec().generators)
      if (!n.group.contains(conjugate(ng, gg))) return false;
  return true;
}

QuotientGroup::QuotientGroup(Group image, Subgroup kernel, std::vector<Perm> coset_reps,
                             std::vector<Perm> kernel_elements)
    : image_(std::move(image)),
      kernel_(std::move(kernel)),
      coset_reps_(std::move(coset_reps)),
      kernel_elements_(std::move(kernel_elements)) {
  rep_index_.reserve(coset_reps_.size());
  for (std::size_t i = 0; i < coset_reps_.size(); ++i)
    rep_index_.emplace(coset_reps_[i], static_cast<int>(i));
}

Perm QuotientGroup::canonical_rep(const Perm& x) const {
  Perm best = x;
  for (const Perm& m : kernel_elements_) {
    Perm cand = compose(m, x);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

int QuotientGroup::coset_of(const Perm& x) const {
  auto it = rep_index_.find(canonical_rep(x));
  if (it == rep_index_.end())
    throw Error(Errc::not_member, "element is not covered by the coset table");
  return it->second;
}

Perm QuotientGroup::project(const Perm& x) const {
  std::vector<int> images(coset_reps_.size());
  for (std::size_t i = 0; i < coset_reps_.size(); ++i)
    images[i] = coset_of(compose(coset_reps_[i], x));
  return Perm(std::move(images));
}

QuotientGroup quotient(const Group& g, const Subgroup& n, std::uint64_t index_cap,
                       std::uint64_t cap) {
  if (!is_normal(g, n)) throw Error(Errc::not_normal, "subgroup is not normal");
  const std::uint64_t index = g.order() / n.order();
  if (index > index_cap)
    throw Error(Errc::too_large, "coset index " + std::to_string(index) + " exceeds cap " +
                                     std::to_string(index_cap));
  std::vector<Perm> kernel_elements = n.group.elements(cap).items();

  auto canonical = [&kernel_elements](const Perm& x) {
    Perm best = x;
    for (const Perm& m : kernel_elements) {
      Perm cand = compose(m, x);
      if (cand < best) best = std::move(cand);
    }
    return best;
  };

  std::vector<Perm> reps{Perm(g.degree())};
  std::unordered_map<Perm, int, PermHash> index_of;
  index_of.emplace(reps[0], 0);
  for (std::size_t qi = 0; qi < reps.size(); ++qi)
    for (const Perm& s : g.spec().generators) {
      Perm c = canonical(compose(reps[qi], s));
      if (index_of.emplace(c, static_cast<int>(reps.size())).second) reps.push_back(std::move(c));
    }
  if (reps.size() != index)
    throw Error(Errc::internal_inconsistency, "coset table size disagrees with the index");

  std::vector<Perm> image_gens;
  image_gens.reserve(g.spec().generators.size());
  for (const Perm& s : g.spec().generators) {
    std::vector<int> images(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      images[i] = index_of.at(canonical(compose(reps[i], s)));
    image_gens.push_back(Perm(std::move(images)));
  }
  GroupSpec spec{g.name().empty() ? "quotient" : g.name() + "/N", static_cast<int>(index),
                 std::move(image_gens)};
  Group image = Group::build(std::move(spec));
  if (image.order() * n.order() != g.order())
    throw Error(Errc::internal_inconsistency, "coset action order disagrees with the index");
  return QuotientGroup(std::move(image), n, std::move(reps), std::move(kernel_elements));
}

}  // namespace metanil
