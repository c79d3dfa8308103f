#include "metanil/group.hpp"

#include <algorithm>
#include <limits>

#include "metanil/errors.hpp"

namespace metanil {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw Error(Errc::too_large, "group order exceeds 64 bits");
  return a * b;
}

}  // namespace

void GroupSpec::validate() const {
  if (degree <= 0) throw Error(Errc::invalid_spec, "degree must be positive");
  if (generators.empty()) throw Error(Errc::invalid_spec, "generator list is empty");
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw Error(Errc::invalid_spec, "generator degree " + std::to_string(g.degree()) +
                                          " does not match group degree " +
                                          std::to_string(degree));
}

int StabilizerChain::min_moved_point(const Perm& p) { return p.first_moved_point(); }

void StabilizerChain::recompute_orbit(std::size_t level) {
  ChainLevel& lv = levels_[level];
  lv.orbit.clear();
  lv.transversal.assign(static_cast<std::size_t>(degree_), std::nullopt);
  lv.orbit.push_back(lv.base_point);
  lv.transversal[static_cast<std::size_t>(lv.base_point)] = Perm(degree_);
  for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
    int p = lv.orbit[qi];
    for (const Perm& s : lv.generators) {
      int r = s[p];
      if (!lv.transversal[static_cast<std::size_t>(r)]) {
        lv.transversal[static_cast<std::size_t>(r)] =
            compose(*lv.transversal[static_cast<std::size_t>(p)], s);
        lv.orbit.push_back(r);
      }
    }
  }
}

StabilizerChain::Sift StabilizerChain::sift(Perm p, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const ChainLevel& lv = levels_[l];
    int image = p[lv.base_point];
    const auto& rep = lv.transversal[static_cast<std::size_t>(image)];
    if (!rep) return {std::move(p), l};
    p = compose(p, inverse(*rep));
  }
  return {std::move(p), levels_.size()};
}

bool StabilizerChain::contains(const Perm& p) const {
  return sift(p).residue.is_identity();
}

std::vector<int> StabilizerChain::base() const {
  std::vector<int> b;
  b.reserve(levels_.size());
  for (const ChainLevel& lv : levels_) b.push_back(lv.base_point);
  return b;
}

StabilizerChain StabilizerChain::build(int degree, const std::vector<Perm>& raw_gens) {
  StabilizerChain chain;
  chain.degree_ = degree;

  std::vector<Perm> gens;
  for (const Perm& g : raw_gens) {
    if (g.degree() != degree) throw Error(Errc::degree_mismatch, "generator degree mismatch");
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  }
  if (gens.empty()) return chain;  // trivial group: empty chain, order 1

  // Initial base: every generator must move some base point.
  std::vector<int> base;
  for (const Perm& g : gens) {
    bool moves_base = std::any_of(base.begin(), base.end(), [&](int b) { return g[b] != b; });
    if (!moves_base) base.push_back(min_moved_point(g));
  }
  for (int b : base) {
    ChainLevel lv;
    lv.base_point = b;
    chain.levels_.push_back(std::move(lv));
  }
  // S_i = input generators fixing base[0..i-1].
  for (const Perm& g : gens) {
    for (std::size_t l = 0; l < chain.levels_.size(); ++l) {
      chain.levels_[l].generators.push_back(g);
      if (g[chain.levels_[l].base_point] != chain.levels_[l].base_point) break;
    }
  }
  for (std::size_t l = 0; l < chain.levels_.size(); ++l) chain.recompute_orbit(l);

  // Verify each level bottom-up: every Schreier generator must sift to the
  // identity through the deeper levels; a non-identity residue becomes a new
  // strong generator and verification resumes at its level.
  int i = static_cast<int>(chain.levels_.size()) - 1;
  while (i >= 0) {
    bool descended = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < chain.levels_[li].orbit.size() && !descended; ++oi) {
      int b = chain.levels_[li].orbit[oi];
      for (std::size_t si = 0; si < chain.levels_[li].generators.size() && !descended; ++si) {
        const ChainLevel& lv = chain.levels_[li];
        const Perm& u = *lv.transversal[static_cast<std::size_t>(b)];
        const Perm& s = lv.generators[si];
        Perm sg = compose(compose(u, s), inverse(*lv.transversal[static_cast<std::size_t>(s[b])]));
        if (sg.is_identity()) continue;
        auto [residue, j] = chain.sift(std::move(sg), li + 1);
        if (residue.is_identity()) continue;
        if (j == chain.levels_.size()) {
          ChainLevel fresh;
          fresh.base_point = min_moved_point(residue);
          chain.levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= j; ++l) chain.levels_[l].generators.push_back(residue);
        for (std::size_t l = li + 1; l <= j; ++l) chain.recompute_orbit(l);
        i = static_cast<int>(j);
        descended = true;
      }
    }
    if (!descended) --i;
  }

  chain.order_ = 1;
  for (const ChainLevel& lv : chain.levels_)
    chain.order_ = checked_mul(chain.order_, lv.orbit.size());
  return chain;
}

std::vector<Perm> StabilizerChain::enumerate(std::uint64_t cap) const {
  if (order_ > cap)
    throw Error(Errc::too_large, "group has " + std::to_string(order_) +
                                     " elements, enumeration cap is " + std::to_string(cap));
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order_));
  // Members factor as t_{k-1} * ... * t_0 (deepest transversal applied first).
  std::vector<Perm> stack;
  stack.push_back(Perm(degree_));
  auto rec = [&](auto&& self, int level) -> void {
    if (level < 0) {
      out.push_back(stack.back());
      return;
    }
    const ChainLevel& lv = levels_[static_cast<std::size_t>(level)];
    for (int p : lv.orbit) {
      stack.push_back(compose(stack.back(), *lv.transversal[static_cast<std::size_t>(p)]));
      self(self, level - 1);
      stack.pop_back();
    }
  };
  rec(rec, static_cast<int>(levels_.size()) - 1);
  return out;
}

Group Group::build(GroupSpec spec) {
  spec.validate();
  auto state = std::make_shared<State>();
  state->chain = StabilizerChain::build(spec.degree, spec.generators);
  state->spec = std::move(spec);
  Group g;
  g.state_ = std::move(state);
  return g;
}

bool Group::contains(const Perm& p) const {
  if (p.degree() != degree())
    throw Error(Errc::degree_mismatch, "membership test on degree " + std::to_string(p.degree()) +
                                           " in group of degree " + std::to_string(degree()));
  return state_->chain.contains(p);
}

const ElementSet& Group::elements(std::uint64_t cap) const {
  if (order() > cap)
    throw Error(Errc::too_large, "group has " + std::to_string(order()) +
                                     " elements, enumeration cap is " + std::to_string(cap));
  std::lock_guard<std::mutex> lock(state_->cache_mutex);
  if (!state_->element_cache)
    state_->element_cache = ElementSet::from_vector(degree(), state_->chain.enumerate(cap));
  return *state_->element_cache;
}

Group build_group(GroupSpec spec) { return Group::build(std::move(spec)); }
bool contains(const Group& g, const Perm& p) { return g.contains(p); }
const ElementSet& elements(const Group& g, std::uint64_t cap) { return g.elements(cap); }

}  // namespace metanil
