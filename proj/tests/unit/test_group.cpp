#include <random>

#include "doctest.h"
#include "metanil/catalog.hpp"
#include "metanil/errors.hpp"
#include "metanil/group.hpp"
#include "oracles.hpp"

using namespace metanil;

TEST_CASE("orders of the standard constructions match the closure oracle") {
  struct Case {
    GroupSpec spec;
    std::uint64_t order;
  };
  const Case cases[] = {
      {symmetric(4), 24}, {alternating(5), 60}, {sl2(3), 24},
      {quaternion8(), 8}, {frobenius20(), 20},  {dihedral(6), 12},
  };
  for (const Case& c : cases) {
    Group g = Group::build(c.spec);
    CHECK(g.order() == c.order);
    auto closure = oracles::naive_closure(c.spec.degree, c.spec.generators);
    CHECK(closure.size() == c.order);
  }
}

TEST_CASE("membership by sifting") {
  Group a4 = Group::build(alternating(4));
  CHECK(a4.contains(Perm(std::vector<int>{1, 2, 0, 3})));   // 3-cycle
  CHECK(!a4.contains(Perm(std::vector<int>{1, 0, 2, 3})));  // transposition
  CHECK(a4.contains(Perm(4)));
  CHECK_THROWS_AS(a4.contains(Perm(5)), Error);
}

TEST_CASE("membership is closed under products of random members") {
  Group g = Group::build(sl2(3));
  const ElementSet& els = g.elements();
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const Perm& x = els[pick(rng)];
    const Perm& y = els[pick(rng)];
    CHECK(g.contains(compose(x, y)));
  }
}

TEST_CASE("element enumeration") {
  Group trivial = Group::build(GroupSpec{"1", 3, {Perm(3)}});
  CHECK(trivial.order() == 1);
  CHECK(trivial.elements().size() == 1);
  CHECK(trivial.elements()[0].is_identity());

  Group s3 = Group::build(symmetric(3));
  CHECK(s3.elements().size() == 6);

  Group sl25 = Group::build(sl2(5));
  CHECK(sl25.elements().size() == 120);
  auto closure = oracles::naive_closure(24, sl25.spec().generators);
  CHECK(closure.size() == 120);
}

TEST_CASE("membership agrees with the closure oracle") {
  for (const GroupSpec& spec : {alternating(4), dihedral(5), frobenius20()}) {
    Group g = Group::build(spec);
    auto closure = oracles::naive_closure(spec.degree, spec.generators);
    for (const Perm& p : closure) CHECK(g.contains(p));
    // random non-members
    std::mt19937 rng(17);
    std::vector<int> imgs(static_cast<std::size_t>(spec.degree));
    std::iota(imgs.begin(), imgs.end(), 0);
    int found = 0;
    for (int i = 0; i < 100; ++i) {
      std::shuffle(imgs.begin(), imgs.end(), rng);
      Perm candidate((std::vector<int>(imgs)));
      if (!oracles::closure_contains(closure, candidate)) {
        ++found;
        CHECK(!g.contains(candidate));
      }
    }
    CHECK(found > 0);
  }
}

TEST_CASE("element orders divide the group order") {
  for (const GroupSpec& spec : {symmetric(4), sl2(3), dihedral(12)}) {
    Group g = Group::build(spec);
    const ElementSet& els = g.elements();
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    for (int i = 0; i < 1000; ++i) CHECK(g.order() % element_order(els[pick(rng)]) == 0);
  }
}

TEST_CASE("sifting products of generators yields the identity residue") {
  Group g = Group::build(symmetric(5));
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, g.spec().generators.size() - 1);
  for (int i = 0; i < 100; ++i) {
    Perm word(g.degree());
    for (int j = 0; j < 6; ++j) word = compose(word, g.spec().generators[pick(rng)]);
    auto sift = g.chain().sift(word);
    CHECK(sift.residue.is_identity());
  }
}

TEST_CASE("chain order equals the transversal product and divides degree!") {
  Group g = Group::build(symmetric(4));
  std::uint64_t product = 1;
  for (const ChainLevel& lv : g.chain().levels()) product *= lv.orbit.size();
  CHECK(product == g.order());
  std::uint64_t factorial = 1;
  for (int i = 2; i <= g.degree(); ++i) factorial *= static_cast<std::uint64_t>(i);
  CHECK(factorial % g.order() == 0);
}

TEST_CASE("enumeration cap and order overflow raise TooLarge") {
  Group s5 = Group::build(symmetric(5));
  CHECK_THROWS_AS(s5.elements(10), Error);
  try {
    s5.elements(10);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_large);
  }
  // 21! does not fit in 64 bits
  CHECK_THROWS_AS(Group::build(symmetric(21)), Error);
}

TEST_CASE("random generator sets: chain order and membership match the closure oracle") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int degree = 4 + static_cast<int>(rng() % 4);  // 4..7
    const int gen_count = 1 + static_cast<int>(rng() % 3);
    std::vector<Perm> gens;
    for (int i = 0; i < gen_count; ++i) {
      std::vector<int> imgs(static_cast<std::size_t>(degree));
      std::iota(imgs.begin(), imgs.end(), 0);
      std::shuffle(imgs.begin(), imgs.end(), rng);
      gens.push_back(Perm(std::move(imgs)));
    }
    Group g = Group::build(GroupSpec{"random", degree, gens});
    auto closure = oracles::naive_closure(degree, gens);
    REQUIRE(g.order() == closure.size());
    for (const Perm& p : closure) CHECK(g.contains(p));
    CHECK(g.elements().size() == closure.size());
  }
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(Group::build(GroupSpec{"bad", 3, {}}), Error);
  CHECK_THROWS_AS(Group::build(GroupSpec{"bad", 3, {Perm(4)}}), Error);
  CHECK_THROWS_AS(Group::build(GroupSpec{"bad", 0, {}}), Error);
}
