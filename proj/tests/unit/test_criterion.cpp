#include <numeric>

#include "doctest.h"
#include "metanil/catalog.hpp"
#include "metanil/criterion.hpp"
#include "metanil/errors.hpp"
#include "oracles.hpp"

using namespace metanil;

TEST_CASE("the condition holds vacuously on the trivial group") {
  Group trivial = Group::build(GroupSpec{"1", 2, {Perm(2)}});
  for (int k = 1; k <= 3; ++k) {
    ConditionReport rep = check_condition(trivial, k);
    CHECK(rep.holds);
    CHECK(!rep.witness);
    CHECK(rep.x_size == 1);
  }
}

TEST_CASE("S3 fails at k = 1 with the canonical witness") {
  Group s3 = Group::build(symmetric(3));
  ConditionReport rep = check_condition(s3, 1, ScanMode::canonical);
  CHECK(!rep.holds);
  CHECK(rep.x_size == 6);
  REQUIRE(rep.witness);
  // Hand-derived least violating pair under the canonical element order:
  // a = (1 2) with images [0,2,1], b = (0 1 2) with images [1,2,0]; ab = (0 1).
  CHECK(rep.witness->a == Perm(std::vector<int>{0, 2, 1}));
  CHECK(rep.witness->b == Perm(std::vector<int>{1, 2, 0}));
  CHECK(rep.witness->order_a == 2);
  CHECK(rep.witness->order_b == 3);
  CHECK(rep.witness->order_ab == 2);
}

TEST_CASE("S3 satisfies the condition at k = 2") {
  Group s3 = Group::build(symmetric(3));
  ConditionReport rep = check_condition(s3, 2);
  CHECK(rep.holds);
  CHECK(rep.x_size == 3);
}

TEST_CASE("check_condition agrees with the brute-force oracle") {
  for (const GroupSpec& spec :
       {symmetric(3), symmetric(4), alternating(4), frobenius20(), sl2(3), dihedral(6)}) {
    Group g = Group::build(spec);
    for (int k = 1; k <= 3; ++k) {
      ElementSet x = gamma_values(g, k);
      CHECK(check_condition(g, k).holds == oracles::brute_condition_holds(x));
    }
  }
}

TEST_CASE("reported witnesses re-verify under direct multiplication") {
  for (const GroupSpec& spec : {symmetric(4), alternating(5), frobenius20()}) {
    Group g = Group::build(spec);
    for (int k = 1; k <= 3; ++k) {
      ConditionReport rep = check_condition(g, k);
      if (rep.holds) continue;
      REQUIRE(rep.witness);
      ElementSet x = gamma_values(g, k);
      CHECK(x.contains(rep.witness->a));
      CHECK(x.contains(rep.witness->b));
      CHECK(std::gcd(rep.witness->order_a, rep.witness->order_b) == 1);
      CHECK(element_order(rep.witness->a) == rep.witness->order_a);
      CHECK(element_order(rep.witness->b) == rep.witness->order_b);
      CHECK(element_order(compose(rep.witness->a, rep.witness->b)) == rep.witness->order_ab);
      CHECK(rep.witness->order_ab != rep.witness->order_a * rep.witness->order_b);
    }
  }
}

TEST_CASE("canonical reports are identical across worker counts") {
  Group g = Group::build(symmetric(5));
  ConditionReport one = check_condition(g, 1, ScanMode::canonical, 1);
  ConditionReport eight = check_condition(g, 1, ScanMode::canonical, 8);
  CHECK(one.holds == eight.holds);
  CHECK(one.pairs_checked == eight.pairs_checked);
  REQUIRE(one.witness);
  REQUIRE(eight.witness);
  CHECK(one.witness->a == eight.witness->a);
  CHECK(one.witness->b == eight.witness->b);
}

TEST_CASE("fast mode agrees on the verdict") {
  for (const GroupSpec& spec : {symmetric(4), cyclic(12), frobenius20()}) {
    Group g = Group::build(spec);
    for (int k = 1; k <= 3; ++k) {
      ConditionReport fast = check_condition(g, k, ScanMode::fast, 4);
      ConditionReport canonical = check_condition(g, k, ScanMode::canonical, 1);
      CHECK(fast.holds == canonical.holds);
      CHECK(fast.witness.has_value() == canonical.witness.has_value());
    }
  }
}

TEST_CASE("verify_theorem is consistent on both outcomes") {
  SUBCASE("S4 fails at every k with gamma_k = A4") {
    Group s4 = Group::build(symmetric(4));
    for (int k = 1; k <= 6; ++k) {
      TheoremVerdict v = verify_theorem(s4, k);
      CHECK(v.consistent);
      CHECK(!v.condition_holds);
      CHECK(!v.gamma_k_nilpotent);
      if (k >= 2) CHECK(v.gamma_k_order == 12);
    }
  }
  SUBCASE("SL(2,3) holds at k = 2 with a nilpotent gamma_2 of order 8") {
    TheoremVerdict v = verify_theorem(Group::build(sl2(3)), 2);
    CHECK(v.consistent);
    CHECK(v.condition_holds);
    CHECK(v.gamma_k_nilpotent);
    CHECK(v.gamma_k_order == 8);
  }
  SUBCASE("A5 fails at k = 3 with gamma_3 = A5") {
    TheoremVerdict v = verify_theorem(Group::build(alternating(5)), 3);
    CHECK(v.consistent);
    CHECK(!v.condition_holds);
    CHECK(v.gamma_k_order == 60);
  }
}

TEST_CASE("baumslag_wiegold is the k = 1 instance") {
  TheoremVerdict q8 = baumslag_wiegold(Group::build(quaternion8()));
  CHECK(q8.consistent);
  CHECK(q8.condition_holds);
  TheoremVerdict s3 = baumslag_wiegold(Group::build(symmetric(3)));
  CHECK(s3.consistent);
  CHECK(!s3.condition_holds);
  TheoremVerdict c6 = baumslag_wiegold(Group::build(cyclic(6)));
  CHECK(c6.consistent);
  CHECK(c6.condition_holds);
  CHECK(c6.gamma_k_nilpotent);
}

TEST_CASE("minimal_k") {
  CHECK(minimal_k(Group::build(symmetric(3))) == 2);
  CHECK(minimal_k(Group::build(frobenius20())) == 2);
  CHECK(!minimal_k(Group::build(symmetric(4))));
  CHECK(minimal_k(Group::build(cyclic(6))) == 1);
  CHECK(!minimal_k(Group::build(alternating(5))));
  // an explicit cap on k is honored
  CHECK(!minimal_k(Group::build(symmetric(3)), 1));
}

TEST_CASE("verify_corollary") {
  CorollaryVerdict s3 = verify_corollary(Group::build(symmetric(3)));
  CHECK(s3.metanilpotent);
  CHECK(s3.min_k == 2);
  CHECK(s3.consistent);
  CorollaryVerdict s4 = verify_corollary(Group::build(symmetric(4)));
  CHECK(!s4.metanilpotent);
  CHECK(!s4.min_k);
  CHECK(s4.consistent);
  CorollaryVerdict d4 = verify_corollary(Group::build(dihedral(4)));
  CHECK(d4.metanilpotent);
  CHECK(d4.min_k == 1);
  CHECK(d4.consistent);
}

TEST_CASE("lemma: coprime gamma_k values centralize cyclic subgroups they normalize") {
  CHECK(check_lemma_bbb(Group::build(cyclic(12)), 1).empty());
  CHECK(check_lemma_bbb(Group::build(symmetric(3)), 2).empty());
  CHECK(check_lemma_bbb(Group::build(sl2(3)), 2).empty());
  CHECK_THROWS_AS(check_lemma_bbb(Group::build(symmetric(3)), 1), Error);
}

TEST_CASE("lemma: perfect groups are generated by prime-power gamma_k values avoiding q") {
  Group a5 = Group::build(alternating(5));
  for (int k = 1; k <= 3; ++k)
    for (std::uint64_t q : {2, 3, 5}) CHECK(check_lemma_gamma(a5, k, q));
  Group sl25 = Group::build(sl2(5));
  CHECK(check_lemma_gamma(sl25, 3, 3));
  CHECK_THROWS_AS(check_lemma_gamma(Group::build(symmetric(4)), 2, 3), Error);
  CHECK_THROWS_AS(check_lemma_gamma(a5, 1, 7), Error);
}

TEST_CASE("lemma: p-elements centralizing the p'-part of F lie in F") {
  CHECK(check_lemma_meta(Group::build(cyclic(12))).empty());
  CHECK(check_lemma_meta(Group::build(symmetric(3))).empty());
  CHECK(check_lemma_meta(Group::build(sl2(3))).empty());
  CHECK_THROWS_AS(check_lemma_meta(Group::build(symmetric(4))), Error);
}

TEST_CASE("lemma: soluble groups with the condition have nilpotent gamma_k") {
  CHECK(check_lemma_solu(Group::build(symmetric(3)), 2));
  CHECK(check_lemma_solu(Group::build(sl2(3)), 2));
  CHECK(check_lemma_solu(Group::build(cyclic(9)), 1));
  CHECK_THROWS_AS(check_lemma_solu(Group::build(alternating(5)), 3), Error);
  CHECK_THROWS_AS(check_lemma_solu(Group::build(symmetric(4)), 2), Error);
}

TEST_CASE("coprime action identities") {
  Group s3 = Group::build(symmetric(3));
  Subgroup a3 = generated_subgroup(s3, std::vector<Perm>{Perm(std::vector<int>{1, 2, 0})});

  SUBCASE("the identity acts trivially") {
    CoprimeActionReport rep = check_coprime_action(s3, a3, Perm(3));
    CHECK(rep.all_hold());
    REQUIRE(rep.abelian_decomposition);
    CHECK(*rep.abelian_decomposition);
  }

  SUBCASE("a transposition acting on A3") {
    CoprimeActionReport rep = check_coprime_action(s3, a3, Perm(std::vector<int>{1, 0, 2}));
    CHECK(rep.all_hold());
  }

  SUBCASE("a 3-cycle acting on V4") {
    Group s4 = Group::build(symmetric(4));
    Subgroup v4 = generated_subgroup(s4, std::vector<Perm>{Perm(std::vector<int>{1, 0, 3, 2}),
                                                           Perm(std::vector<int>{2, 3, 0, 1})});
    CoprimeActionReport rep = check_coprime_action(s4, v4, Perm(std::vector<int>{1, 2, 0, 3}));
    CHECK(rep.all_hold());
  }

  SUBCASE("non-coprime orders are rejected") {
    Group s4 = Group::build(symmetric(4));
    Subgroup v4 = generated_subgroup(s4, std::vector<Perm>{Perm(std::vector<int>{1, 0, 3, 2}),
                                                           Perm(std::vector<int>{2, 3, 0, 1})});
    CHECK_THROWS_AS(check_coprime_action(s4, v4, Perm(std::vector<int>{1, 0, 2, 3})), Error);
  }

  SUBCASE("elements that do not normalize N are rejected") {
    Group s4 = Group::build(symmetric(4));
    Subgroup c3 = generated_subgroup(s4, std::vector<Perm>{Perm(std::vector<int>{1, 2, 0, 3})});
    CHECK_THROWS_AS(check_coprime_action(s4, c3, Perm(std::vector<int>{1, 0, 3, 2})), Error);
  }
}

TEST_CASE("nilpotency of gamma_k is monotone in k") {
  for (const GroupSpec& spec : {symmetric(3), frobenius20(), cyclic(12), sl2(3)}) {
    Group g = Group::build(spec);
    bool seen = false;
    for (int k = 1; k <= 6; ++k) {
      bool nil = is_nilpotent(generated_subgroup(g, gamma_values(g, k)).group);
      if (seen) CHECK(nil);
      seen = seen || nil;
    }
  }
}
