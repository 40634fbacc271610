#include <doctest.h>

#include <random>
#include <set>

#include "tenwein/permutation.hpp"
#include "tenwein/set_partition.hpp"
#include "tenwein/text_io.hpp"

using namespace tenwein;

TEST_CASE("composition convention (a*b)(s) = a(b(s))") {
  Permutation t12 = parse_permutation("(1 2)", 3);
  Permutation t23 = parse_permutation("(2 3)", 3);
  CHECK((parse_permutation("(1 2)") * parse_permutation("(1 2)")).is_identity());
  // b(1)=1,a(1)=2; b(2)=3,a(3)=3; b(3)=2,a(2)=1: the 3-cycle (1 2 3)
  CHECK(t12 * t23 == parse_permutation("(1 2 3)"));

  std::mt19937 rng(1);
  auto s5 = all_permutations(5);
  std::uniform_int_distribution<size_t> pick(0, s5.size() - 1);
  for (int i = 0; i < 10; ++i) {
    const Permutation& p = s5[pick(rng)];
    CHECK(Permutation::identity(5) * p == p);
    CHECK((p * p.inverse()).is_identity());
  }
}

TEST_CASE("degree mismatch is rejected") {
  CHECK_THROWS_AS(parse_permutation("(1 2)") * parse_permutation("(1 2 3)"), DomainError);
}

TEST_CASE("length and cycle count") {
  CHECK(Permutation::identity(4).length() == 0);
  CHECK(parse_permutation("(1 2)(3 4)").length() == 2);
  CHECK(parse_permutation("(1 2 3 4 5)").length() == 4);
  for (const auto& p : all_permutations(4))
    CHECK(p.num_cycles() + p.length() == 4);
}

TEST_CASE("length is subadditive and parity-additive") {
  std::mt19937 rng(2);
  auto s5 = all_permutations(5);
  std::uniform_int_distribution<size_t> pick(0, s5.size() - 1);
  for (int i = 0; i < 50; ++i) {
    const Permutation& p = s5[pick(rng)];
    const Permutation& q = s5[pick(rng)];
    int lpq = (p * q).length();
    CHECK(lpq <= p.length() + q.length());
    CHECK((lpq - p.length() - q.length()) % 2 == 0);
  }
}

TEST_CASE("conjugacy class sizes") {
  CHECK(CycleType({1, 1, 1}).class_size() == 1);
  CHECK(CycleType({2, 1}).class_size() == 3);
  CHECK(CycleType({3}).class_size() == 2);

  SUBCASE("enumeration matches the closed class size") {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& t : all_cycle_types(n)) {
        std::set<Permutation> seen;
        for_each_in_class(t, [&](const Permutation& p) {
          CHECK(p.cycle_type() == t);
          seen.insert(p);
        });
        CHECK(Int(static_cast<long>(seen.size())) == t.class_size());
      }
    }
  }

  SUBCASE("transpositions of S_3") {
    std::set<Permutation> expect = {parse_permutation("(1 2)", 3), parse_permutation("(1 3)", 3),
                                    parse_permutation("(2 3)", 3)};
    std::set<Permutation> got;
    for_each_in_class(CycleType({2, 1}), [&](const Permutation& p) { got.insert(p); });
    CHECK(got == expect);
  }
}

TEST_CASE("restriction to a stabilized block") {
  Permutation p = parse_permutation("(1 2)(3 4 5)");
  CHECK(p.restricted_to({3, 4, 5}) == parse_permutation("(1 2 3)"));
  CHECK(Permutation::identity(5).restricted_to({2, 4}) == Permutation::identity(2));
  CHECK_THROWS_AS(p.restricted_to({1, 3}), DomainError);

  SUBCASE("lift inverts restrict") {
    Permutation r = p.restricted_to({3, 4, 5});
    Permutation lifted = r.lifted_to({3, 4, 5}, 5);
    CHECK(lifted == parse_permutation("(3 4 5)", 5));
  }
}

TEST_CASE("transitivity partition") {
  CHECK(transitivity_partition({parse_permutation("(1 2)", 3)}) ==
        parse_set_partition("{1,2}{3}"));
  CHECK(transitivity_partition({parse_permutation("(1 2)", 3), parse_permutation("(2 3)", 3)}) ==
        SetPartition::one_block(3));
  CHECK(transitivity_partition({Permutation::identity(3)}) == SetPartition::finest(3));
  CHECK_THROWS_AS(transitivity_partition({}), DomainError);

  SUBCASE("orbit count of a single permutation is its cycle count") {
    std::mt19937 rng(3);
    auto s5 = all_permutations(5);
    std::uniform_int_distribution<size_t> pick(0, s5.size() - 1);
    for (int i = 0; i < 20; ++i) {
      const Permutation& p = s5[pick(rng)];
      CHECK(transitivity_partition({p}).num_blocks() == p.num_cycles());
    }
  }
}

TEST_CASE("text round trips") {
  CHECK(parse_permutation("[2,1,4,5,3]") == parse_permutation("(1 2)(3 4 5)"));
  CHECK(parse_permutation("(1,2)(3,4,5)") == parse_permutation("(1 2)(3 4 5)"));
  CHECK(format_permutation(parse_permutation("(1 2)(3 4 5)")) == "(1 2)(3 4 5)");
  CHECK(parse_permutation("()").degree() == 1);

  std::mt19937 rng(4);
  auto s6 = all_permutations(6);
  std::uniform_int_distribution<size_t> pick(0, s6.size() - 1);
  for (int i = 0; i < 25; ++i) {
    const Permutation& p = s6[pick(rng)];
    CHECK(parse_permutation(format_permutation(p)) == p);
  }

  CHECK_THROWS_AS(parse_permutation("(1 2"), ParseError);
  CHECK_THROWS_AS(parse_permutation("[2,2]"), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)"), ParseError);
  CHECK_THROWS_AS(parse_permutation("frobnicate"), ParseError);
}

TEST_CASE("cycle type basics") {
  CycleType t({3, 2});
  CHECK(t.n() == 5);
  CHECK(t.num_parts() == 2);
  CHECK(t.length() == 3);
  CHECK(t.representative().cycle_type() == t);
  CHECK(CycleType({1, 1}).is_trivial());
  CHECK(!t.is_trivial());
  CHECK(parse_cycle_type("[2,1]") == CycleType({2, 1}));
  CHECK(format_cycle_type(parse_cycle_type("2,1")) == "2,1");
}
