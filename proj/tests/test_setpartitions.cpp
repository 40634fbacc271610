#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "tenwein/set_partition.hpp"
#include "tenwein/text_io.hpp"

using namespace tenwein;

namespace {

// lattice-recursion oracle for the Moebius function: mu(sub,sup) defined by
// mu(pi,pi) = 1 and sum_{sub <= pi <= sup} mu(pi,sup) = 0 for sub < sup
Int moebius_recursive(const SetPartition& sub, const SetPartition& sup,
                      const std::vector<SetPartition>& all) {
  if (sub == sup) return 1;
  Int total = 0;
  for (const auto& pi : all) {
    if (pi == sub) continue;
    if (sub.refines(pi) && pi.refines(sup)) total += moebius_recursive(pi, sup, all);
  }
  return -total;
}

}  // namespace

TEST_CASE("refinement order") {
  auto all3 = all_partitions(3);
  for (const auto& pi : all3) {
    CHECK(SetPartition::finest(3).refines(pi));
    CHECK(pi.refines(SetPartition::one_block(3)));
  }
  CHECK(!parse_set_partition("{1,2}{3}").refines(parse_set_partition("{1,3}{2}")));
  CHECK_THROWS_AS(SetPartition::finest(2).refines(SetPartition::finest(3)), DomainError);
}

TEST_CASE("join") {
  CHECK(parse_set_partition("{1,2}{3,4}").join(parse_set_partition("{2,3}{1}{4}")) ==
        SetPartition::one_block(4));
  for (const auto& pi : all_partitions(4)) {
    CHECK(pi.join(pi) == pi);
    CHECK(SetPartition::finest(4).join(pi) == pi);
  }

  SUBCASE("join is the least upper bound") {
    auto all4 = all_partitions(4);
    for (const auto& a : all4)
      for (const auto& b : all4) {
        SetPartition j = a.join(b);
        CHECK(a.refines(j));
        CHECK(b.refines(j));
        for (const auto& c : all4)
          if (a.refines(c) && b.refines(c)) CHECK(j.refines(c));
      }
  }
}

TEST_CASE("Moebius values") {
  for (const auto& pi : all_partitions(4)) CHECK(moebius(pi, pi) == 1);
  CHECK(moebius(SetPartition::finest(3), SetPartition::one_block(3)) == 2);
  CHECK(moebius_to_top(SetPartition::finest(4)) == -6);
  CHECK_THROWS_AS(moebius(parse_set_partition("{1,2}{3}"), parse_set_partition("{1,3}{2}")),
                  DomainError);

  SUBCASE("closed product formula matches the lattice recursion") {
    for (int n = 1; n <= 4; ++n) {
      auto all = all_partitions(n);
      for (const auto& sub : all)
        for (const auto& sup : all) {
          if (!sub.refines(sup)) continue;
          CHECK(moebius(sub, sup) == moebius_recursive(sub, sup, all));
        }
    }
  }

  SUBCASE("defining identity of the Moebius function") {
    for (int n = 1; n <= 4; ++n) {
      auto all = all_partitions(n);
      for (const auto& sub : all)
        for (const auto& sup : all) {
          if (!sub.refines(sup)) continue;
          Int sum = 0;
          for (const auto& pi : all)
            if (sub.refines(pi) && pi.refines(sup)) sum += moebius(pi, sup);
          CHECK(sum == (sub == sup ? 1 : 0));
        }
    }
  }
}

TEST_CASE("Moebius inversion round trip") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> val(-50, 50);
  for (int n = 1; n <= 4; ++n) {
    auto all = all_partitions(n);
    std::map<SetPartition, Int> f, g;
    for (const auto& pi : all) f[pi] = val(rng);
    for (const auto& pi : all) {
      Int s = 0;
      for (const auto& q : all)
        if (q.refines(pi)) s += f[q];
      g[pi] = s;
    }
    for (const auto& pi : all) {
      Int s = 0;
      for (const auto& q : all)
        if (q.refines(pi)) s += moebius(q, pi) * g[q];
      CHECK(s == f[pi]);
    }
  }
}

TEST_CASE("partition enumeration counts are Bell numbers") {
  CHECK(all_partitions(1).size() == 1);
  CHECK(all_partitions(3).size() == 5);
  auto bell5 = all_partitions(5);
  CHECK(bell5.size() == 52);
  std::set<SetPartition> distinct(bell5.begin(), bell5.end());
  CHECK(distinct.size() == 52);
}

TEST_CASE("coarser partitions") {
  CHECK(coarser_partitions(SetPartition::one_block(4)).size() == 1);
  auto two = coarser_partitions(parse_set_partition("{1,2}{3}"));
  CHECK(two.size() == 2);
  CHECK(coarser_partitions(SetPartition::finest(3)).size() == 5);

  SUBCASE("count equals Bell(number of blocks) and all are coarser") {
    auto bell = [](int m) { return all_partitions(m).size(); };
    for (const auto& base : all_partitions(4)) {
      auto coarser = coarser_partitions(base);
      CHECK(coarser.size() == bell(base.num_blocks()));
      std::set<SetPartition> distinct(coarser.begin(), coarser.end());
      CHECK(distinct.size() == coarser.size());
      for (const auto& pi : coarser) CHECK(base.refines(pi));
    }
  }
}

TEST_CASE("set partition text syntax") {
  CHECK(format_set_partition(parse_set_partition("{3}{1,2}{4,5}")) == "{1,2}{3}{4,5}");
  CHECK_THROWS_AS(parse_set_partition("{1,2}{2,3}"), ParseError);
  CHECK_THROWS_AS(parse_set_partition("{1,3}"), ParseError);  // 2 uncovered
  CHECK_THROWS_AS(parse_set_partition(""), ParseError);
}
