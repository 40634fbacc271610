#include <doctest.h>

#include <random>

#include "tenwein/constellation.hpp"
#include "tenwein/cumulant_weingarten.hpp"
#include "tenwein/nodal.hpp"
#include "tenwein/text_io.hpp"
#include "tenwein/weingarten.hpp"

using namespace tenwein;

namespace {

PermTuple tuple1(const std::string& p) { return PermTuple({parse_permutation(p)}); }

PermTuple tuple1(const std::string& p, int n) { return PermTuple({parse_permutation(p, n)}); }

// the running two-color example on five elements: sigma_1=(13), tau_1^{-1}=(13)(45),
// sigma_2=(123)(45), tau_2=id
struct TwoColorExample {
  PermTuple sigma{{parse_permutation("(1 3)", 5), parse_permutation("(1 2 3)(4 5)")}};
  PermTuple tau{{parse_permutation("(1 3)(4 5)").inverse(), Permutation::identity(5)}};
};

}  // namespace

TEST_CASE("minimal order ell") {
  SUBCASE("equal transitive tuples have ell = 0") {
    PermTuple s({parse_permutation("(1 2 3)")});
    CHECK(ell(s, s) == 0);
  }

  SUBCASE("identity tuples: one orbit per element") {
    for (int n = 1; n <= 4; ++n) {
      PermTuple id_t({Permutation::identity(n)});
      CHECK(ell(id_t, id_t) == 2 * (n - 1));
    }
  }

  SUBCASE("the two-color five-element example has ell = 6") {
    TwoColorExample ex;
    PermTuple nu = product_with_inverse(ex.sigma, ex.tau);
    CHECK(nu.color(0) == parse_permutation("(4 5)", 5));
    CHECK(nu.color(1) == parse_permutation("(1 2 3)(4 5)"));
    CHECK(joint_orbits(ex.sigma, ex.tau).num_blocks() == 2);
    CHECK(ell(ex.sigma, ex.tau) == 6);
  }
}

TEST_CASE("m_C boundary values and the D=1 reduction") {
  SUBCASE("m_C(sigma,sigma;0,0) = 1 iff jointly transitive") {
    PermTuple s({parse_permutation("(1 2 3)")});
    CHECK(m_C(s, s, 0, 0) == 1);
    PermTuple id2({Permutation::identity(2)});
    CHECK(m_C(id2, id2, 0, 0) == 0);  // two orbits
    CHECK(m_C(s, s, 0, 1) == 0);
  }

  SUBCASE("smallest non-trivial identity pair count") {
    PermTuple id2({Permutation::identity(2)});
    CHECK(m_C(id2, id2, 2, 2) == 1);  // rho_1 = rho_2 = (12)
  }

  SUBCASE("m_C reduces to the connected counts when Pi(sigma,tau) == Pi(nu)") {
    for (const auto& s : all_permutations(3))
      for (const auto& t : all_permutations(3)) {
        PermTuple sigma({s}), tau({t});
        Permutation nu = s * t.inverse();
        if (joint_orbits(sigma, tau) != cycle_partition(nu)) continue;
        for (long l = 0; l <= 4; ++l)
          for (long k = 0; k <= l; ++k)
            CHECK(m_C(sigma, tau, l, k) ==
                  connected_factorization_count(nu, l, static_cast<int>(k), true));
      }
  }
}

TEST_CASE("p_C boundary and threshold") {
  SUBCASE("l = 0") {
    for (const auto& s : all_permutations(2))
      for (const auto& t : all_permutations(2)) {
        PermTuple sigma({s, s}), tau({t, t});
        Int expect = (s == t && joint_orbits(sigma, tau).num_blocks() == 1) ? 1 : 0;
        CHECK(p_C_alternating(sigma, tau, 0) == expect);
      }
  }

  SUBCASE("transitive D=1 pairs reduce to ordinary Weingarten coefficients") {
    CHECK(p_C_monotone(tuple1("(1 2)"), tuple1("()", 2), 1) == 1);
    for (const auto& s : all_permutations(3))
      for (const auto& t : all_permutations(3)) {
        PermTuple sigma({s}), tau({t});
        if (joint_orbits(sigma, tau).num_blocks() != 1) continue;
        for (long l = 0; l <= 5; ++l)
          CHECK(p_C_monotone(sigma, tau, l) == p_coeff(s * t.inverse(), l));
      }
  }

  SUBCASE("vanishing below ell, parity above") {
    for (const auto& s : all_permutations(2))
      for (const auto& t : all_permutations(2)) {
        PermTuple sigma({s, t}), tau({t, s});
        long lmin = ell(sigma, tau);
        for (long l = 0; l < lmin; ++l) CHECK(p_C_partition_formula(sigma, tau, l) == 0);
        CHECK(p_C_partition_formula(sigma, tau, lmin) != 0);
        CHECK(p_C_partition_formula(sigma, tau, lmin + 1) == 0);
      }
  }
}

TEST_CASE("three routes agree (small grid; the full grid runs in acceptance)") {
  for (int n = 1; n <= 2; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& s1 : perms)
      for (const auto& s2 : perms)
        for (const auto& t1 : perms)
          for (const auto& t2 : perms) {
            PermTuple sigma({s1, s2}), tau({t1, t2});
            long lmin = ell(sigma, tau);
            for (long l = lmin; l <= lmin + 2; ++l) {
              Int a = p_C_alternating(sigma, tau, l);
              CHECK(a == p_C_monotone(sigma, tau, l));
              CHECK(a == p_C_partition_formula(sigma, tau, l));
              CHECK(a == folding_decomposition(sigma, tau, l));
            }
          }
  }
}

TEST_CASE("simultaneous conjugation invariance") {
  std::mt19937 rng(11);
  auto s3 = all_permutations(3);
  std::uniform_int_distribution<size_t> pick(0, s3.size() - 1);
  for (int i = 0; i < 10; ++i) {
    PermTuple sigma({s3[pick(rng)], s3[pick(rng)]});
    PermTuple tau({s3[pick(rng)], s3[pick(rng)]});
    const Permutation& g = s3[pick(rng)];
    long l = ell(sigma, tau);
    CHECK(p_C_alternating(sigma, tau, l) ==
          p_C_alternating(sigma.conjugated_by(g), tau.conjugated_by(g), l));
  }
}

TEST_CASE("leading coefficient") {
  SUBCASE("equal transitive tuples") {
    PermTuple s({parse_permutation("(1 2 3)")});
    auto [v, l] = leading_p_C(s, s);
    CHECK(v == 1);
    CHECK(l == 0);
  }

  SUBCASE("D=1 with Pi(sigma,tau) == Pi(nu): the closed alternating sum") {
    for (const auto& s : all_permutations(3))
      for (const auto& t : all_permutations(3)) {
        PermTuple sigma({s}), tau({t});
        Permutation nu = s * t.inverse();
        if (joint_orbits(sigma, tau) != cycle_partition(nu)) continue;
        auto [v, l] = leading_p_C(sigma, tau);
        CHECK(v == gamma_alternating(nu));
      }
  }

  SUBCASE("matches the alternating route at ell, with sign (-1)^ell") {
    for (const auto& s : all_permutations(3))
      for (const auto& t : all_permutations(3)) {
        PermTuple sigma({s}), tau({t});
        auto [v, l] = leading_p_C(sigma, tau);
        Int expect = p_C_alternating(sigma, tau, l);
        if (l % 2 != 0) expect = -expect;
        CHECK(v == expect);
        CHECK(l == ell(sigma, tau));
      }
  }
}

TEST_CASE("incidence graph") {
  SUBCASE("the five-element two-color figure") {
    SetPartition Pi = parse_set_partition("{1,2,3}{4,5}");
    std::vector<SetPartition> pis = {parse_set_partition("{1,2}{3,4,5}"),
                                     parse_set_partition("{1,2,3,4,5}")};
    std::vector<SetPartition> pics = {parse_set_partition("{1}{2}{3}{4,5}"),
                                      parse_set_partition("{1,2,3}{4,5}")};
    IncidenceGraph g = incidence_graph(Pi, pis, pics);
    CHECK(g.white_vertices == 2);
    CHECK(g.colored_vertices == 3);
    CHECK(g.num_edges() == 6);
    CHECK(g.num_components() == 1);
    CHECK(g.excess() == 2);
    // excess formula for connected graphs
    CHECK(g.excess() == 4 + 2 - 2 - (2 + 1) + 1);
  }

  SUBCASE("everything one block: a D-star tree") {
    for (int D = 1; D <= 3; ++D) {
      SetPartition one = SetPartition::one_block(4);
      std::vector<SetPartition> pis(static_cast<size_t>(D), one), pics(static_cast<size_t>(D), one);
      IncidenceGraph g = incidence_graph(one, pis, pics);
      CHECK(g.white_vertices == 1);
      CHECK(g.colored_vertices == D);
      CHECK(g.num_edges() == D);
      CHECK(g.excess() == 0);
    }
  }

  SUBCASE("containment violations are rejected") {
    SetPartition fine = SetPartition::finest(3);
    SetPartition coarse = SetPartition::one_block(3);
    CHECK_THROWS_AS(incidence_graph(fine, {fine}, {coarse}), DomainError);
  }
}

TEST_CASE("cumulant Weingarten series") {
  SUBCASE("transitive tuples factor into plain Weingarten series") {
    PermTuple sigma({parse_permutation("(1 2 3)"), parse_permutation("(1 2)", 3)});
    PermTuple tau({parse_permutation("(1 3)", 3), parse_permutation("(1 2)", 3)});
    REQUIRE(joint_orbits(sigma, tau).num_blocks() == 1);
    long order = 8;
    LaurentSeries lhs = wc_series(sigma, tau, order, WCRoute::FromPC);
    PermTuple nu = product_with_inverse(sigma, tau);
    LaurentSeries rhs = LaurentSeries::constant(Rat(1), order + 6);
    for (int c = 0; c < 2; ++c) rhs = rhs * weingarten_series(nu.color(c), order);
    CHECK(lhs == rhs.truncated_to(lhs.truncation_order()));
  }

  SUBCASE("equal transitive tuples: N^{-nD} (1 + O(N^{-2}))") {
    PermTuple s({parse_permutation("(1 2 3)"), parse_permutation("(1 2 3)")});
    LaurentSeries w = wc_series(s, s, 4);
    CHECK(w.leading_exponent() == 6);
    CHECK(w.coefficient(6) == 1);
    CHECK(w.coefficient(7) == 0);
  }

  SUBCASE("Moebius route agrees with the p_C route") {
    for (int n = 1; n <= 2; ++n) {
      const auto perms = all_permutations(n);
      for (const auto& s1 : perms)
        for (const auto& t1 : perms)
          for (const auto& s2 : perms)
            for (const auto& t2 : perms) {
              PermTuple sigma({s1, s2}), tau({t1, t2});
              long order = ell(sigma, tau) + 4;
              CHECK(wc_series(sigma, tau, order, WCRoute::FromPC) ==
                    wc_series(sigma, tau, order, WCRoute::MoebiusSum));
            }
    }
    // a couple of three-element spot checks
    PermTuple sigma({parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)")});
    PermTuple tau({parse_permutation("(2 3)", 3), Permutation::identity(3)});
    long order = ell(sigma, tau) + 4;
    CHECK(wc_series(sigma, tau, order, WCRoute::FromPC) ==
          wc_series(sigma, tau, order, WCRoute::MoebiusSum));
  }

  SUBCASE("exact W_C is the Moebius sum over exact Weingarten values") {
    PermTuple sigma({parse_permutation("(1 2 3)"), parse_permutation("(1 2)", 3)});
    PermTuple tau({parse_permutation("(1 3)", 3), parse_permutation("(1 2)", 3)});
    // transitive: W_C == product of exact Weingarten values
    PermTuple nu = product_with_inverse(sigma, tau);
    Rat prod(1);
    for (int c = 0; c < 2; ++c) prod *= weingarten_exact(nu.color(c), Int(5));
    CHECK(wc_exact(sigma, tau, Int(5)) == prod);
    CHECK_THROWS_AS(wc_exact(sigma, tau, Int(2)), DomainError);
  }
}
