#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "tenwein/text_io.hpp"
#include "tenwein/weingarten.hpp"

using namespace tenwein;

namespace {

// literal enumeration of weakly monotone transposition tuples, as a slow
// oracle for the tabulated p(nu;l)
Int p_by_enumeration(const Permutation& nu, long l) {
  const int n = nu.degree();
  Int count = 0;
  std::function<void(const Permutation&, long, int)> rec = [&](const Permutation& prod,
                                                               long used, int last_max) {
    if (used == l) {
      if (prod == nu) ++count;
      return;
    }
    for (int q = last_max; q <= n; ++q)
      for (int p = 1; p < q; ++p) {
        std::vector<int> im(static_cast<size_t>(n));
        for (int v = 1; v <= n; ++v) im[static_cast<size_t>(v) - 1] = v;
        std::swap(im[static_cast<size_t>(p) - 1], im[static_cast<size_t>(q) - 1]);
        rec(prod * Permutation(im), used + 1, q);
      }
  };
  rec(Permutation::identity(n), 0, 2);
  return count;
}

}  // namespace

TEST_CASE("m(nu;l,k) boundary values") {
  CHECK(m_count(Permutation::identity(3), 0, 0) == 1);
  CHECK(m_count(Permutation::identity(3), 0, 1) == 0);
  CHECK(m_count(parse_permutation("(1 2)", 3), 1, 1) == 1);
  CHECK(m_count(Permutation::identity(2), 2, 2) == 1);  // ((12),(12))
  // k=1 column: m(nu;l,1) = [l == ||nu||] for nu != id
  for (const auto& nu : all_permutations(3)) {
    if (nu.is_identity()) continue;
    for (long l = 0; l <= 3; ++l)
      CHECK(m_count(nu, l, 1) == ((l == nu.length()) ? 1 : 0));
  }
}

TEST_CASE("monotone factorization counts") {
  SUBCASE("boundary rows") {
    for (const auto& nu : all_permutations(3)) {
      CHECK(p_coeff(nu, 0) == (nu.is_identity() ? 1 : 0));
      CHECK(p_coeff(nu, 1) == (nu.length() == 1 ? 1 : 0));
    }
  }

  SUBCASE("only (12)(12)(12) reaches (12) in three steps in S_2") {
    CHECK(p_coeff(parse_permutation("(1 2)"), 3) == 1);
  }

  SUBCASE("no transpositions exist on one element") {
    CHECK(p_coeff(Permutation::identity(1), 0) == 1);
    for (long l = 1; l <= 5; ++l) CHECK(p_coeff(Permutation::identity(1), l) == 0);
  }

  SUBCASE("table matches literal enumeration") {
    for (int n = 2; n <= 4; ++n)
      for (const auto& nu : all_permutations(n))
        for (long l = 0; l <= 4; ++l)
          CHECK(p_coeff(nu, l) == p_by_enumeration(nu, l));
  }

  SUBCASE("parity: p vanishes off the parity of ||nu||") {
    for (const auto& nu : all_permutations(4))
      for (long l = 0; l <= 6; ++l)
        if ((l - nu.length()) % 2 != 0) CHECK(p_coeff(nu, l) == 0);
  }

  SUBCASE("alternating sum of m equals the signed p") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& nu : all_permutations(n))
        for (long l = 0; l <= 5; ++l) {
          Int rhs = 0;
          for (long k = 0; k <= l; ++k) {
            Int m = m_count(nu, l, static_cast<int>(k));
            rhs += (k % 2 == 0) ? m : -m;
          }
          Int lhs = p_coeff(nu, l);
          if (l % 2 != 0) lhs = -lhs;
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("Weingarten series") {
  SUBCASE("degree 1 is exactly 1/N") {
    LaurentSeries s = weingarten_series(Permutation::identity(1), 8);
    CHECK(s.leading_exponent() == 1);
    CHECK(s.coefficients().size() == 1);
    CHECK(s.coefficient(1) == 1);
  }

  SUBCASE("leading term of a transposition is -N^{-3}") {
    LaurentSeries s = weingarten_series(parse_permutation("(1 2)"), 6);
    CHECK(s.leading_exponent() == 3);
    CHECK(s.coefficient(3) == -1);
    auto [m, e] = weingarten_asymptotic(parse_permutation("(1 2)"));
    CHECK(m == -1);
    CHECK(e == 3);
  }

  SUBCASE("asymptotics") {
    auto [m1, e1] = weingarten_asymptotic(Permutation::identity(4));
    CHECK(m1 == 1);
    CHECK(e1 == 4);
    auto [m2, e2] = weingarten_asymptotic(parse_permutation("(1 2 3)(4 5)"));
    CHECK(m2 == -2);
    CHECK(e2 == 8);
  }
}

TEST_CASE("exact Weingarten values from the convolution solve") {
  SUBCASE("closed forms at small degree") {
    CHECK(weingarten_exact(Permutation::identity(1), Int(7)) == Rat(1, 7));
    for (long N = 2; N <= 6; ++N) {
      Rat denom(N * (N * N - 1));
      CHECK(weingarten_exact(Permutation::identity(2), Int(N)) == Rat(N) / denom);
      CHECK(weingarten_exact(parse_permutation("(1 2)"), Int(N)) == Rat(-1) / denom);
    }
  }

  SUBCASE("N below n is rejected") {
    CHECK_THROWS_AS(weingarten_exact(Permutation::identity(3), Int(2)), DomainError);
  }

  SUBCASE("convolution identity holds exactly") {
    for (int n = 1; n <= 3; ++n)
      for (Int N : {Int(4), Int(5), Int(7)})
        for (const auto& sigma : all_permutations(n)) {
          Rat sum(0);
          for (const auto& nu : all_permutations(n))
            sum += weingarten_exact(nu, N) *
                   Rat(pow_int(N, static_cast<unsigned long>((nu.inverse() * sigma).num_cycles())));
          CHECK(sum == Rat(sigma.is_identity() ? 1 : 0));
        }
  }

  SUBCASE("class function property, sampled") {
    std::mt19937 rng(5);
    for (int n = 2; n <= 5; ++n) {
      auto sn = all_permutations(n);
      std::uniform_int_distribution<size_t> pick(0, sn.size() - 1);
      for (int i = 0; i < 5; ++i) {
        const Permutation& nu = sn[pick(rng)];
        const Permutation& g = sn[pick(rng)];
        CHECK(weingarten_exact(nu, Int(n + 2)) ==
              weingarten_exact(nu.conjugated_by(g), Int(n + 2)));
      }
    }
  }

  SUBCASE("series evaluation approaches the exact value") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& nu : all_permutations(n)) {
        Int N(10);
        Rat exact = weingarten_exact(nu, N);
        Rat series = weingarten_series(nu, 12).evaluate(N);
        Rat diff = exact - series;
        if (diff < 0) diff = -diff;
        // the tail starts at the first omitted non-zero term
        Rat bound(0);
        for (long l = 13; l <= 14; ++l) {
          Int p = p_coeff(nu, l);
          if (p != 0) {
            bound = Rat(p) / Rat(pow_int(N, static_cast<unsigned long>(n + l)));
            break;
          }
        }
        if (bound == 0) {
          CHECK(diff == 0);
        } else {
          Rat rho2 = Rat(Int(n - 1) * Int(n - 1), N * N);
          rho2.canonicalize();
          CHECK(diff <= bound * Rat(3, 2) / (Rat(1) - rho2));
        }
      }
  }
}
