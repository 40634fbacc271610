#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "tenwein/tensor_hciz.hpp"
#include "tenwein/text_io.hpp"

using namespace tenwein;

namespace {

RatTensor random_symmetric(int N, int D, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-6, 6);
  long dim = 1;
  for (int i = 0; i < D; ++i) dim *= N;
  std::vector<Rat> e(static_cast<size_t>(dim * dim), Rat(0));
  for (long r = 0; r < dim; ++r)
    for (long c = r; c < dim; ++c) {
      Rat v(num(rng), 7);
      v.canonicalize();
      e[static_cast<size_t>(r * dim + c)] = v;
      e[static_cast<size_t>(c * dim + r)] = v;
    }
  return RatTensor(N, D, std::move(e));
}

Rat matrix_power_trace(const RatTensor& a, int p) {
  const long dim = a.dim();
  std::vector<Rat> m(static_cast<size_t>(dim * dim), Rat(0));
  for (long i = 0; i < dim; ++i) m[static_cast<size_t>(i * dim + i)] = Rat(1);
  for (int step = 0; step < p; ++step) {
    std::vector<Rat> next(static_cast<size_t>(dim * dim), Rat(0));
    for (long i = 0; i < dim; ++i)
      for (long k = 0; k < dim; ++k) {
        if (m[static_cast<size_t>(i * dim + k)] == 0) continue;
        for (long j = 0; j < dim; ++j)
          next[static_cast<size_t>(i * dim + j)] +=
              m[static_cast<size_t>(i * dim + k)] * a.at(k, j);
      }
    m = std::move(next);
  }
  Rat tr(0);
  for (long i = 0; i < dim; ++i) tr += m[static_cast<size_t>(i * dim + i)];
  return tr;
}

}  // namespace

TEST_CASE("trace invariants") {
  SUBCASE("D=1: product of traces of powers over the cycle type") {
    RatTensor a = random_symmetric(2, 1, 1);
    PermTuple s({parse_permutation("(1 2 3)(4 5)")});
    CHECK(trace_invariant(a, s) == matrix_power_trace(a, 3) * matrix_power_trace(a, 2));
    PermTuple t({parse_permutation("(1 2)")});
    CHECK(trace_invariant(a, t) == matrix_power_trace(a, 2));
  }

  SUBCASE("equal colors: traces over the full N^D dimension") {
    RatTensor a = random_symmetric(2, 2, 2);
    Permutation c3 = parse_permutation("(1 2 3)");
    PermTuple s({c3, c3});
    CHECK(trace_invariant(a, s) == matrix_power_trace(a, 3));
    PermTuple mixed({parse_permutation("(1 2)", 2), Permutation::identity(2)});
    // partial traces: Tr_1[Tr_2(A) Tr_2(A)] computed directly
    Rat expect(0);
    for (int a1 = 0; a1 < 2; ++a1)
      for (int b1 = 0; b1 < 2; ++b1) {
        Rat p1(0), p2(0);
        for (int a2 = 0; a2 < 2; ++a2) p1 += a.at(b1 * 2 + a2, a1 * 2 + a2);
        for (int b2 = 0; b2 < 2; ++b2) p2 += a.at(a1 * 2 + b2, b1 * 2 + b2);
        expect += p1 * p2;
      }
    CHECK(trace_invariant(a, mixed) == expect);
  }

  SUBCASE("identity tensor: one free loop per cycle per color") {
    for (int D = 1; D <= 2; ++D)
      for (int N = 2; N <= 3; ++N) {
        RatTensor id = RatTensor::identity(N, D);
        PermTuple s(std::vector<Permutation>(static_cast<size_t>(D),
                                             parse_permutation("(1 2)(3)")));
        int cycles = 2 * D;
        CHECK(trace_invariant(id, s) ==
              Rat(pow_int(Int(N), static_cast<unsigned long>(cycles))));
      }
  }

  SUBCASE("invariance under tensor-factorized unitary conjugation") {
    // U = U1 x U2 with rotation factors
    const int N = 2;
    auto rot = [](double th) {
      Eigen::Matrix2cd m;
      m << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
      return m;
    };
    Eigen::Matrix2cd u1 = rot(0.7), u2 = rot(-1.2);
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) u.block(i * 2, j * 2, 2, 2) = u1(i, j) * u2;
    CplxTensor a = to_complex(random_symmetric(N, 2, 3));
    Eigen::Matrix4cd am;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) am(r, c) = a.at(r, c);
    Eigen::Matrix4cd conj = u * am * u.adjoint();
    std::vector<std::complex<double>> ce(16);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) ce[static_cast<size_t>(r * 4 + c)] = conj(r, c);
    CplxTensor ac(N, 2, std::move(ce));
    PermTuple s({parse_permutation("(1 2)"), Permutation::identity(2)});
    CHECK(std::abs(trace_invariant(a, s) - trace_invariant(ac, s)) < 1e-9);
  }

  SUBCASE("shape mismatch is rejected") {
    RatTensor a = RatTensor::identity(2, 1);
    CHECK_THROWS_AS(trace_invariant(a, PermTuple({Permutation::identity(2),
                                                  Permutation::identity(2)})),
                    DomainError);
  }
}

TEST_CASE("moments of the tensor HCIZ integral") {
  SUBCASE("identity tensors give N^{nD} exactly") {
    for (int D = 1; D <= 2; ++D)
      for (int n = 1; n <= 2; ++n)
        for (int N = n; N <= n + 2; ++N) {
          RatTensor id = RatTensor::identity(N, D);
          CHECK(hciz_moment(id, id, n, Int(N)) ==
                Rat(pow_int(Int(N), static_cast<unsigned long>(n * D))));
        }
  }

  SUBCASE("first moment factorizes as Tr(A)Tr(B)/N") {
    RatTensor a = random_symmetric(3, 1, 4);
    RatTensor b = random_symmetric(3, 1, 5);
    Rat expect = matrix_power_trace(a, 1) * matrix_power_trace(b, 1) / Rat(3);
    CHECK(hciz_moment(a, b, 1, Int(3)) == expect);
  }

  SUBCASE("N below n is rejected") {
    RatTensor id = RatTensor::identity(2, 1);
    CHECK_THROWS_AS(hciz_moment(id, id, 3, Int(2)), DomainError);
  }

  SUBCASE("swapping A and B preserves the moments") {
    RatTensor a = random_symmetric(3, 1, 6);
    RatTensor b = random_symmetric(3, 1, 7);
    for (int n = 1; n <= 2; ++n)
      CHECK(hciz_moment(a, b, n, Int(3)) == hciz_moment(b, a, n, Int(3)));
  }
}

TEST_CASE("cumulants of the tensor HCIZ integral") {
  SUBCASE("identity tensors: constants have no higher cumulants") {
    for (int D = 1; D <= 2; ++D)
      for (int n = 2; n <= 3; ++n) {
        RatTensor id = RatTensor::identity(n + 1, D);
        CHECK(hciz_cumulant(id, id, n, Int(n + 1)) == 0);
      }
  }

  SUBCASE("the first cumulant is the mean") {
    RatTensor a = random_symmetric(2, 1, 8);
    RatTensor b = random_symmetric(2, 1, 9);
    CHECK(hciz_cumulant(a, b, 1, Int(2)) == hciz_moment(a, b, 1, Int(2)));
  }

  SUBCASE("moment-cumulant inversion for a rational pair") {
    RatTensor a = random_symmetric(3, 1, 10);
    RatTensor b = random_symmetric(3, 1, 11);
    for (int n = 1; n <= 3; ++n) {
      Rat moment = hciz_moment(a, b, n, Int(3));
      Rat sum(0);
      for (const auto& pi : all_partitions(n)) {
        Rat prod(1);
        for (const auto& blk : pi.blocks())
          prod *= hciz_cumulant(a, b, static_cast<int>(blk.size()), Int(3));
        sum += prod;
      }
      CHECK(sum == moment);
    }
  }
}

TEST_CASE("Haar-sampled moments") {
  SUBCASE("identity tensors sample a constant") {
    CplxTensor id = CplxTensor::identity(2, 2);
    auto mc = haar_sample_moment(id, id, 2, 2, 512, 7);
    CHECK(mc.estimate.real() == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(mc.standard_error == doctest::Approx(0.0).epsilon(1e-9));
  }

  SUBCASE("seed determinism, independent of the job count") {
    CplxTensor a = to_complex(random_symmetric(2, 1, 12));
    CplxTensor b = to_complex(random_symmetric(2, 1, 13));
    auto m1 = haar_sample_moment(a, b, 2, 2, 10000, 99, 1);
    auto m2 = haar_sample_moment(a, b, 2, 2, 10000, 99, 4);
    CHECK(m1.estimate == m2.estimate);
    CHECK(m1.standard_error == m2.standard_error);
    auto m3 = haar_sample_moment(a, b, 2, 2, 10000, 100, 1);
    CHECK(m1.estimate != m3.estimate);
  }

  SUBCASE("estimates land within four standard errors of the exact value") {
    RatTensor a = random_symmetric(2, 2, 14);
    RatTensor b = random_symmetric(2, 2, 15);
    Rat exact = hciz_moment(a, b, 1, Int(2));
    auto mc = haar_sample_moment(to_complex(a), to_complex(b), 1, 2, 100000, 1234, 2);
    CHECK(std::abs(mc.estimate - std::complex<double>(exact.get_d(), 0.0)) <=
          4 * mc.standard_error + 1e-12);
  }
}

TEST_CASE("tensor files") {
  SUBCASE("exact entries") {
    LoadedTensor t = parse_tensor(R"({"n":2,"d":1,"entries":["1/2","-3","-3","2"]})");
    CHECK(t.exact);
    CHECK(t.rational().at(0, 0) == Rat(1, 2));
    CHECK(t.rational().at(1, 0) == Rat(-3));
  }

  SUBCASE("floating entries with [re,im] pairs") {
    LoadedTensor t =
        parse_tensor(R"({"n":2,"d":1,"entries":[1.0,[0.25,0.5],[0.25,-0.5],2.0]})");
    CHECK(!t.exact);
    CHECK(t.complex().at(0, 1) == std::complex<double>(0.25, 0.5));
  }

  SUBCASE("self-adjointness is enforced") {
    CHECK_THROWS_AS(parse_tensor(R"({"n":2,"d":1,"entries":["1","2","3","4"]})"), DomainError);
    CHECK_THROWS_AS(parse_tensor(R"({"n":2,"d":1,"entries":[1.0,[0.0,0.5],[0.0,0.5],2.0]})"),
                    DomainError);
  }

  SUBCASE("malformed input") {
    CHECK_THROWS_AS(parse_tensor("not json"), ParseError);
    CHECK_THROWS_AS(parse_tensor(R"({"n":2,"d":1,"entries":[1,2,3]})"), ParseError);
    CHECK_THROWS_AS(parse_tensor(R"({"n":2,"entries":[]})"), ParseError);
    CHECK_THROWS_AS(load_tensor("/nonexistent/tensor.json"), ParseError);
  }
}
