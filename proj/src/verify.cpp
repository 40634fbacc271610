#include "tenwein/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "tenwein/constellation.hpp"
#include "tenwein/cumulant_weingarten.hpp"
#include "tenwein/hurwitz.hpp"
#include "tenwein/nodal.hpp"
#include "tenwein/tensor_hciz.hpp"
#include "tenwein/text_io.hpp"
#include "tenwein/weingarten.hpp"

namespace tenwein {

namespace {

void for_each_tuple(int n, int D, const std::function<void(const PermTuple&)>& fn) {
  const auto perms = all_permutations(n);
  std::vector<Permutation> acc(static_cast<size_t>(D), Permutation::identity(n));
  std::function<void(int)> rec = [&](int c) {
    if (c == D) {
      fn(PermTuple(acc));
      return;
    }
    for (const auto& p : perms) {
      acc[static_cast<size_t>(c)] = p;
      rec(c + 1);
    }
  };
  rec(0);
}

std::string tuple_str(const PermTuple& t) {
  std::string s;
  for (int c = 0; c < t.colors(); ++c) {
    if (c) s += " | ";
    s += format_permutation(t.color(c));
  }
  return s;
}

struct Harness {
  SuiteResult result;
  void check(const std::string& name, const std::function<std::string()>& body) {
    CheckResult c;
    c.name = name;
    try {
      c.counterexample = body();  // empty string means pass
      c.pass = c.counterexample.empty();
    } catch (const std::exception& e) {
      c.pass = false;
      c.counterexample = std::string("exception: ") + e.what();
    }
    result.checks.push_back(std::move(c));
  }
};

SuiteResult verify_weingarten(int max_n) {
  Harness h;
  h.result.suite = "weingarten";

  h.check("alternating-sum identity (-1)^l p(nu;l) == sum_k (-1)^k m(nu;l,k)", [&] {
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
      for (const auto& nu : all_permutations(n))
        for (long l = 0; l <= 5; ++l) {
          Int rhs = 0;
          for (long k = 0; k <= l; ++k) {
            Int m = m_count(nu, l, static_cast<int>(k));
            rhs += (k % 2 == 0) ? m : -m;
          }
          Int lhs = p_coeff(nu, l);
          if (l % 2 != 0) lhs = -lhs;
          if (lhs != rhs)
            return "nu=" + format_permutation(nu) + " l=" + std::to_string(l);
        }
    }
    return std::string();
  });

  h.check("convolution identity sum_nu W(nu) N^{#(nu^-1 sigma)} == [sigma==id]", [&] {
    for (int n = 1; n <= std::min(max_n, 4); ++n)
      for (Int N : {Int(4), Int(5), Int(7)}) {
        if (N < n) continue;
        for (const auto& sigma : all_permutations(n)) {
          Rat sum(0);
          for (const auto& nu : all_permutations(n))
            sum += weingarten_exact(nu, N) *
                   Rat(pow_int(N, static_cast<unsigned long>((nu.inverse() * sigma).num_cycles())));
          if (sum != Rat(sigma.is_identity() ? 1 : 0))
            return "n=" + std::to_string(n) + " N=" + N.get_str() +
                   " sigma=" + format_permutation(sigma);
        }
      }
    return std::string();
  });

  h.check("p and W are class functions", [&] {
    std::mt19937 rng(12345);
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
      const auto perms = all_permutations(n);
      std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
      for (int trial = 0; trial < 20; ++trial) {
        const Permutation& nu = perms[pick(rng)];
        const Permutation& g = perms[pick(rng)];
        Permutation conj = nu.conjugated_by(g);
        for (long l = 0; l <= 4; ++l)
          if (p_coeff(nu, l) != p_coeff(conj, l))
            return "p not constant on class of " + format_permutation(nu);
        if (weingarten_exact(nu, Int(n + 1)) != weingarten_exact(conj, Int(n + 1)))
          return "W not constant on class of " + format_permutation(nu);
      }
    }
    return std::string();
  });

  h.check("subleading gap p(nu;||nu||+1) == 0", [&] {
    for (int n = 1; n <= std::min(max_n, 5); ++n)
      for (const auto& nu : all_permutations(n))
        if (p_coeff(nu, nu.length() + 1) != 0) return format_permutation(nu);
    return std::string();
  });

  h.check("series evaluation matches the exact solve within the tail bound", [&] {
    const long order = 12;
    for (int n = 1; n <= std::min(max_n, 4); ++n)
      for (const auto& nu : all_permutations(n)) {
        Int N(10);
        Rat exact = weingarten_exact(nu, N);
        Rat series = weingarten_series(nu, order).evaluate(N);
        Rat diff = exact - series;
        if (diff < 0) diff = -diff;
        // first omitted non-zero term, then the geometric tail factor
        Rat bound(0);
        for (long l = order + 1; l <= order + 2; ++l) {
          Int p = p_coeff(nu, l);
          if (p != 0) {
            bound = Rat(p) / Rat(pow_int(N, static_cast<unsigned long>(n + l)));
            break;
          }
        }
        if (bound == 0) {
          if (diff != 0) return format_permutation(nu) + ": zero tail but nonzero diff";
          continue;
        }
        Rat rho2 = Rat(Int(n - 1) * Int(n - 1), N * N);
        rho2.canonicalize();
        bound = bound * Rat(3, 2) / (Rat(1) - rho2);
        if (diff > bound) return format_permutation(nu) + ": tail exceeds bound";
      }
    return std::string();
  });

  return h.result;
}

SuiteResult verify_pc_routes(int max_n) {
  Harness h;
  h.result.suite = "pc-routes";

  h.check("m_C matches direct enumeration of factorization tuples", [&] {
    for (int n = 1; n <= std::min(max_n, 2); ++n)
      for (int D = 1; D <= 2; ++D) {
        std::string bad;
        for_each_tuple(n, D, [&](const PermTuple& sigma) {
          for_each_tuple(n, D, [&](const PermTuple& tau) {
            if (!bad.empty()) return;
            for (long l = 0; l <= 4 && bad.empty(); ++l)
              for (long k = 0; k <= l && bad.empty(); ++k) {
                Int direct = 0;
                for_each_joint_factorization(sigma, tau, l, k,
                                             [&](const std::vector<Constellation>&) { ++direct; });
                if (m_C(sigma, tau, l, k) != direct)
                  bad = tuple_str(sigma) + " ; " + tuple_str(tau) + " l=" + std::to_string(l) +
                        " k=" + std::to_string(k);
              }
          });
        });
        if (!bad.empty()) return bad;
      }
    return std::string();
  });

  h.check("three routes and the folding route agree", [&] {
    for (int n = 1; n <= std::min(max_n, 3); ++n)
      for (int D = 1; D <= 2; ++D) {
        std::string bad;
        for_each_tuple(n, D, [&](const PermTuple& sigma) {
          for_each_tuple(n, D, [&](const PermTuple& tau) {
            if (!bad.empty()) return;
            const long lmin = ell(sigma, tau);
            for (long l = lmin; l <= lmin + 2 && bad.empty(); ++l) {
              Int a = p_C_alternating(sigma, tau, l);
              Int m = p_C_monotone(sigma, tau, l);
              Int f = p_C_partition_formula(sigma, tau, l);
              Int d = folding_decomposition(sigma, tau, l);
              if (a != m || a != f || a != d)
                bad = tuple_str(sigma) + " ; " + tuple_str(tau) + " l=" + std::to_string(l);
            }
          });
        });
        if (!bad.empty()) return bad;
      }
    return std::string();
  });

  h.check("p_C vanishes below ell and not at ell", [&] {
    for (int n = 1; n <= std::min(max_n, 3); ++n)
      for (int D = 1; D <= 2; ++D) {
        std::string bad;
        for_each_tuple(n, D, [&](const PermTuple& sigma) {
          for_each_tuple(n, D, [&](const PermTuple& tau) {
            if (!bad.empty()) return;
            const long lmin = ell(sigma, tau);
            for (long l = 0; l < lmin; ++l)
              if (p_C_monotone(sigma, tau, l) != 0) {
                bad = tuple_str(sigma) + " ; " + tuple_str(tau) + " l=" + std::to_string(l);
                return;
              }
            if (p_C_monotone(sigma, tau, lmin) == 0)
              bad = tuple_str(sigma) + " ; " + tuple_str(tau) + " at ell";
          });
        });
        if (!bad.empty()) return bad;
      }
    return std::string();
  });

  h.check("simultaneous conjugation invariance", [&] {
    std::mt19937 rng(777);
    for (int n = 2; n <= std::min(max_n, 3); ++n) {
      const auto perms = all_permutations(n);
      std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
      for (int trial = 0; trial < 10; ++trial) {
        PermTuple sigma({perms[pick(rng)], perms[pick(rng)]});
        PermTuple tau({perms[pick(rng)], perms[pick(rng)]});
        const Permutation& g = perms[pick(rng)];
        long l = ell(sigma, tau);
        if (p_C_monotone(sigma, tau, l) !=
            p_C_monotone(sigma.conjugated_by(g), tau.conjugated_by(g), l))
          return tuple_str(sigma) + " ; " + tuple_str(tau);
      }
    }
    return std::string();
  });

  h.check("D=1 collapse to gamma_l when Pi(sigma,tau) == Pi(sigma tau^-1)", [&] {
    for (int n = 1; n <= std::min(max_n, 3); ++n) {
      std::string bad;
      for_each_tuple(n, 1, [&](const PermTuple& sigma) {
        for_each_tuple(n, 1, [&](const PermTuple& tau) {
          if (!bad.empty()) return;
          Permutation nu = sigma.color(0) * tau.color(0).inverse();
          if (joint_orbits(sigma, tau) != cycle_partition(nu)) return;
          for (long l = 0; l <= 5; ++l) {
            Int g = gamma_l(nu, l);
            if (p_C_monotone(sigma, tau, l) != abs(g)) {
              bad = tuple_str(sigma) + " ; " + tuple_str(tau) + " l=" + std::to_string(l);
              return;
            }
          }
        });
      });
      if (!bad.empty()) return bad;
    }
    return std::string();
  });

  return h.result;
}

SuiteResult verify_hurwitz(int max_n) {
  Harness h;
  h.result.suite = "hurwitz";

  h.check("genus-0 closed form == enumerative single Hurwitz numbers", [&] {
    for (int n = 1; n <= std::min(max_n, 4); ++n)
      for (const auto& alpha : all_cycle_types(n))
        if (single_hurwitz(alpha, 0) != single_hurwitz_genus0_closed(alpha))
          return format_cycle_type(alpha);
    return std::string();
  });

  h.check("double numbers from single numbers", [&] {
    for (int n = 1; n <= std::min(max_n, 3); ++n)
      for (const auto& alpha : all_cycle_types(n))
        for (const auto& beta : all_cycle_types(n))
          for (long hh = 0; hh <= 1; ++hh)
            if (double_hurwitz(alpha, beta, hh) != double_from_single(alpha, beta, hh))
              return format_cycle_type(alpha) + " ; " + format_cycle_type(beta) +
                     " h=" + std::to_string(hh);
    return std::string();
  });

  h.check("p_C[nu,id;l] independent of the class representative", [&] {
    for (int n = 1; n <= std::min(max_n, 4); ++n)
      for (const auto& alpha : all_cycle_types(n)) {
        PermTuple id_t({Permutation::identity(n)});
        long l = single_hurwitz_l(alpha, 0);
        Int ref = p_C_partition_formula(PermTuple({alpha.representative()}), id_t, l);
        std::string bad;
        for_each_in_class(alpha, [&](const Permutation& nu) {
          if (!bad.empty()) return;
          if (p_C_partition_formula(PermTuple({nu}), id_t, l) != ref)
            bad = format_permutation(nu);
        });
        if (!bad.empty()) return bad;
      }
    return std::string();
  });

  h.check("BMS alternating sum gives (-1)^l H^l", [&] {
    for (int n = 1; n <= std::min(max_n, 3); ++n)
      for (const auto& alpha : all_cycle_types(n))
        for (const auto& beta : all_cycle_types(n))
          for (long l = 0; l <= 4; ++l) {
            HurwitzQuery q{{alpha}, {beta}};
            Int alt = 0;
            for (long k = 0; k <= l; ++k) {
              Int b = bms_number(q, l, k);
              alt += (k % 2 == 0) ? b : -b;
            }
            Int expect = higher_order_hurwitz(q, l);
            if (l % 2 != 0) expect = -expect;
            if (alt != expect)
              return format_cycle_type(alpha) + " ; " + format_cycle_type(beta) +
                     " l=" + std::to_string(l);
          }
    return std::string();
  });

  return h.result;
}

SuiteResult verify_nodal(int max_n) {
  Harness h;
  h.result.suite = "nodal";

  h.check("genus additivity and the length relation on enumerated tuples", [&] {
    for (int n = 1; n <= std::min(max_n, 2); ++n)
      for (int D = 1; D <= 2; ++D) {
        std::string bad;
        for_each_tuple(n, D, [&](const PermTuple& sigma) {
          for_each_tuple(n, D, [&](const PermTuple& tau) {
            if (!bad.empty()) return;
            const long lmin = ell(sigma, tau);
            const int base = arithmetic_genus(sigma, tau);
            PermTuple nu = product_with_inverse(sigma, tau);
            for (long l = lmin; l <= lmin + 2 && bad.empty(); ++l) {
              for_each_joint_factorization(
                  sigma, tau, l, std::nullopt, [&](const std::vector<Constellation>& etas) {
                    if (!bad.empty()) return;
                    int joint = arithmetic_genus_joint(sigma, tau, etas);
                    // l = sum_c [#(sigma_c)+#(tau_c)] + 2G - 2 - 2n(D-1)
                    long cyc = 0;
                    for (int c = 0; c < D; ++c)
                      cyc += sigma.color(c).num_cycles() + tau.color(c).num_cycles();
                    if (l != cyc + 2L * joint - 2 - 2L * n * (D - 1)) {
                      bad = "length relation: " + tuple_str(sigma) + " ; " + tuple_str(tau);
                      return;
                    }
                    // G(sigma,tau,eta) - G(sigma,tau) = sum_c g(eta^c) + excess
                    std::vector<SetPartition> pis, pics;
                    int genus_sum = 0;
                    for (int c = 0; c < D; ++c) {
                      pis.push_back(etas[static_cast<size_t>(c)].orbit_partition());
                      pics.push_back(cycle_partition(nu.color(c)));
                      genus_sum += etas[static_cast<size_t>(c)].genus();
                    }
                    long excess =
                        incidence_graph(joint_orbits(sigma, tau), pis, pics).excess();
                    if (joint - base != genus_sum + excess)
                      bad = "genus additivity: " + tuple_str(sigma) + " ; " + tuple_str(tau);
                  });
            }
          });
        });
        if (!bad.empty()) return bad;
      }
    return std::string();
  });

  h.check("covering counts are integral after scaling by n!", [&] {
    for (int n = 2; n <= std::min(max_n, 3); ++n)
      for (const auto& alpha : all_cycle_types(n)) {
        if (alpha.is_trivial()) continue;
        HurwitzQuery q{{alpha}, {alpha}};
        for (long l = 0; l <= 4; ++l) {
          long parts = 2L * alpha.num_parts();
          long twice_h = l - parts + 2;
          if (twice_h < 0 || twice_h % 2 != 0) continue;
          for (long k = 0; k <= l; ++k) {
            Rat c = covering_count(q, k, l, false);
            if (Rat(c * Rat(factorial(n))).get_den() != 1)
              return format_cycle_type(alpha) + " l=" + std::to_string(l);
          }
        }
      }
    return std::string();
  });

  h.check("folding route equals the partition formula", [&] {
    for (int n = 1; n <= std::min(max_n, 3); ++n) {
      std::string bad;
      for_each_tuple(n, 1, [&](const PermTuple& sigma) {
        for_each_tuple(n, 1, [&](const PermTuple& tau) {
          if (!bad.empty()) return;
          const long lmin = ell(sigma, tau);
          for (long l = lmin; l <= lmin + 2; ++l)
            if (folding_decomposition(sigma, tau, l) != p_C_partition_formula(sigma, tau, l)) {
              bad = tuple_str(sigma) + " ; " + tuple_str(tau) + " l=" + std::to_string(l);
              return;
            }
        });
      });
      if (!bad.empty()) return bad;
    }
    return std::string();
  });

  return h.result;
}

SuiteResult verify_hciz(int max_n) {
  Harness h;
  h.result.suite = "hciz";

  h.check("moments of identity tensors equal N^{nD}", [&] {
    for (int D = 1; D <= 2; ++D)
      for (int n = 1; n <= std::min(max_n, 3); ++n)
        for (int N = n; N <= n + 1; ++N) {
          RatTensor id = RatTensor::identity(N, D);
          Rat m = hciz_moment(id, id, n, Int(N));
          if (m != Rat(pow_int(Int(N), static_cast<unsigned long>(n * D))))
            return "n=" + std::to_string(n) + " N=" + std::to_string(N) +
                   " D=" + std::to_string(D);
        }
    return std::string();
  });

  h.check("cumulants of identity tensors vanish for n >= 2", [&] {
    for (int D = 1; D <= 2; ++D)
      for (int n = 2; n <= std::min(max_n, 3); ++n) {
        int N = n + 1;
        RatTensor id = RatTensor::identity(N, D);
        if (hciz_cumulant(id, id, n, Int(N)) != 0)
          return "n=" + std::to_string(n) + " D=" + std::to_string(D);
      }
    return std::string();
  });

  h.check("moment-cumulant inversion on the partition lattice", [&] {
    // diagonal rational tensors, D=1
    const int N = 3;
    std::vector<Rat> ea(static_cast<size_t>(N * N), Rat(0));
    std::vector<Rat> eb(static_cast<size_t>(N * N), Rat(0));
    ea[0] = Rat(1, 2);
    ea[4] = Rat(-1, 3);
    ea[8] = Rat(2);
    eb[0] = Rat(1);
    eb[4] = Rat(3, 5);
    eb[8] = Rat(-1, 7);
    RatTensor A(N, 1, std::move(ea)), B(N, 1, std::move(eb));
    for (int n = 1; n <= std::min(max_n, 3); ++n) {
      Rat moment = hciz_moment(A, B, n, Int(N));
      Rat sum(0);
      for (const auto& pi : all_partitions(n)) {
        Rat prod(1);
        for (const auto& blk : pi.blocks())
          prod *= hciz_cumulant(A, B, static_cast<int>(blk.size()), Int(N));
        sum += prod;
      }
      if (sum != moment) return "n=" + std::to_string(n);
    }
    return std::string();
  });

  h.check("Monte Carlo concordance with the exact moment", [&] {
    const int N = 2, n = 2;
    std::vector<Rat> ea = {Rat(1, 2), Rat(1, 3), Rat(1, 3), Rat(-1)};
    std::vector<Rat> eb = {Rat(2), Rat(-1, 5), Rat(-1, 5), Rat(1, 4)};
    RatTensor A(N, 1, std::move(ea)), B(N, 1, std::move(eb));
    Rat exact = hciz_moment(A, B, n, Int(N));
    auto mc = haar_sample_moment(to_complex(A), to_complex(B), n, N, 20000, 42, 2);
    double err = std::abs(mc.estimate - std::complex<double>(exact.get_d(), 0.0));
    if (err > 4 * mc.standard_error + 1e-12) return std::string("estimate outside 4 sigma");
    auto mc2 = haar_sample_moment(to_complex(A), to_complex(B), n, N, 20000, 42, 4);
    if (mc.estimate != mc2.estimate) return std::string("seeded runs differ across job counts");
    return std::string();
  });

  return h.result;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"weingarten", "pc-routes", "hurwitz", "nodal", "hciz"};
}

SuiteResult run_verify_suite(const std::string& suite, int max_n) {
  require(max_n >= 1, "max_n must be >= 1");
  if (suite == "weingarten") return verify_weingarten(max_n);
  if (suite == "pc-routes") return verify_pc_routes(max_n);
  if (suite == "hurwitz") return verify_hurwitz(max_n);
  if (suite == "nodal") return verify_nodal(max_n);
  if (suite == "hciz") return verify_hciz(max_n);
  throw DomainError("unknown verify suite '" + suite + "'");
}

}  // namespace tenwein
