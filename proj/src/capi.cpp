#include "tenwein.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "tenwein/constellation.hpp"
#include "tenwein/cumulant_weingarten.hpp"
#include "tenwein/errors.hpp"
#include "tenwein/hurwitz.hpp"
#include "tenwein/nodal.hpp"
#include "tenwein/tensor_hciz.hpp"
#include "tenwein/text_io.hpp"
#include "tenwein/verify.hpp"
#include "tenwein/weingarten.hpp"

#define TW_API __attribute__((visibility("default")))

using nlohmann::json;
using namespace tenwein;

namespace {

struct Budgets {
  int max_n = 5;
  int max_d = 3;
  int max_l = 8;
  int max_k = 8;
  bool unsafe = false;
};

constexpr int kHardN = 7, kHardD = 4, kHardL = 20, kHardK = 20;

}  // namespace

struct tw_context {
  Budgets budgets;
  int jobs = 1;
  std::string last_error;
};

namespace {

json int_json(const Int& v) {
  if (v >= Int(-((1L << 53) - 1)) && v <= Int((1L << 53) - 1))
    return json(v.get_si());
  return json(v.get_str());
}

json rat_json(const Rat& v) { return json(to_string(v)); }

json series_json(const LaurentSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_string(c));
  json out;
  out["leading_exponent"] = s.is_zero() ? json(nullptr) : json(s.leading_exponent());
  out["coefficients"] = coeffs;
  out["truncation_order"] = s.truncation_order();
  return out;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(tw_context* ctx, int code, const char* kind, const std::string& msg) {
  if (ctx) {
    json e;
    e["error"] = msg;
    e["kind"] = kind;
    ctx->last_error = e.dump();
  }
  return code;
}

template <typename Fn>
int run(tw_context* ctx, const char* command, char** out, Fn&& body) {
  if (!ctx || !out) return TW_ERROR_INTERNAL;
  *out = nullptr;
  ctx->last_error.clear();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    json inputs;
    json value;
    const char* kind = body(inputs, value);
    json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["value"] = value;
    doc["value_kind"] = kind;
    doc["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    *out = dup_string(doc.dump());
    if (!*out) return fail(ctx, TW_ERROR_INTERNAL, "internal", "out of memory");
    return TW_OK;
  } catch (const ParseError& e) {
    return fail(ctx, TW_ERROR_PARSE, "parse", e.what());
  } catch (const BudgetError& e) {
    return fail(ctx, TW_ERROR_BUDGET, "budget", e.what());
  } catch (const DomainError& e) {
    return fail(ctx, TW_ERROR_DOMAIN, "domain", e.what());
  } catch (const std::exception& e) {
    return fail(ctx, TW_ERROR_INTERNAL, "internal", e.what());
  }
}

void check_budget(const tw_context* ctx, int n, int d, long l, long k) {
  const Budgets& b = ctx->budgets;
  if (n > b.max_n)
    throw BudgetError("degree n=" + std::to_string(n) + " exceeds the budget max_n=" +
                      std::to_string(b.max_n) + " (see --unsafe-budget)");
  if (d > b.max_d)
    throw BudgetError("color count D=" + std::to_string(d) + " exceeds the budget max_d=" +
                      std::to_string(b.max_d));
  if (l > b.max_l)
    throw BudgetError("l=" + std::to_string(l) + " exceeds the budget max_l=" +
                      std::to_string(b.max_l));
  if (k > b.max_k)
    throw BudgetError("k=" + std::to_string(k) + " exceeds the budget max_k=" +
                      std::to_string(b.max_k));
}

std::vector<Permutation> parse_tuple(const char* const* texts, int count) {
  if (!texts || count < 1) throw ParseError("at least one permutation required");
  std::vector<Permutation> ps;
  for (int i = 0; i < count; ++i) {
    if (!texts[i]) throw ParseError("null permutation string");
    ps.push_back(parse_permutation(texts[i]));
  }
  return unify_degrees(std::move(ps));
}

std::vector<CycleType> parse_types(const char* const* texts, int count) {
  if (!texts || count < 1) throw ParseError("at least one cycle type required");
  std::vector<CycleType> ts;
  for (int i = 0; i < count; ++i) {
    if (!texts[i]) throw ParseError("null cycle type string");
    ts.push_back(parse_cycle_type(texts[i]));
  }
  return ts;
}

json tuple_inputs(const std::vector<Permutation>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(format_permutation(p));
  return arr;
}

}  // namespace

extern "C" {

TW_API tw_context* tw_context_create(void) { return new (std::nothrow) tw_context(); }

TW_API void tw_context_destroy(tw_context* ctx) { delete ctx; }

TW_API int tw_context_set_budgets(tw_context* ctx, int max_n, int max_d, int max_l, int max_k) {
  if (!ctx) return TW_ERROR_INTERNAL;
  Budgets next = ctx->budgets;
  if (max_n >= 0) next.max_n = max_n;
  if (max_d >= 0) next.max_d = max_d;
  if (max_l >= 0) next.max_l = max_l;
  if (max_k >= 0) next.max_k = max_k;
  const Budgets defaults;
  if (!next.unsafe && (next.max_n > defaults.max_n || next.max_d > defaults.max_d ||
                       next.max_l > defaults.max_l || next.max_k > defaults.max_k))
    return fail(ctx, TW_ERROR_BUDGET, "budget",
                "raising budgets past the defaults requires unsafe mode");
  if (next.max_n > kHardN || next.max_d > kHardD || next.max_l > kHardL || next.max_k > kHardK)
    return fail(ctx, TW_ERROR_BUDGET, "budget", "budget exceeds the hard caps");
  ctx->budgets = next;
  return TW_OK;
}

TW_API int tw_context_set_unsafe(tw_context* ctx, int unsafe) {
  if (!ctx) return TW_ERROR_INTERNAL;
  ctx->budgets.unsafe = unsafe != 0;
  return TW_OK;
}

TW_API int tw_context_set_jobs(tw_context* ctx, int jobs) {
  if (!ctx) return TW_ERROR_INTERNAL;
  if (jobs < 1) return fail(ctx, TW_ERROR_DOMAIN, "domain", "jobs must be >= 1");
  ctx->jobs = jobs;
  return TW_OK;
}

TW_API const char* tw_context_last_error(const tw_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

TW_API void tw_string_free(char* s) { std::free(s); }

TW_API int tw_weingarten_series(tw_context* ctx, const char* perm, long order, char** out) {
  return run(ctx, "weingarten", out, [&](json& inputs, json& value) {
    if (!perm) throw ParseError("null permutation");
    Permutation nu = parse_permutation(perm);
    check_budget(ctx, nu.degree(), 1, order, 0);
    inputs["perm"] = format_permutation(nu);
    inputs["mode"] = "series";
    inputs["order"] = order;
    value = series_json(weingarten_series(nu, order));
    return "laurent_series";
  });
}

TW_API int tw_weingarten_exact(tw_context* ctx, const char* perm, long big_n, char** out) {
  return run(ctx, "weingarten", out, [&](json& inputs, json& value) {
    if (!perm) throw ParseError("null permutation");
    Permutation nu = parse_permutation(perm);
    check_budget(ctx, nu.degree(), 1, 0, 0);
    if (big_n < 1) throw DomainError("N must be >= 1");
    inputs["perm"] = format_permutation(nu);
    inputs["mode"] = "exact";
    inputs["N"] = big_n;
    value = rat_json(weingarten_exact(nu, Int(big_n)));
    return "rational";
  });
}

TW_API int tw_weingarten_asymptotic(tw_context* ctx, const char* perm, char** out) {
  return run(ctx, "weingarten", out, [&](json& inputs, json& value) {
    if (!perm) throw ParseError("null permutation");
    Permutation nu = parse_permutation(perm);
    check_budget(ctx, nu.degree(), 1, 0, 0);
    inputs["perm"] = format_permutation(nu);
    inputs["mode"] = "asymptotic";
    auto [coeff, expo] = weingarten_asymptotic(nu);
    value["leading_coefficient"] = int_json(coeff);
    value["inverse_power"] = expo;
    return "integer";
  });
}

TW_API int tw_pc(tw_context* ctx, const char* const* sigma, const char* const* tau, int colors,
                 long l, const char* route, char** out) {
  return run(ctx, "pc", out, [&](json& inputs, json& value) {
    auto sp = parse_tuple(sigma, colors);
    auto tp = parse_tuple(tau, colors);
    std::vector<Permutation> all = sp;
    all.insert(all.end(), tp.begin(), tp.end());
    all = unify_degrees(std::move(all));
    sp.assign(all.begin(), all.begin() + colors);
    tp.assign(all.begin() + colors, all.end());
    PermTuple st(sp), tt(tp);
    check_budget(ctx, st.degree(), colors, l, 0);
    if (l < 0) throw DomainError("l must be >= 0");
    std::string r = route ? route : "all";
    inputs["sigma"] = tuple_inputs(sp);
    inputs["tau"] = tuple_inputs(tp);
    inputs["l"] = l;
    inputs["route"] = r;
    inputs["ell"] = ell(st, tt);
    if (r == "alternating")
      value = int_json(p_C_alternating(st, tt, l));
    else if (r == "monotone")
      value = int_json(p_C_monotone(st, tt, l));
    else if (r == "partition")
      value = int_json(p_C_partition_formula(st, tt, l));
    else if (r == "folding")
      value = int_json(folding_decomposition(st, tt, l));
    else if (r == "all") {
      Int a = p_C_alternating(st, tt, l);
      Int m = p_C_monotone(st, tt, l);
      Int p = p_C_partition_formula(st, tt, l);
      Int f = folding_decomposition(st, tt, l);
      value["alternating"] = int_json(a);
      value["monotone"] = int_json(m);
      value["partition"] = int_json(p);
      value["folding"] = int_json(f);
      value["agree"] = (a == m && a == p && a == f);
    } else {
      throw ParseError("unknown route '" + r + "'");
    }
    return "integer";
  });
}

TW_API int tw_hurwitz(tw_context* ctx, const char* which, const char* const* alphas,
                      const char* const* betas, int colors, long genus_or_l, int is_l,
                      int from_single, char** out) {
  return run(ctx, "hurwitz", out, [&](json& inputs, json& value) {
    if (!which) throw ParseError("missing hurwitz kind");
    std::string w = which;
    auto as = parse_types(alphas, colors);
    inputs["kind"] = w;
    json ja = json::array();
    for (const auto& a : as) ja.push_back(format_cycle_type(a));
    inputs["alpha"] = ja;

    if (w == "single") {
      if (colors != 1) throw DomainError("single Hurwitz numbers take one profile");
      const CycleType& alpha = as[0];
      long h;
      if (is_l) {
        long l = genus_or_l;
        long twice_h = l - alpha.num_parts() - alpha.n() + 2;
        if (twice_h < 0 || twice_h % 2 != 0)
          throw DomainError("l is inconsistent with the Riemann-Hurwitz relation");
        h = twice_h / 2;
      } else {
        h = genus_or_l;
      }
      long l = single_hurwitz_l(alpha, h);
      check_budget(ctx, alpha.n(), 1, std::max(l, 0L), 0);
      inputs["genus"] = h;
      inputs["l"] = l;
      value = int_json(single_hurwitz(alpha, h));
      return "integer";
    }

    auto bs = parse_types(betas, colors);
    json jb = json::array();
    for (const auto& b : bs) jb.push_back(format_cycle_type(b));
    inputs["beta"] = jb;

    if (w == "double") {
      if (colors != 1) throw DomainError("double Hurwitz numbers take one profile pair");
      const CycleType &alpha = as[0], &beta = bs[0];
      if (alpha.n() != beta.n()) throw DomainError("alpha and beta must partition the same n");
      long h;
      if (is_l) {
        long l = genus_or_l;
        long twice_h = l - alpha.num_parts() - beta.num_parts() + 2;
        if (twice_h < 0 || twice_h % 2 != 0)
          throw DomainError("l is inconsistent with the Riemann-Hurwitz relation");
        h = twice_h / 2;
      } else {
        h = genus_or_l;
      }
      long l = double_hurwitz_l(alpha, beta, h);
      check_budget(ctx, alpha.n(), 1, std::max(l, 0L), 0);
      inputs["genus"] = h;
      inputs["l"] = l;
      inputs["from_single"] = from_single != 0;
      value = int_json(from_single ? double_from_single(alpha, beta, h)
                                   : double_hurwitz(alpha, beta, h));
      return "integer";
    }

    if (w == "higher") {
      if (!is_l) throw DomainError("higher-order Hurwitz numbers are indexed by l");
      HurwitzQuery q{as, bs};
      q.validate();
      check_budget(ctx, q.n(), colors, genus_or_l, 0);
      inputs["l"] = genus_or_l;
      value = int_json(higher_order_hurwitz(q, genus_or_l));
      return "integer";
    }
    throw ParseError("unknown hurwitz kind '" + w + "'");
  });
}

TW_API int tw_bms(tw_context* ctx, const char* const* alphas, const char* const* betas,
                  int colors, long l, long k, char** out) {
  return run(ctx, "bms", out, [&](json& inputs, json& value) {
    HurwitzQuery q{parse_types(alphas, colors), parse_types(betas, colors)};
    q.validate();
    check_budget(ctx, q.n(), colors, l, k);
    json ja = json::array(), jb = json::array();
    for (const auto& a : q.alphas) ja.push_back(format_cycle_type(a));
    for (const auto& b : q.betas) jb.push_back(format_cycle_type(b));
    inputs["alpha"] = ja;
    inputs["beta"] = jb;
    inputs["l"] = l;
    inputs["k"] = k;
    value = int_json(bms_number(q, l, k));
    return "integer";
  });
}

namespace {

void check_moment_budget(const tw_context* ctx, int n, int d) {
  check_budget(ctx, n, d, 0, 0);
  double pairs = 1.0;
  for (int i = 2; i <= n; ++i) pairs *= i;
  pairs = std::pow(pairs, 2.0 * d);
  if (pairs > (ctx->budgets.unsafe ? 1e9 : 2e6))
    throw BudgetError("the (n!)^{2D} tuple sum is too large for the current budget");
}

}  // namespace

TW_API int tw_moments(tw_context* ctx, const char* tensor_a_path, const char* tensor_b_path,
                      int n, long dim, long montecarlo_samples, unsigned long long seed,
                      char** out) {
  return run(ctx, "moments", out, [&](json& inputs, json& value) {
    if (!tensor_a_path || !tensor_b_path) throw ParseError("tensor file paths required");
    LoadedTensor a = load_tensor(tensor_a_path);
    LoadedTensor b = load_tensor(tensor_b_path);
    inputs["tensor_a"] = tensor_a_path;
    inputs["tensor_b"] = tensor_b_path;
    inputs["n"] = n;
    inputs["N"] = dim;
    const int D = a.exact ? a.rational().colors() : a.complex().colors();
    if (montecarlo_samples > 0) {
      check_budget(ctx, n, D, 0, 0);
      inputs["montecarlo_samples"] = montecarlo_samples;
      inputs["seed"] = seed;
      CplxTensor ca = a.exact ? to_complex(a.rational()) : a.complex();
      CplxTensor cb = b.exact ? to_complex(b.rational()) : b.complex();
      auto mc = haar_sample_moment(ca, cb, n, static_cast<int>(dim), montecarlo_samples, seed,
                                   ctx->jobs);
      value["estimate"] = {mc.estimate.real(), mc.estimate.imag()};
      value["standard_error"] = mc.standard_error;
      value["samples"] = mc.samples;
      return "float_err";
    }
    check_moment_budget(ctx, n, D);
    if (a.exact && b.exact) {
      value = rat_json(hciz_moment(a.rational(), b.rational(), n, Int(dim)));
      return "rational";
    }
    CplxTensor ca = a.exact ? to_complex(a.rational()) : a.complex();
    CplxTensor cb = b.exact ? to_complex(b.rational()) : b.complex();
    auto m = hciz_moment(ca, cb, n, Int(dim));
    value["estimate"] = {m.real(), m.imag()};
    value["standard_error"] = 0.0;
    return "float_err";
  });
}

TW_API int tw_cumulants(tw_context* ctx, const char* tensor_a_path, const char* tensor_b_path,
                        int n, long dim, char** out) {
  return run(ctx, "cumulants", out, [&](json& inputs, json& value) {
    if (!tensor_a_path || !tensor_b_path) throw ParseError("tensor file paths required");
    LoadedTensor a = load_tensor(tensor_a_path);
    LoadedTensor b = load_tensor(tensor_b_path);
    inputs["tensor_a"] = tensor_a_path;
    inputs["tensor_b"] = tensor_b_path;
    inputs["n"] = n;
    inputs["N"] = dim;
    const int D = a.exact ? a.rational().colors() : a.complex().colors();
    check_moment_budget(ctx, n, D);
    if (a.exact && b.exact) {
      value = rat_json(hciz_cumulant(a.rational(), b.rational(), n, Int(dim)));
      return "rational";
    }
    CplxTensor ca = a.exact ? to_complex(a.rational()) : a.complex();
    CplxTensor cb = b.exact ? to_complex(b.rational()) : b.complex();
    auto m = hciz_cumulant(ca, cb, n, Int(dim));
    value["estimate"] = {m.real(), m.imag()};
    value["standard_error"] = 0.0;
    return "float_err";
  });
}

TW_API int tw_verify(tw_context* ctx, const char* suite, int max_n, char** out) {
  return run(ctx, "verify", out, [&](json& inputs, json& value) {
    if (!suite) throw ParseError("missing suite name");
    check_budget(ctx, max_n, 1, 0, 0);
    inputs["suite"] = suite;
    inputs["max_n"] = max_n;
    SuiteResult r = run_verify_suite(suite, max_n);
    json checks = json::array();
    for (const auto& c : r.checks) {
      json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      if (!c.pass) jc["counterexample"] = c.counterexample;
      checks.push_back(jc);
    }
    value["suite"] = r.suite;
    value["checks"] = checks;
    value["pass"] = r.pass();
    return "report";
  });
}

TW_API int tw_incidence_dot(tw_context* ctx, const char* pi, const char* const* pis,
                            const char* const* edge_partitions, int colors, char** out) {
  return run(ctx, "dot", out, [&](json& inputs, json& value) {
    if (!pi || !pis || !edge_partitions) throw ParseError("partitions required");
    SetPartition Pi = parse_set_partition(pi);
    std::vector<SetPartition> vpis, vedges;
    for (int c = 0; c < colors; ++c) {
      if (!pis[c] || !edge_partitions[c]) throw ParseError("null partition string");
      vpis.push_back(parse_set_partition(pis[c]));
      vedges.push_back(parse_set_partition(edge_partitions[c]));
    }
    check_budget(ctx, Pi.n(), colors, 0, 0);
    inputs["Pi"] = format_set_partition(Pi);
    value = incidence_graph_dot(Pi, vpis, vedges);
    return "dot";
  });
}

TW_API int tw_nodal_dot(tw_context* ctx, const char* const* sigma, const char* const* tau,
                        int colors, const char* const* folding, char** out) {
  return run(ctx, "dot", out, [&](json& inputs, json& value) {
    auto sp = parse_tuple(sigma, colors);
    auto tp = parse_tuple(tau, colors);
    std::vector<Permutation> all = sp;
    all.insert(all.end(), tp.begin(), tp.end());
    all = unify_degrees(std::move(all));
    sp.assign(all.begin(), all.begin() + colors);
    tp.assign(all.begin() + colors, all.end());
    PermTuple st(sp), tt(tp);
    check_budget(ctx, st.degree(), colors, 0, 0);
    inputs["sigma"] = tuple_inputs(sp);
    inputs["tau"] = tuple_inputs(tp);
    if (folding) {
      std::vector<SetPartition> f;
      for (int c = 0; c < colors; ++c) {
        if (!folding[c]) throw ParseError("null folding partition");
        f.push_back(parse_set_partition(folding[c]));
      }
      value = nodal_schematic_dot(st, tt, &f);
    } else {
      value = nodal_schematic_dot(st, tt, nullptr);
    }
    return "dot";
  });
}

TW_API const char* tw_version(void) { return "1.0.0"; }

}  // extern "C"
