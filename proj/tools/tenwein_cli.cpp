// Command line front end for the tenwein shared library. Parses arguments,
// forwards to the C API and renders the JSON results as json, table or csv.
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tenwein.h"

using nlohmann::json;

namespace {

struct ContextHandle {
  tw_context* ctx = tw_context_create();
  ~ContextHandle() { tw_context_destroy(ctx); }
};

// exit codes: 0 ok, 1 internal, 2 parse/domain, 3 budget
int exit_code_for(int rc) {
  switch (rc) {
    case TW_OK:
      return 0;
    case TW_ERROR_PARSE:
    case TW_ERROR_DOMAIN:
      return 2;
    case TW_ERROR_BUDGET:
      return 3;
    default:
      return 1;
  }
}

void flatten(const std::string& prefix, const json& v, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value(), rows);
  } else if (v.is_array()) {
    bool scalar_only = true;
    for (const auto& e : v)
      if (e.is_object() || e.is_array()) scalar_only = false;
    if (scalar_only) {
      std::string joined;
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) joined += " ";
        joined += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
      }
      rows.emplace_back(prefix, joined);
    } else {
      for (size_t i = 0; i < v.size(); ++i)
        flatten(prefix + "[" + std::to_string(i) + "]", v[i], rows);
    }
  } else {
    rows.emplace_back(prefix, v.is_string() ? v.get<std::string>() : v.dump());
  }
}

void print_result(const std::string& format, const char* payload) {
  json doc = json::parse(payload);
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (doc["value_kind"] == "dot") {
    std::cout << doc["value"].get<std::string>();
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten("", doc, rows);
  if (format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : rows) {
      std::string escaped = v;
      bool quote = escaped.find_first_of(",\"\n") != std::string::npos;
      if (quote) {
        std::string q = "\"";
        for (char c : escaped) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
        q += "\"";
        escaped = q;
      }
      std::cout << k << "," << escaped << "\n";
    }
    return;
  }
  size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows)
    std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

int finish(ContextHandle& handle, int rc, char* payload, const std::string& format) {
  if (rc == TW_OK) {
    print_result(format, payload);
    tw_string_free(payload);
    return 0;
  }
  std::cerr << tw_context_last_error(handle.ctx) << "\n";
  return exit_code_for(rc);
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weingarten calculus, monotone Hurwitz numbers and tensor HCIZ moments"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  int max_n = -1, max_d = -1, max_l = -1, max_k = -1, jobs = 1;
  bool unsafe_budget = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--max-n", max_n, "Budget: largest permutation degree");
  app.add_option("--max-d", max_d, "Budget: largest color count");
  app.add_option("--max-l", max_l, "Budget: largest transposition count l");
  app.add_option("--max-k", max_k, "Budget: largest factor count k");
  app.add_flag("--unsafe-budget", unsafe_budget,
               "Allow budgets past the defaults (brute force is O((n!)^{Dk}))");
  app.add_option("--jobs", jobs, "Worker threads for parallel sections");

  // weingarten
  auto* wg = app.add_subcommand("weingarten", "Weingarten function of a permutation");
  std::string wg_perm;
  long wg_series = -1, wg_exact = -1;
  bool wg_asym = false;
  wg->add_option("--perm", wg_perm, "Permutation, e.g. \"(1 2)(3)\"")->required();
  auto* wg_series_opt = wg->add_option("--series", wg_series, "Truncation order of the 1/N series");
  auto* wg_exact_opt = wg->add_option("--exact", wg_exact, "Exact value at this N");
  wg->add_flag("--asymptotic", wg_asym, "Leading coefficient and inverse power");

  // pc
  auto* pc = app.add_subcommand("pc", "Cumulant Weingarten coefficient p_C[sigma,tau;l]");
  std::vector<std::string> pc_sigma, pc_tau;
  std::string pc_sigma2, pc_tau2, pc_route = "all";
  long pc_l = 0;
  pc->add_option("--sigma", pc_sigma, "Sigma permutation (repeat per color)")->required();
  pc->add_option("--tau", pc_tau, "Tau permutation (repeat per color)")->required();
  pc->add_option("--sigma2", pc_sigma2, "Second-color sigma (D=2 shorthand)");
  pc->add_option("--tau2", pc_tau2, "Second-color tau (D=2 shorthand)");
  pc->add_option("--l", pc_l, "Transposition count l")->required();
  pc->add_option("--route", pc_route, "Evaluation route")
      ->check(CLI::IsMember({"alternating", "monotone", "partition", "folding", "all"}));

  // hurwitz
  auto* hw = app.add_subcommand("hurwitz", "Monotone Hurwitz numbers");
  hw->require_subcommand(1);
  std::vector<std::string> hw_alpha, hw_beta;
  long hw_genus = -1, hw_l = -1;
  bool hw_from_single = false;
  auto add_hurwitz_common = [&](CLI::App* sub, bool need_beta) {
    sub->add_option("--alpha", hw_alpha, "Ramification profile, e.g. \"2,1\"")->required();
    auto* beta = sub->add_option("--beta", hw_beta, "Second profile");
    if (need_beta) beta->required();
    sub->add_option("--genus", hw_genus, "Genus h");
    sub->add_option("--l", hw_l, "Transposition count l");
  };
  auto* hw_single = hw->add_subcommand("single", "Single numbers H_h(alpha)");
  add_hurwitz_common(hw_single, false);
  auto* hw_double = hw->add_subcommand("double", "Double numbers H_h(alpha,beta)");
  add_hurwitz_common(hw_double, true);
  hw_double->add_flag("--from-single", hw_from_single,
                      "Assemble from single numbers instead of the direct class sum");
  auto* hw_higher = hw->add_subcommand("higher", "Higher-order numbers H^l({alpha_c,beta_c})");
  add_hurwitz_common(hw_higher, true);

  // bms
  auto* bms = app.add_subcommand("bms", "Generalized Bousquet-Melou--Schaeffer numbers");
  std::vector<std::string> bms_alpha, bms_beta;
  long bms_l = 0, bms_k = 0;
  bms->add_option("--alpha", bms_alpha, "Profile per color")->required();
  bms->add_option("--beta", bms_beta, "Profile per color")->required();
  bms->add_option("--l", bms_l, "Total length l")->required();
  bms->add_option("--k", bms_k, "Factor count k")->required();

  // moments / cumulants
  std::string t_a, t_b;
  int mom_n = 1;
  long mom_dim = 0, mom_samples = 0;
  unsigned long long mom_seed = 0;
  auto add_tensor_common = [&](CLI::App* sub) {
    sub->add_option("--tensor-a", t_a, "Tensor file for A")->required();
    sub->add_option("--tensor-b", t_b, "Tensor file for B")->required();
    sub->add_option("--n", mom_n, "Moment order n")->required();
    sub->add_option("--dim", mom_dim, "Per-color dimension N")->required();
  };
  auto* mom = app.add_subcommand("moments", "Moments of the tensor HCIZ integral");
  add_tensor_common(mom);
  mom->add_option("--montecarlo", mom_samples, "Monte Carlo sample count (0 = exact)");
  mom->add_option("--seed", mom_seed, "Monte Carlo seed");
  auto* cum = app.add_subcommand("cumulants", "Cumulants of the tensor HCIZ integral");
  add_tensor_common(cum);

  // verify
  auto* ver = app.add_subcommand("verify", "Run a cross-route identity suite");
  std::string ver_suite;
  int ver_max_n = 3;
  ver->add_option("--suite", ver_suite, "Identity suite")
      ->required()
      ->check(CLI::IsMember({"weingarten", "pc-routes", "hurwitz", "nodal", "hciz"}));
  ver->add_option("--max-n", ver_max_n, "Largest degree in the exhaustive grids");

  // dot
  auto* dot = app.add_subcommand("dot", "DOT renderings of the combinatorial graphs");
  dot->require_subcommand(1);
  auto* dot_inc = dot->add_subcommand("incidence", "Incidence graph G[Pi,{pi_c};{Pi_c}]");
  std::string dot_pi;
  std::vector<std::string> dot_pis, dot_edges;
  dot_inc->add_option("--pi", dot_pi, "White partition, e.g. \"{1,2,3}{4,5}\"")->required();
  dot_inc->add_option("--pic", dot_pis, "Colored partition per color")->required();
  dot_inc->add_option("--edges", dot_edges, "Edge partition per color")->required();
  auto* dot_nodal = dot->add_subcommand("nodal", "Nodal constellation schematic");
  std::vector<std::string> dot_sigma, dot_tau, dot_fold;
  dot_nodal->add_option("--sigma", dot_sigma, "Sigma per color")->required();
  dot_nodal->add_option("--tau", dot_tau, "Tau per color")->required();
  dot_nodal->add_option("--folding", dot_fold, "Folding partition per color");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    json err;
    err["error"] = e.what();
    err["kind"] = "parse";
    std::cerr << err.dump() << "\n";
    return 2;
  }

  ContextHandle handle;
  if (!handle.ctx) {
    std::cerr << R"({"error":"context allocation failed","kind":"internal"})" << "\n";
    return 1;
  }
  if (unsafe_budget) tw_context_set_unsafe(handle.ctx, 1);
  if (int rc = tw_context_set_budgets(handle.ctx, max_n, max_d, max_l, max_k); rc != TW_OK) {
    std::cerr << tw_context_last_error(handle.ctx) << "\n";
    return exit_code_for(rc);
  }
  if (jobs > 1) tw_context_set_jobs(handle.ctx, jobs);

  char* payload = nullptr;

  if (wg->parsed()) {
    int modes = (wg_series_opt->count() > 0) + (wg_exact_opt->count() > 0) + (wg_asym ? 1 : 0);
    if (modes != 1) {
      std::cerr << R"({"error":"choose exactly one of --series, --exact, --asymptotic","kind":"parse"})"
                << "\n";
      return 2;
    }
    int rc;
    if (wg_series_opt->count() > 0)
      rc = tw_weingarten_series(handle.ctx, wg_perm.c_str(), wg_series, &payload);
    else if (wg_exact_opt->count() > 0)
      rc = tw_weingarten_exact(handle.ctx, wg_perm.c_str(), wg_exact, &payload);
    else
      rc = tw_weingarten_asymptotic(handle.ctx, wg_perm.c_str(), &payload);
    return finish(handle, rc, payload, format);
  }

  if (pc->parsed()) {
    if (!pc_sigma2.empty()) pc_sigma.push_back(pc_sigma2);
    if (!pc_tau2.empty()) pc_tau.push_back(pc_tau2);
    if (pc_sigma.size() != pc_tau.size()) {
      std::cerr << R"({"error":"sigma and tau need the same number of colors","kind":"parse"})"
                << "\n";
      return 2;
    }
    auto sv = c_strings(pc_sigma);
    auto tv = c_strings(pc_tau);
    int rc = tw_pc(handle.ctx, sv.data(), tv.data(), static_cast<int>(sv.size()), pc_l,
                   pc_route.c_str(), &payload);
    return finish(handle, rc, payload, format);
  }

  if (hw->parsed()) {
    const char* which = hw_single->parsed() ? "single" : (hw_double->parsed() ? "double" : "higher");
    if ((hw_genus >= 0) == (hw_l >= 0)) {
      std::cerr << R"({"error":"give exactly one of --genus or --l","kind":"parse"})" << "\n";
      return 2;
    }
    if (hw_beta.empty()) hw_beta.clear();
    auto av = c_strings(hw_alpha);
    auto bv = c_strings(hw_beta);
    int colors = static_cast<int>(hw_alpha.size());
    if (!hw_beta.empty() && hw_beta.size() != hw_alpha.size()) {
      std::cerr << R"({"error":"alpha and beta need the same number of colors","kind":"parse"})"
                << "\n";
      return 2;
    }
    long genus_or_l = (hw_l >= 0) ? hw_l : hw_genus;
    int rc = tw_hurwitz(handle.ctx, which, av.data(), hw_beta.empty() ? nullptr : bv.data(),
                        colors, genus_or_l, hw_l >= 0 ? 1 : 0, hw_from_single ? 1 : 0, &payload);
    return finish(handle, rc, payload, format);
  }

  if (bms->parsed()) {
    if (bms_alpha.size() != bms_beta.size()) {
      std::cerr << R"({"error":"alpha and beta need the same number of colors","kind":"parse"})"
                << "\n";
      return 2;
    }
    auto av = c_strings(bms_alpha);
    auto bv = c_strings(bms_beta);
    int rc = tw_bms(handle.ctx, av.data(), bv.data(), static_cast<int>(av.size()), bms_l, bms_k,
                    &payload);
    return finish(handle, rc, payload, format);
  }

  if (mom->parsed()) {
    int rc = tw_moments(handle.ctx, t_a.c_str(), t_b.c_str(), mom_n, mom_dim, mom_samples,
                        mom_seed, &payload);
    return finish(handle, rc, payload, format);
  }

  if (cum->parsed()) {
    int rc = tw_cumulants(handle.ctx, t_a.c_str(), t_b.c_str(), mom_n, mom_dim, &payload);
    return finish(handle, rc, payload, format);
  }

  if (ver->parsed()) {
    int rc = tw_verify(handle.ctx, ver_suite.c_str(), ver_max_n, &payload);
    if (rc == TW_OK) {
      json doc = json::parse(payload);
      bool pass = doc["value"]["pass"].get<bool>();
      print_result(format, payload);
      tw_string_free(payload);
      return pass ? 0 : 1;
    }
    return finish(handle, rc, payload, format);
  }

  if (dot_inc->parsed()) {
    if (dot_pis.size() != dot_edges.size()) {
      std::cerr << R"({"error":"one edge partition per colored partition","kind":"parse"})" << "\n";
      return 2;
    }
    auto pv = c_strings(dot_pis);
    auto ev = c_strings(dot_edges);
    int rc = tw_incidence_dot(handle.ctx, dot_pi.c_str(), pv.data(), ev.data(),
                              static_cast<int>(pv.size()), &payload);
    return finish(handle, rc, payload, format);
  }

  if (dot_nodal->parsed()) {
    if (dot_sigma.size() != dot_tau.size() ||
        (!dot_fold.empty() && dot_fold.size() != dot_sigma.size())) {
      std::cerr << R"({"error":"per-color options need matching counts","kind":"parse"})" << "\n";
      return 2;
    }
    auto sv = c_strings(dot_sigma);
    auto tv = c_strings(dot_tau);
    auto fv = c_strings(dot_fold);
    int rc = tw_nodal_dot(handle.ctx, sv.data(), tv.data(), static_cast<int>(sv.size()),
                          dot_fold.empty() ? nullptr : fv.data(), &payload);
    return finish(handle, rc, payload, format);
  }

  std::cerr << R"({"error":"no subcommand","kind":"parse"})" << "\n";
  return 2;
}
