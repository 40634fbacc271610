// Exercises the shared library strictly through the C header.
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "tenwein.h"

using nlohmann::json;

namespace {

struct Ctx {
  tw_context* c = tw_context_create();
  ~Ctx() { tw_context_destroy(c); }
};

json run_ok(int rc, tw_context* ctx, char** payload) {
  INFO(tw_context_last_error(ctx));
  REQUIRE(rc == TW_OK);
  REQUIRE(*payload != nullptr);
  json doc = json::parse(*payload);
  tw_string_free(*payload);
  *payload = nullptr;
  return doc;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("context lifecycle and budgets") {
  Ctx ctx;
  REQUIRE(ctx.c != nullptr);
  CHECK(tw_context_set_jobs(ctx.c, 2) == TW_OK);
  CHECK(tw_context_set_jobs(ctx.c, 0) == TW_ERROR_DOMAIN);

  // raising budgets needs unsafe mode, and hard caps always apply
  CHECK(tw_context_set_budgets(ctx.c, 6, -1, -1, -1) == TW_ERROR_BUDGET);
  CHECK(tw_context_set_unsafe(ctx.c, 1) == TW_OK);
  CHECK(tw_context_set_budgets(ctx.c, 6, -1, -1, -1) == TW_OK);
  CHECK(tw_context_set_budgets(ctx.c, 9, -1, -1, -1) == TW_ERROR_BUDGET);
  CHECK(std::string(tw_context_last_error(ctx.c)).find("hard caps") != std::string::npos);
}

TEST_CASE("result schema") {
  Ctx ctx;
  char* payload = nullptr;
  json doc = run_ok(tw_weingarten_exact(ctx.c, "()", 5, &payload), ctx.c, &payload);
  CHECK(doc["command"] == "weingarten");
  CHECK(doc["value"] == "1/5");
  CHECK(doc["value_kind"] == "rational");
  CHECK(doc.contains("inputs"));
  CHECK(doc.contains("elapsed_ms"));
}

TEST_CASE("error codes and machine-readable errors") {
  Ctx ctx;
  char* payload = nullptr;
  CHECK(tw_weingarten_exact(ctx.c, "(1 2", 5, &payload) == TW_ERROR_PARSE);
  CHECK(json::parse(tw_context_last_error(ctx.c))["kind"] == "parse");
  // N below the degree: a domain violation
  CHECK(tw_weingarten_exact(ctx.c, "(1 2 3)", 2, &payload) == TW_ERROR_DOMAIN);
  CHECK(json::parse(tw_context_last_error(ctx.c))["kind"] == "domain");
  // degree past the default budget
  CHECK(tw_weingarten_exact(ctx.c, "(1 2 3 4 5 6)", 7, &payload) == TW_ERROR_BUDGET);
  CHECK(json::parse(tw_context_last_error(ctx.c))["kind"] == "budget");
}

TEST_CASE("weingarten series and asymptotics") {
  Ctx ctx;
  char* payload = nullptr;
  json s = run_ok(tw_weingarten_series(ctx.c, "(1 2)", 6, &payload), ctx.c, &payload);
  CHECK(s["value"]["leading_exponent"] == 3);
  CHECK(s["value"]["coefficients"][0] == "-1");
  json a = run_ok(tw_weingarten_asymptotic(ctx.c, "(1 2 3)(4 5)", &payload), ctx.c, &payload);
  CHECK(a["value"]["leading_coefficient"] == -2);
  CHECK(a["value"]["inverse_power"] == 8);
}

TEST_CASE("p_C routes through the C API") {
  Ctx ctx;
  char* payload = nullptr;
  const char* sigma[] = {"(1 2)"};
  const char* tau[] = {"()"};
  json doc = run_ok(tw_pc(ctx.c, sigma, tau, 1, 1, "all", &payload), ctx.c, &payload);
  CHECK(doc["value"]["alternating"] == 1);
  CHECK(doc["value"]["monotone"] == 1);
  CHECK(doc["value"]["partition"] == 1);
  CHECK(doc["value"]["folding"] == 1);
  CHECK(doc["value"]["agree"] == true);
  CHECK(doc["inputs"]["ell"] == 1);

  const char* s2[] = {"(1 2)", "(1 2 3)"};
  const char* t2[] = {"(1 3)", "()"};
  json two = run_ok(tw_pc(ctx.c, s2, t2, 2, 4, "monotone", &payload), ctx.c, &payload);
  CHECK(two["inputs"]["sigma"].size() == 2);

  CHECK(tw_pc(ctx.c, sigma, tau, 1, 1, "nonsense", &payload) == TW_ERROR_PARSE);
}

TEST_CASE("hurwitz and bms through the C API") {
  Ctx ctx;
  char* payload = nullptr;
  const char* a2[] = {"2"};
  json single = run_ok(tw_hurwitz(ctx.c, "single", a2, nullptr, 1, 0, 0, 0, &payload), ctx.c,
                       &payload);
  CHECK(single["value"] == 1);

  const char* b2[] = {"2"};
  json dbl = run_ok(tw_hurwitz(ctx.c, "double", a2, b2, 1, 0, 0, 0, &payload), ctx.c, &payload);
  CHECK(dbl["value"] == 1);
  json dbl2 = run_ok(tw_hurwitz(ctx.c, "double", a2, b2, 1, 0, 0, 1, &payload), ctx.c, &payload);
  CHECK(dbl2["value"] == 1);

  const char* ah[] = {"1", "1"};
  const char* bh[] = {"1", "1"};
  json higher = run_ok(tw_hurwitz(ctx.c, "higher", ah, bh, 2, 0, 1, 0, &payload), ctx.c, &payload);
  CHECK(higher["value"] == 1);

  json bms = run_ok(tw_bms(ctx.c, a2, b2, 1, 0, 0, &payload), ctx.c, &payload);
  CHECK(bms["value"] == 1);

  // l inconsistent with the Riemann-Hurwitz parity
  CHECK(tw_hurwitz(ctx.c, "single", a2, nullptr, 1, 2, 1, 0, &payload) == TW_ERROR_DOMAIN);
}

TEST_CASE("moments, cumulants and Monte Carlo through files") {
  Ctx ctx;
  char* payload = nullptr;
  std::string id2 = write_temp("tw_id2.json", R"({"n":2,"d":1,"entries":["1","0","0","1"]})");
  json m = run_ok(tw_moments(ctx.c, id2.c_str(), id2.c_str(), 2, 2, 0, 0, &payload), ctx.c,
                  &payload);
  CHECK(m["value"] == "4");
  CHECK(m["value_kind"] == "rational");

  json c = run_ok(tw_cumulants(ctx.c, id2.c_str(), id2.c_str(), 2, 2, &payload), ctx.c, &payload);
  CHECK(c["value"] == "0");

  json mc = run_ok(tw_moments(ctx.c, id2.c_str(), id2.c_str(), 2, 2, 5000, 42, &payload), ctx.c,
                   &payload);
  CHECK(mc["value_kind"] == "float_err");
  CHECK(mc["value"]["estimate"][0].get<double>() == doctest::Approx(4.0));

  CHECK(tw_moments(ctx.c, "/nope.json", id2.c_str(), 1, 2, 0, 0, &payload) == TW_ERROR_PARSE);
}

TEST_CASE("verify and dot through the C API") {
  Ctx ctx;
  char* payload = nullptr;
  json v = run_ok(tw_verify(ctx.c, "weingarten", 2, &payload), ctx.c, &payload);
  CHECK(v["value"]["pass"] == true);
  CHECK(v["value"]["checks"].size() >= 4);
  CHECK(tw_verify(ctx.c, "bogus", 2, &payload) == TW_ERROR_DOMAIN);

  const char* pis[] = {"{1,2}{3,4,5}", "{1,2,3,4,5}"};
  const char* edges[] = {"{1}{2}{3}{4,5}", "{1,2,3}{4,5}"};
  json dot = run_ok(tw_incidence_dot(ctx.c, "{1,2,3}{4,5}", pis, edges, 2, &payload), ctx.c,
                    &payload);
  CHECK(dot["value_kind"] == "dot");
  CHECK(dot["value"].get<std::string>().find("graph incidence") == 0);

  const char* sigma[] = {"(1 3)", "(1 2 3)(4 5)"};
  const char* tau[] = {"(1 3)(4 5)", "()"};
  json nodal = run_ok(tw_nodal_dot(ctx.c, sigma, tau, 2, nullptr, &payload), ctx.c, &payload);
  CHECK(nodal["value"].get<std::string>().find("shape=triangle") != std::string::npos);
}

TEST_CASE("version string") {
  CHECK(std::string(tw_version()).find('.') != std::string::npos);
}
