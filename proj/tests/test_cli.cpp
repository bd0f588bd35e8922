#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "scottperm/cli.hpp"
#include "scottperm/poly_parse.hpp"
#include "scottperm/random_instances.hpp"
#include "scottperm_app.hpp"
#include "support.hpp"

namespace sp = scottperm;
using nlohmann::json;
using sp::Polynomial;
using sp::Rational;

namespace {

std::vector<Rational> coeffs(std::initializer_list<Rational> v) { return v; }

json parse_out(const sp::CommandOutput& r) { return json::parse(r.out); }

json parse_err(const sp::CommandOutput& r) { return json::parse(r.err); }

sp::ErrorKind parse_kind(const std::string& text) {
  try {
    sp::parse_poly(text);
  } catch (const sp::Error& e) {
    return e.kind();
  }
  return sp::ErrorKind::BadParams;
}

}  // namespace

TEST(ParsePoly, Examples) {
  EXPECT_EQ(sp::parse_poly("x^5 - 1").parsed.coeffs(), coeffs({-1, 0, 0, 0, 0, 1}));
  const sp::PolyExpr q = sp::parse_poly("y^4 + 3/2*y - 7");
  EXPECT_EQ(q.parsed.coeffs(), coeffs({-7, sp::make_rational(3, 2), 0, 0, 1}));
  EXPECT_EQ(q.variable, "y");
  EXPECT_EQ(sp::parse_poly("[1, 2, 3]").parsed, (Polynomial{1, 2, 3}));
}

TEST(ParsePoly, Whitespace) {
  EXPECT_EQ(sp::parse_poly("  x ^ 3\t-  1 ").parsed, Polynomial::power_minus_one(3));
  EXPECT_EQ(sp::parse_poly("2x^2+x").parsed, (Polynomial{0, 1, 2}));
  EXPECT_EQ(sp::parse_poly("-x^2 + 2 * x - 1/3").parsed.coeffs(), coeffs({sp::make_rational(-1, 3), 2, -1}));
  EXPECT_EQ(sp::parse_poly("[ -1 , 0 ,1/2 ]").parsed.coeffs(), coeffs({-1, 0, sp::make_rational(1, 2)}));
}

TEST(ParsePoly, CombinesLikeTerms) {
  EXPECT_EQ(sp::parse_poly("x + x - 2x").parsed, Polynomial());
  EXPECT_EQ(sp::parse_poly("x^2 + 3 + x^2").parsed, (Polynomial{3, 0, 2}));
}

TEST(ParsePoly, DegreeZeroWarnings) {
  EXPECT_EQ(sp::parse_poly("7").warnings.size(), 1u);
  EXPECT_EQ(sp::parse_poly("0").warnings.size(), 1u);
  EXPECT_TRUE(sp::parse_poly("x").warnings.empty());
}

TEST(ParsePoly, Errors) {
  for (const char* bad : {"", "x^", "x + ", "x^2 y", "x + y", "3/0", "[1, 2", "x ** 2", "*x", "1 2", "[1,,2]"}) {
    EXPECT_EQ(parse_kind(bad), sp::ErrorKind::ParseError) << "'" << bad << "'";
  }
  try {
    sp::parse_poly("x^2 + y");
    FAIL();
  } catch (const sp::Error& e) {
    EXPECT_NE(std::string(e.what()).find("position 6"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos) << e.what();
  }
}

TEST(ParsePoly, RoundTrip) {
  auto rng = sp::testing::seeded(61);
  for (int trial = 0; trial < 500; ++trial) {
    const auto terms = sp::testing::rand_int(rng, 0, 6);
    std::vector<Rational> c(8);
    for (long t = 0; t < terms; ++t) {
      c[static_cast<std::size_t>(sp::testing::rand_int(rng, 0, 7))] += sp::testing::rand_rational(rng, 30, 7);
    }
    const Polynomial p(c);
    const std::string var = trial % 2 ? "x" : "y";
    const std::string text = sp::render_poly(p, var);
    EXPECT_EQ(sp::parse_poly(text).parsed, p) << text;
    EXPECT_EQ(sp::render_poly(sp::parse_poly(text).parsed, var), text);
  }
}

TEST(ParsePoly, RenderExamples) {
  EXPECT_EQ(sp::render_poly(sp::parse_poly("y^4 + 3/2*y - 7").parsed, "y"), "y^4 + 3/2*y - 7");
  EXPECT_EQ(sp::render_poly(Polynomial{-1, 0, -2}, "x"), "-2*x^2 - 1");
  EXPECT_EQ(sp::render_poly(Polynomial(), "x"), "0");
}

TEST(CmdEval, ScottThree) {
  const auto r = sp::cmd_eval("x^3-1", "y^3+1", "auto");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json j = parse_out(r);
  EXPECT_EQ(j["value"], (json{{"num", "-3"}, {"den", "8"}}));
  EXPECT_EQ(j["method"], "fes");
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["m"], 3);
}

TEST(CmdEval, SchemaHasExactlyTheDocumentedKeys) {
  const std::set<std::string> keys{"n", "m", "method", "value", "elapsed_ms", "notes"};
  for (const char* method : {"auto", "theorem1", "fes", "closed:cor19", "oracle", "involution"}) {
    const auto r = sp::cmd_eval("x^3-1", "y^6+y^3+1", method);
    ASSERT_EQ(r.exit_code, 0) << method << ": " << r.err;
    const json j = parse_out(r);
    std::set<std::string> have;
    for (const auto& [k, v] : j.items()) have.insert(k);
    EXPECT_EQ(have, keys) << method;
    EXPECT_TRUE(j["notes"].is_array());
    EXPECT_TRUE(j["elapsed_ms"].is_number());
    if (j["value"].contains("num")) {
      EXPECT_EQ(j["value"], (json{{"num", "6"}, {"den", "1"}})) << method;
    } else {
      EXPECT_NEAR(j["value"]["re"].get<double>(), 6.0, 1e-6) << method;
      EXPECT_NEAR(j["value"]["im"].get<double>(), 0.0, 1e-6) << method;
    }
  }
}

TEST(CmdEval, AutoFallsBackToTheorem1) {
  const json j = parse_out(sp::cmd_eval("x^2 + x + 2", "y^3 - 5", "auto"));
  EXPECT_EQ(j["method"], "theorem1");
}

TEST(CmdEval, ClosedFormWithParams) {
  const auto r = sp::cmd_eval("x^3-1", "y^6+2y^3+1", "closed:cor19", {"n=3", "a=2"});
  // a = 2 gives y^6 + 2y^3 + 1 = (y^3 + 1)^2, a valid member
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(parse_out(r)["value"], (json{{"num", "6"}, {"den", "1"}}));
  const auto mismatch = sp::cmd_eval("x^3-1", "y^6+y^3+1", "closed:cor19", {"n=3", "a=5"});
  EXPECT_EQ(mismatch.exit_code, 4);
  // thm10 at n=2, r=1: a_0 + a_1 y^2 + b_0 y + b_1 y^3
  const auto list = sp::cmd_eval("x^2-1", "y^2+y+3", "closed:thm10", {"n=2", "r=1", "a=[3, 1]", "b=[1, 0]"});
  ASSERT_EQ(list.exit_code, 0) << list.err;
  EXPECT_EQ(parse_out(list)["value"], parse_out(sp::cmd_eval("x^2-1", "y^2+y+3", "theorem1"))["value"]);
}

TEST(CmdEval, ExitCodes) {
  const auto shared = sp::cmd_eval("x^2-1", "y^2-1", "auto");
  EXPECT_EQ(shared.exit_code, 2);
  EXPECT_TRUE(shared.out.empty());
  EXPECT_EQ(parse_err(shared)["error"], "SharedRoot");
  EXPECT_TRUE(parse_err(shared)["message"].is_string());

  const auto parse = sp::cmd_eval("x^^2", "y", "auto");
  EXPECT_EQ(parse.exit_code, 3);
  EXPECT_EQ(parse_err(parse)["error"], "ParseError");

  const auto domain = sp::cmd_eval("x^3-1", "y^3+5", "closed:cor19");
  EXPECT_EQ(domain.exit_code, 4);
  EXPECT_EQ(parse_err(domain)["error"], "OutOfDomain");

  const auto unknown = sp::cmd_eval("x^3-1", "y^3+5", "magic");
  EXPECT_EQ(unknown.exit_code, 1);
  EXPECT_EQ(parse_err(unknown)["error"], "BadParams");
}

TEST(CmdEval, Theorem1AgreesWithOracle) {
  auto rng = sp::testing::seeded(62);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(sp::testing::rand_int(rng, 1, 5));
    const auto m = static_cast<std::size_t>(sp::testing::rand_int(rng, 1, 6));
    const sp::Instance inst = sp::random_coprime_instance(rng, n, m);
    const std::string p = sp::render_poly(inst.p, "x"), q = sp::render_poly(inst.q, "y");
    const json exact = parse_out(sp::cmd_eval(p, q, "theorem1"));
    const json numeric = parse_out(sp::cmd_eval(p, q, "oracle"));
    const Rational value = sp::make_rational(sp::Integer(exact["value"]["num"].get<std::string>()),
                                             sp::Integer(exact["value"]["den"].get<std::string>()));
    const sp::Complex z(numeric["value"]["re"].get<double>(), numeric["value"]["im"].get<double>());
    EXPECT_TRUE(sp::approx_equal(sp::to_complex(value), z)) << p << " | " << q;
  }
}

TEST(CmdVerify, AllRoutesAgree) {
  const auto r = sp::cmd_verify("x^3-1", "y^4+1");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json j = parse_out(r);
  EXPECT_TRUE(j["all_agree"].get<bool>());
  ASSERT_GE(j["routes"].size(), 4u);
  for (const auto& route : j["routes"]) {
    EXPECT_TRUE(route["error"].is_null());
    if (route["value"].contains("num")) {
      EXPECT_EQ(route["value"], (json{{"num", "12"}, {"den", "1"}})) << route["route"];
    } else {
      EXPECT_NEAR(route["value"]["re"].get<double>(), 12.0, 1e-6) << route["route"];
    }
  }
  EXPECT_EQ(j["agreement"].size(), j["routes"].size());
}

TEST(CmdVerify, SharedRoot) {
  const auto r = sp::cmd_verify("x^2-1", "y^2-1");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(parse_err(r)["error"], "SharedRoot");
  for (const auto& route : parse_out(r)["routes"]) EXPECT_EQ(route["error"]["error"], "SharedRoot");
}

TEST(CmdCatalog, SingleEntry) {
  const auto r = sp::cmd_catalog(std::string("cor19"));
  ASSERT_EQ(r.exit_code, 0);
  const json j = parse_out(r);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["id"], "cor19");
  EXPECT_NE(j[0]["domain"].get<std::string>().find("a != -2"), std::string::npos);
  EXPECT_EQ(j[0]["params"], (json{"n", "a"}));
}

TEST(CmdCatalog, ListsEverything) {
  const json j = parse_out(sp::cmd_catalog());
  EXPECT_EQ(j.size(), sp::catalog_entries().size());
  EXPECT_EQ(sp::cmd_catalog(std::string("nope")).exit_code, 1);
}

TEST(CmdBench, CsvShape) {
  sp::BenchOptions opts;
  opts.n_min = 2;
  opts.n_max = 3;
  opts.m_min = 2;
  opts.m_max = 4;
  opts.samples = 1;
  opts.min_sample_ms = 0.1;
  const auto r = sp::cmd_bench(opts, false);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,m,oracle_ms,theorem1_ms,agree");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4) << line;
    EXPECT_TRUE(line.ends_with(",true")) << line;
  }
  EXPECT_EQ(rows, 5);  // (2,2) (2,3) (2,4) (3,3) (3,4)
}

TEST(CmdBench, OracleCap) {
  sp::BenchOptions opts;
  opts.max_n = 11;
  EXPECT_EQ(sp::cmd_bench(opts, false).exit_code, 1);
  opts.max_n = 2;
  opts.n_min = 2;
  opts.n_max = 3;
  opts.m_min = 3;
  opts.m_max = 3;
  opts.samples = 1;
  opts.min_sample_ms = 0.1;
  const json j = json::parse(sp::cmd_bench(opts, true).out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_FALSE(j[0]["oracle_ms"].is_null());
  EXPECT_TRUE(j[1]["oracle_ms"].is_null());
  EXPECT_TRUE(j[1]["agree"].is_null());
}

TEST(ParseRange, Forms) {
  EXPECT_EQ(sp::parse_range("2..8"), (std::pair<std::size_t, std::size_t>{2, 8}));
  EXPECT_EQ(sp::parse_range("5"), (std::pair<std::size_t, std::size_t>{5, 5}));
  try {
    sp::parse_range("a..b");
    FAIL();
  } catch (const sp::Error& e) {
    EXPECT_EQ(e.kind(), sp::ErrorKind::ParseError);
  }
}

TEST(RunApp, Subcommands) {
  std::ostringstream out, err;
  EXPECT_EQ(sp::run_app({"eval", "x^3-1", "y^3+1"}, out, err), 0);
  EXPECT_EQ(json::parse(out.str())["value"], (json{{"num", "-3"}, {"den", "8"}}));

  std::ostringstream out2, err2;
  EXPECT_EQ(sp::run_app({"eval", "x^3-1", "y^3+1", "--method", "theorem1"}, out2, err2), 0);
  EXPECT_EQ(json::parse(out2.str())["method"], "theorem1");

  std::ostringstream out3, err3;
  EXPECT_EQ(sp::run_app({"eval", "x^2-1", "y^2-1"}, out3, err3), 2);
  EXPECT_EQ(json::parse(err3.str())["error"], "SharedRoot");

  std::ostringstream out4, err4;
  EXPECT_EQ(sp::run_app({"eval", "x^3-1", "y^6+2y^3+1", "--method", "closed:cor19", "--param", "n=3", "--param",
                         "a=2"},
                        out4, err4),
            0)
      << err4.str();

  std::ostringstream out5, err5;
  EXPECT_EQ(sp::run_app({"catalog", "--id", "cor19"}, out5, err5), 0);
  EXPECT_EQ(json::parse(out5.str())[0]["id"], "cor19");

  std::ostringstream out6, err6;
  EXPECT_EQ(sp::run_app({"verify", "x^3-1", "y^4+1"}, out6, err6), 0);

  std::ostringstream out7, err7;
  EXPECT_EQ(sp::run_app({"bench", "2..2", "2..3", "--seed", "7", "--json"}, out7, err7), 0) << err7.str();
  EXPECT_EQ(json::parse(out7.str()).size(), 2u);

  std::ostringstream out8, err8;
  EXPECT_EQ(sp::run_app({"bench", "x..y"}, out8, err8), 3);

  std::ostringstream out9, err9;
  EXPECT_NE(sp::run_app({}, out9, err9), 0);
}
