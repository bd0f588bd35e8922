#include <gtest/gtest.h>

#include <map>

#include "scottperm/catalog.hpp"
#include "scottperm/random_instances.hpp"
#include "scottperm/scott_engine.hpp"
#include "support.hpp"

namespace sp = scottperm;
using sp::CatalogParams;
using sp::InvolutionIdentity;
using sp::Polynomial;
using sp::Rational;

namespace {

template <class F>
sp::ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const sp::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return sp::ErrorKind::BadParams;
}

CatalogParams scalars(std::initializer_list<std::pair<const std::string, Rational>> s) { return {s, {}}; }

std::vector<Rational> ones(std::size_t count) { return std::vector<Rational>(count, Rational(1)); }

}  // namespace

TEST(ShiftedFactorial, Basics) {
  EXPECT_EQ(sp::shifted_factorial(5, 0), 1);
  EXPECT_EQ(sp::shifted_factorial(4, 2), 20);
  EXPECT_EQ(sp::shifted_factorial(sp::make_rational(1, 2), 3), sp::make_rational(15, 8));
  EXPECT_EQ(sp::shifted_factorial(-3, 4), 0);
  EXPECT_EQ(sp::shifted_factorial(-3, 3), -6);
  EXPECT_EQ((sp::ShiftedFactorial{Rational(2), 3}.value()), 24);
  EXPECT_EQ(sp::shifted_factorial_ext(5, -1), sp::make_rational(1, 4));
}

TEST(Catalog, Examples) {
  EXPECT_EQ(sp::catalog_eval("cor19", scalars({{"n", 3}, {"a", 1}})), 6);
  EXPECT_EQ(sp::catalog_eval("cor27", scalars({{"n", 3}})), 12);
  EXPECT_EQ(sp::catalog_eval("cor30", scalars({{"n", 2}})), -2);
  EXPECT_EQ(sp::catalog_eval("cor31", scalars({{"n", 4}})), 1);
  EXPECT_EQ(sp::catalog_eval("thm38", scalars({{"n", 3}, {"m", 2}, {"a", 0}})), 20);
}

TEST(Catalog, ExamplesMatchTheorem1) {
  const std::vector<std::pair<std::string, CatalogParams>> cases{
      {"cor19", scalars({{"n", 3}, {"a", 1}})}, {"cor27", scalars({{"n", 3}})},
      {"cor30", scalars({{"n", 2}})},           {"cor31", scalars({{"n", 4}})},
      {"thm38", scalars({{"n", 3}, {"m", 2}, {"a", 0}})}};
  for (const auto& [id, params] : cases) {
    const auto [p, q] = sp::catalog_family(id, params);
    EXPECT_EQ(sp::scott_permanent(p, q).value, sp::catalog_eval(id, params)) << id;
  }
}

TEST(Catalog, FamilyExamples) {
  auto f = sp::catalog_family("cor17", scalars({{"n", 2}, {"m", 3}}));
  EXPECT_EQ(f.first, (Polynomial{-1, 0, 1}));
  EXPECT_EQ(f.second, (Polynomial{1, 0, 0, 0, 0, 0, 1}));
  f = sp::catalog_family("cor31", scalars({{"n", 3}}));
  EXPECT_EQ(f.first, (Polynomial{-1, 0, 0, 1}));
  EXPECT_EQ(f.second, (Polynomial{-1, 3, 0, 1}));
  f = sp::catalog_family("thm39", scalars({{"n", 3}, {"m", 2}, {"a", 1}}));
  EXPECT_EQ(f.first, (Polynomial{1, 1, 1}));
  EXPECT_EQ(f.second, (Polynomial{1, 2, 3, 4, 5}));
}

TEST(Catalog, MetadataIsComplete) {
  const auto entries = sp::catalog_entries();
  std::set<std::string> ids;
  for (const auto& e : entries) {
    ids.insert(e.id);
    EXPECT_FALSE(e.family.empty()) << e.id;
    EXPECT_FALSE(e.statement.empty()) << e.id;
    EXPECT_FALSE(e.domain.empty()) << e.id;
    EXPECT_FALSE(e.scalar_params.empty()) << e.id;
  }
  EXPECT_EQ(ids.size(), entries.size());
  for (const char* id : {"thm10", "thm32", "thm37", "thm38", "thm39"}) EXPECT_TRUE(ids.count(id)) << id;
  for (int k = 11; k <= 36; ++k) {
    if (k == 32) continue;
    EXPECT_TRUE(ids.count("cor" + std::to_string(k))) << k;
  }
  EXPECT_NE(sp::catalog_entry("cor19").domain.find("a != -2"), std::string::npos);
}

TEST(Catalog, GrandConsistencySweep) {
  std::map<std::string, int> checked;
  for (const auto& entry : sp::catalog_entries()) {
    for (const CatalogParams& params : sp::catalog_grid(entry.id)) {
      if (!sp::catalog_in_domain(entry.id, params)) continue;
      const auto [p, q] = sp::catalog_family(entry.id, params);
      const Rational closed = sp::catalog_eval(entry.id, params);
      const Rational theorem1 = sp::scott_permanent(p, q).value;
      ASSERT_EQ(closed, theorem1) << entry.id << " at " << sp::describe(params);
      ++checked[entry.id];
    }
    EXPECT_GE(checked[entry.id], 3) << entry.id << " has too few in-domain grid points";
  }
  EXPECT_EQ(checked.size(), sp::catalog_entries().size());
}

TEST(Catalog, SpecializationLattice) {
  for (long n = 1; n <= 5; ++n) {
    for (long m = 1; m <= 4; ++m) {
      // cor17 is thm10 with a = b = [1], r = mn.
      CatalogParams t10 = scalars({{"n", n}, {"r", n * m}});
      t10.lists["a"] = ones(1);
      t10.lists["b"] = ones(1);
      EXPECT_EQ(sp::catalog_eval("cor17", scalars({{"n", n}, {"m", m}})), sp::catalog_eval("thm10", t10));
      // cor12 is cor11 with a_l = 1 for l = 0..m.
      CatalogParams c11 = scalars({{"n", n}});
      c11.lists["a"] = ones(static_cast<std::size_t>(m + 1));
      EXPECT_EQ(sp::catalog_eval("cor12", scalars({{"n", n}, {"m", m}})), sp::catalog_eval("cor11", c11));
    }
    // cor19 is cor18 at m = 2, r = 1, b = 1.
    for (long a : {-1, 0, 1, 3}) {
      const CatalogParams c18 = scalars({{"n", n}, {"m", 2}, {"r", 1}, {"a", a}, {"b", 1}});
      if (!sp::catalog_in_domain("cor18", c18)) continue;
      EXPECT_EQ(sp::catalog_eval("cor19", scalars({{"n", n}, {"a", a}})), sp::catalog_eval("cor18", c18));
    }
  }
}

TEST(Catalog, VanishingFamilies) {
  int checked = 0;
  for (const char* id : {"cor20", "cor21"}) {
    for (const CatalogParams& params : sp::catalog_grid(id)) {
      if (!sp::catalog_in_domain(id, params)) continue;
      const auto [p, q] = sp::catalog_family(id, params);
      EXPECT_EQ(sp::scott_permanent(p, q).value, 0) << id << " " << sp::describe(params);
      ++checked;
    }
  }
  EXPECT_GT(checked, 5);
}

TEST(Catalog, DomainRejections) {
  const auto out_of_domain = [](const char* id, const CatalogParams& p) {
    return kind_of([&] { sp::catalog_eval(id, p); }) == sp::ErrorKind::OutOfDomain;
  };
  EXPECT_TRUE(out_of_domain("cor19", scalars({{"n", 3}, {"a", -2}})));
  EXPECT_TRUE(out_of_domain("cor26", scalars({{"n", 2}, {"m", 3}})));
  EXPECT_TRUE(out_of_domain("cor23", scalars({{"n", 2}, {"m", 4}, {"b", 3}})));
  EXPECT_TRUE(out_of_domain("thm37", scalars({{"n", 4}, {"m", 1}, {"s", 3}, {"a", 1}})));
  EXPECT_TRUE(out_of_domain("cor27", scalars({{"n", 2}})));
  EXPECT_TRUE(out_of_domain("cor31", scalars({{"n", 1}})));
  EXPECT_TRUE(out_of_domain("cor19", scalars({{"n", 0}, {"a", 1}})));
  EXPECT_TRUE(out_of_domain("cor19", scalars({{"n", sp::make_rational(3, 2)}, {"a", 1}})));
  EXPECT_FALSE(sp::catalog_in_domain("cor19", scalars({{"n", 3}, {"a", -2}})));
  EXPECT_TRUE(sp::catalog_in_domain("cor19", scalars({{"n", 3}, {"a", 5}})));
}

TEST(Catalog, BadParams) {
  EXPECT_EQ(kind_of([] { sp::catalog_eval("cor99", scalars({{"n", 3}})); }), sp::ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { sp::catalog_eval("cor19", scalars({{"n", 3}})); }), sp::ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { sp::catalog_eval("cor19", scalars({{"n", 3}, {"a", 1}, {"b", 1}})); }), sp::ErrorKind::BadParams);
}

TEST(Catalog, MatcherFindsConsistentEntries) {
  const std::vector<std::pair<Polynomial, Polynomial>> pairs{
      {Polynomial::power_minus_one(3), Polynomial{1, 0, 0, 1, 0, 0, 1}},
      {Polynomial::power_minus_one(3), Polynomial{1, 0, 0, 0, 1}},
      {Polynomial::all_ones(3), Polynomial{1, 2, 3, 4, 5}},
      {Polynomial::all_ones(2), Polynomial{1, 1, 1}},
      {Polynomial{1, 0, 1}, Polynomial{1, 0, 1, 0, 1}}};
  for (const auto& [p, q] : pairs) {
    const auto matches = sp::match_catalog(p, q);
    EXPECT_FALSE(matches.empty());
    const Rational expected = sp::scott_permanent(p, q).value;
    for (const auto& m : matches) EXPECT_EQ(sp::catalog_eval(m.id, m.params), expected) << m.id;
  }
}

TEST(Catalog, MatcherOnRandomPairsNeverLies) {
  auto rng = sp::testing::seeded(51);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(sp::testing::rand_int(rng, 1, 4));
    const bool special = trial % 2 == 0;
    const Polynomial p = special ? Polynomial::power_minus_one(n) : sp::testing::rand_poly(rng, n, 2);
    const Polynomial q = sp::testing::rand_poly(rng, static_cast<std::size_t>(sp::testing::rand_int(rng, 1, 6)), 2);
    if (sp::share_root(p, q)) continue;
    for (const auto& m : sp::match_catalog(p, q)) {
      EXPECT_EQ(sp::catalog_eval(m.id, m.params), sp::scott_permanent(p, q).value) << m.id;
    }
  }
}

TEST(InvolutionIdentities, Examples) {
  const auto r40 = sp::involution_identity_check(InvolutionIdentity::prop40, 3);
  EXPECT_TRUE(r40.holds);
  EXPECT_NEAR(r40.sum.real(), 6.0, 1e-9);
  EXPECT_TRUE(sp::involution_identity_check(InvolutionIdentity::prop41, 4).holds);
  EXPECT_EQ(kind_of([] { sp::involution_identity_check(InvolutionIdentity::prop43, 4); }), sp::ErrorKind::OutOfDomain);
  EXPECT_EQ(kind_of([] { sp::involution_identity_check(InvolutionIdentity::prop42, 1); }), sp::ErrorKind::OutOfDomain);
  EXPECT_EQ(sp::parse_involution_identity("prop42"), InvolutionIdentity::prop42);
}

TEST(InvolutionIdentities, HoldForTwoThroughNine) {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (auto id : {InvolutionIdentity::prop40, InvolutionIdentity::prop41, InvolutionIdentity::prop42,
                    InvolutionIdentity::prop43}) {
      if (id == InvolutionIdentity::prop43 && n % 2 == 0) continue;
      const auto r = sp::involution_identity_check(id, n);
      EXPECT_TRUE(r.holds) << sp::to_string(id) << " n=" << n << " sum=" << r.sum << " expected=" << r.expected;
    }
  }
}

TEST(InvolutionIdentities, DisplayedProp42WeightFails) {
  // The displayed fixed-point weight does not produce 1; the one derived
  // from Q = y^n + ny - 1 does.
  int failures = 0;
  for (std::size_t n = 2; n <= 9; ++n) {
    failures += sp::involution_identity_check(InvolutionIdentity::prop42, n, sp::WeightForm::as_displayed).holds ? 0 : 1;
  }
  EXPECT_EQ(failures, 8);
}
