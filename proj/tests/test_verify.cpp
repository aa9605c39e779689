#include "gassoc/verify.hpp"
#include "support.hpp"

using namespace testing;

namespace {

VerifyConfig small_config() {
  VerifyConfig c;
  c.graphs = {"A2", "A3"};
  c.fan_samples = 100;
  c.random_sums = 20;
  c.lemma_max_len = 6;
  c.loop_max_len = 10;
  return c;
}

const CheckResult* find(const VerificationReport& r, const std::string& name, const std::string& scope) {
  for (const auto& c : r.checks)
    if (c.name == name && c.scope == scope) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("catalog lists every group in order") {
    std::vector<std::string> groups;
    for (const auto& [g, names] : verify_catalog()) groups.push_back(g);
    CHECK(groups == std::vector<std::string>{"rep", "decorated", "clusters", "groupoid", "census"});
  }

  TEST_CASE("small suite passes and is deterministic") {
    const auto a = run_verify_suite(small_config());
    const auto b = run_verify_suite(small_config());
    CHECK(a.ok());
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t k = 0; k < a.checks.size(); ++k) {
      CHECK(a.checks[k].name == b.checks[k].name);
      CHECK(a.checks[k].cases == b.checks[k].cases);
      CHECK(a.checks[k].detail == b.checks[k].detail);
    }
    CHECK(find(a, "positive-complexes-a3", "A3") != nullptr);
  }

  TEST_CASE("corrupted exponent table fails the product formula") {
    auto c = small_config();
    c.checks = {"product-formula"};
    c.exponents["A3"] = {1, 1, 4};
    const auto r = run_verify_suite(c);
    CHECK_FALSE(r.ok());
    const auto* a3 = find(r, "product-formula", "A3");
    REQUIRE(a3 != nullptr);
    CHECK(a3->status == CheckStatus::Fail);
    CHECK_FALSE(a3->counterexample.empty());
    CHECK(find(r, "product-formula", "A2")->status == CheckStatus::Pass);
  }

  TEST_CASE("selection by group and by name") {
    auto c = small_config();
    c.checks = {"groupoid", "moebius"};
    const auto r = run_verify_suite(c);
    for (const auto& x : r.checks) CHECK((x.group == "groupoid" || x.name == "moebius"));
    c.checks = {"no-such-check"};
    CHECK_THROWS_AS(run_verify_suite(c), DomainError);
  }

  TEST_CASE("scope errors") {
    VerifyConfig c;
    c.graphs = {"E7"};
    CHECK_THROWS_AS(run_verify_suite(c), ResourceError);
    c.graphs = {"A2"};
    c.exponents["A3"] = {1, 2, 3};
    CHECK_THROWS_AS(run_verify_suite(c), DomainError);
  }

  TEST_CASE("reducible graphs skip the product formula") {
    auto c = small_config();
    c.graphs = {"A1+A2"};
    c.checks = {"census"};
    const auto r = run_verify_suite(c);
    CHECK(r.ok());
    CHECK(find(r, "product-formula", "A1+A2")->status == CheckStatus::Skip);
  }
}
