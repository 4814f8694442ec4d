#include <doctest.h>

#include "wdc/campaign.hpp"

using namespace wdc;

TEST_CASE("xorshift64* reference outputs") {
  Xorshift64Star rng(1);
  CHECK(rng.next() == 5180492295206395165ULL);
  CHECK(rng.next() == 12380297144915551517ULL);
  Xorshift64Star zero(0);
  CHECK(zero.next() != 0);
}

TEST_CASE("uniform stays in range") {
  Xorshift64Star rng(99);
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("seed index 0 under rng seed 42 is pinned") {
  FuzzPolicy policy;
  const SeedSample sample = sample_valid_seed(policy, 0);
  REQUIRE(sample.seed.has_value());
  CHECK(format_seed_text(*sample.seed) == "tJ=0/1,tK=1/1,tA=2/11,tB=-1/1,tC=-5/7,s=-7/1");
  CHECK(sample.rejections == 1);
  REQUIRE(sample.recent_rejections.size() == 1);
  CHECK(sample.recent_rejections[0] == "degenerate-derivation");
  const VerificationReport report = verify_all(*sample.config, sample.derived);
  CHECK(report.summary().fail == 0);
  CHECK(report.summary().degenerate_pass == 0);
}

TEST_CASE("serial and parallel campaigns agree byte for byte") {
  FuzzPolicy policy;
  policy.count = 40;
  policy.rng_seed = 2024;
  const std::string serial = dump(campaign_to_json(run_campaign_serial(policy)));
  CHECK(serial == dump(campaign_to_json(run_campaign_parallel(policy, 3))));
  CHECK(serial == dump(campaign_to_json(run_campaign_parallel(policy))));
  CHECK(serial == dump(campaign_to_json(run_campaign_serial(policy))));
}

TEST_CASE("count 1 gives exactly one entry") {
  FuzzPolicy policy;
  policy.count = 1;
  policy.rng_seed = 123456789;
  const CampaignReport report = run_campaign_serial(policy);
  CHECK(report.entries.size() == 1);
  CHECK(report.verified == 1);
  CHECK(report.ok());
  const Json doc = campaign_to_json(report);
  CHECK(doc["entries"].size() == 1);
  CHECK(doc["summary"]["seeds"] == 1);
}

TEST_CASE("max magnitude 1 exhausts the retry budget") {
  FuzzPolicy policy;
  policy.count = 3;
  policy.max_magnitude = 1;
  policy.max_retries = 50;
  const CampaignReport report = run_campaign_serial(policy);
  CHECK(report.budget_exhausted);
  CHECK_FALSE(report.ok());
  CHECK(report.verified == 0);
  CHECK(report.rejections == 150);
  for (const auto& e : report.entries) {
    CHECK_FALSE(e.drawn());
    CHECK(e.recent_rejections.size() == 5);
    CHECK(e.recent_rejections.back() == "duplicate-parameter");
  }
  CHECK(campaign_to_json(report)["entries"][0]["status"] == "undrawn");
}

TEST_CASE("tallies account for every verified seed") {
  FuzzPolicy policy;
  policy.count = 30;
  const CampaignReport report = run_campaign_serial(policy);
  CHECK(report.tallies.size() == registered_checks().size());
  for (const auto& t : report.tallies) CHECK(t.pass + t.degenerate_pass + t.fail == report.verified);
}
