#include "wdc/campaign.hpp"

#include <omp.h>

#include <algorithm>

namespace wdc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::size_t kKeptRejections = 5;

std::uint64_t splitmix64_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Scalar draw_rational(Xorshift64Star& rng, std::int64_t max_magnitude) {
  const std::int64_t p = rng.uniform(-max_magnitude, max_magnitude);
  const std::int64_t q = rng.uniform(1, max_magnitude);
  return make_scalar(static_cast<long>(p), static_cast<long>(q));
}

void note_rejection(SeedSample& sample, std::string reason) {
  ++sample.rejections;
  sample.recent_rejections.push_back(std::move(reason));
  if (sample.recent_rejections.size() > kKeptRejections) {
    sample.recent_rejections.erase(sample.recent_rejections.begin());
  }
}

void tally(CampaignReport& report) {
  for (const auto& e : report.entries) {
    if (!e.drawn() || !e.error.empty()) continue;
    for (auto& t : report.tallies) {
      const bool failed = std::find(e.failed_checks.begin(), e.failed_checks.end(), t.name) != e.failed_checks.end();
      const bool degenerate =
          std::find(e.degenerate_checks.begin(), e.degenerate_checks.end(), t.name) != e.degenerate_checks.end();
      if (failed) {
        ++t.fail;
      } else if (degenerate) {
        ++t.degenerate_pass;
      } else {
        ++t.pass;
      }
    }
  }
}

CampaignReport aggregate(const FuzzPolicy& policy, std::vector<CampaignEntry> entries) {
  CampaignReport report;
  report.policy = policy;
  for (const auto& name : registered_checks()) report.tallies.push_back({name});
  for (const auto& e : entries) {
    report.rejections += e.rejections;
    if (!e.drawn()) {
      report.budget_exhausted = true;
      continue;
    }
    ++report.verified;
    if (e.summary.fail > 0 || !e.error.empty()) ++report.failed_seeds;
    report.degenerate_flags += e.summary.degenerate_pass;
  }
  report.entries = std::move(entries);
  tally(report);
  return report;
}

}  // namespace

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(seed == 0 ? kGolden : seed) {}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::int64_t Xorshift64Star::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

std::uint64_t stream_seed(std::uint64_t rng_seed, std::size_t index) {
  return splitmix64_finalize(rng_seed + (static_cast<std::uint64_t>(index) + 1) * kGolden);
}

ConfigurationSeed draw_seed(Xorshift64Star& rng, std::int64_t max_magnitude) {
  Scalar tj = draw_rational(rng, max_magnitude);
  Scalar tk = draw_rational(rng, max_magnitude);
  Scalar ta = draw_rational(rng, max_magnitude);
  Scalar tb = draw_rational(rng, max_magnitude);
  Scalar tc = draw_rational(rng, max_magnitude);
  Scalar s = draw_rational(rng, max_magnitude);
  return {tj, tk, ta, tb, tc, s};
}

SeedSample sample_valid_seed(const FuzzPolicy& policy, std::size_t index) {
  SeedSample sample;
  Xorshift64Star rng(stream_seed(policy.rng_seed, index));
  while (sample.rejections < policy.max_retries) {
    const ConfigurationSeed seed = draw_seed(rng, policy.max_magnitude);
    try {
      WoodDesarguesConfiguration config = build_configuration(seed);
      DerivedFigures derived = derive_figures(config);
      if (!derived.complete()) {
        note_rejection(sample, "degenerate-derivation");
        continue;
      }
      sample.seed = seed;
      sample.config = std::move(config);
      sample.derived = std::move(derived);
      return sample;
    } catch (const DegenerateSeed& e) {
      note_rejection(sample, reason_code(e.defect()));
    }
  }
  return sample;
}

CampaignEntry run_campaign_entry(const FuzzPolicy& policy, std::size_t index) {
  CampaignEntry entry;
  entry.index = index;
  try {
    SeedSample sample = sample_valid_seed(policy, index);
    entry.rejections = sample.rejections;
    entry.recent_rejections = std::move(sample.recent_rejections);
    if (!sample.seed) return entry;
    entry.seed = sample.seed;
    const VerificationReport report = verify_all(*sample.config, sample.derived);
    entry.summary = report.summary();
    for (const auto& r : report.results) {
      if (r.status == CheckStatus::Fail) entry.failed_checks.push_back(r.name);
      if (r.status == CheckStatus::DegeneratePass) entry.degenerate_checks.push_back(r.name);
    }
  } catch (const std::exception& e) {
    entry.error = e.what();
  }
  return entry;
}

CampaignReport run_campaign_serial(const FuzzPolicy& policy) {
  std::vector<CampaignEntry> entries;
  entries.reserve(policy.count);
  for (std::size_t i = 0; i < policy.count; ++i) entries.push_back(run_campaign_entry(policy, i));
  return aggregate(policy, std::move(entries));
}

CampaignReport run_campaign_parallel(const FuzzPolicy& policy, int threads) {
  std::vector<CampaignEntry> entries(policy.count);
  const int team = threads > 0 ? threads : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(policy.count);
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
  for (std::int64_t i = 0; i < n; ++i) {
    entries[static_cast<std::size_t>(i)] = run_campaign_entry(policy, static_cast<std::size_t>(i));
  }
  return aggregate(policy, std::move(entries));
}

Json campaign_to_json(const CampaignReport& report) {
  Json doc = Json::object();
  doc["policy"] = Json{{"count", report.policy.count},
                       {"rngSeed", report.policy.rng_seed},
                       {"maxMagnitude", report.policy.max_magnitude},
                       {"maxRetries", report.policy.max_retries}};
  doc["summary"] = Json{{"seeds", report.entries.size()},
                        {"verified", report.verified},
                        {"failedSeeds", report.failed_seeds},
                        {"degenerateFlags", report.degenerate_flags},
                        {"rejections", report.rejections},
                        {"budgetExhausted", report.budget_exhausted}};
  Json checks = Json::array();
  for (const auto& t : report.tallies) {
    checks.push_back(Json{{"name", t.name}, {"pass", t.pass}, {"degenerate_pass", t.degenerate_pass}, {"fail", t.fail}});
  }
  doc["checks"] = std::move(checks);
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json entry{{"index", e.index}};
    if (!e.drawn()) {
      entry["status"] = "undrawn";
      entry["rejections"] = e.rejections;
      entry["lastRejections"] = e.recent_rejections;
      entries.push_back(std::move(entry));
      continue;
    }
    entry["seed"] = format_seed_text(*e.seed);
    entry["rejections"] = e.rejections;
    entry["status"] = !e.error.empty() || e.summary.fail > 0 ? "fail"
                      : e.summary.degenerate_pass > 0        ? "degenerate-pass"
                                                             : "pass";
    if (!e.failed_checks.empty()) entry["failed"] = e.failed_checks;
    if (!e.degenerate_checks.empty()) entry["degenerate"] = e.degenerate_checks;
    if (!e.error.empty()) entry["error"] = e.error;
    entries.push_back(std::move(entry));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

}  // namespace wdc
