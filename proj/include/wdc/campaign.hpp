#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdc/configuration.hpp"
#include "wdc/document.hpp"
#include "wdc/verifier.hpp"

namespace wdc {

struct FuzzPolicy {
  std::size_t count = 1000;
  std::uint64_t rng_seed = 42;
  /// Parameters are p/q with |p| <= max_magnitude and 1 <= q <= max_magnitude.
  std::int64_t max_magnitude = 12;
  /// Rejections allowed while drawing one valid seed.
  std::size_t max_retries = 1000;
};

/// xorshift64* (Vigna). The state is never zero.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next();
  /// lo + next() % (hi - lo + 1); requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// Initial state of the stream that draws seed number `index`: a splitmix64
/// finalization of rng_seed + (index + 1) * golden-ratio constant.
std::uint64_t stream_seed(std::uint64_t rng_seed, std::size_t index);

/// One unvalidated draw: tJ, tK, tA, tB, tC, s, each numerator then
/// denominator.
ConfigurationSeed draw_seed(Xorshift64Star& rng, std::int64_t max_magnitude);

struct SeedSample {
  std::optional<ConfigurationSeed> seed;
  std::optional<WoodDesarguesConfiguration> config;
  DerivedFigures derived;
  std::size_t rejections = 0;
  /// Reason codes of the most recent rejections (at most five).
  std::vector<std::string> recent_rejections;
};

/// Rejection-samples the index-th seed: distinct parameters, a buildable
/// configuration and a complete set of derived figures.
SeedSample sample_valid_seed(const FuzzPolicy& policy, std::size_t index);

struct CampaignEntry {
  std::size_t index = 0;
  std::optional<ConfigurationSeed> seed;
  std::size_t rejections = 0;
  std::vector<std::string> recent_rejections;
  ReportSummary summary;
  std::vector<std::string> failed_checks;
  std::vector<std::string> degenerate_checks;
  std::string error;

  bool drawn() const { return seed.has_value(); }
};

struct CheckTally {
  std::string name;
  std::size_t pass = 0;
  std::size_t degenerate_pass = 0;
  std::size_t fail = 0;
};

struct CampaignReport {
  FuzzPolicy policy;
  std::vector<CampaignEntry> entries;
  std::vector<CheckTally> tallies;
  std::size_t verified = 0;
  std::size_t failed_seeds = 0;
  std::size_t degenerate_flags = 0;
  std::size_t rejections = 0;
  bool budget_exhausted = false;

  bool ok() const { return failed_seeds == 0 && !budget_exhausted; }
};

CampaignEntry run_campaign_entry(const FuzzPolicy& policy, std::size_t index);

/// Reference implementation: one seed after another.
CampaignReport run_campaign_serial(const FuzzPolicy& policy);
/// OpenMP over seed indices; threads <= 0 uses the runtime default. The
/// result is identical to run_campaign_serial.
CampaignReport run_campaign_parallel(const FuzzPolicy& policy, int threads = 0);

Json campaign_to_json(const CampaignReport& report);

}  // namespace wdc
