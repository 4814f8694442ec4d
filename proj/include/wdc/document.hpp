#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wdc/configuration.hpp"
#include "wdc/verifier.hpp"

namespace wdc {

using Json = nlohmann::ordered_json;

/// Malformed seed text or a document that does not match its schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "tJ=0,tK=1,tA=-1,tB=2,tC=3,s=-3/2". Every key exactly once, any order;
/// values are "p/q", "p" or "inf" (s may not be "inf").
ConfigurationSeed parse_seed_text(std::string_view text);
std::string format_seed_text(const ConfigurationSeed& seed);

Json seed_to_json(const ConfigurationSeed& seed);
ConfigurationSeed seed_from_json(const Json& doc);

/// Configuration document: seed, points, j, circles, centers. Rationals are
/// "p/q" strings.
Json configuration_to_json(const WoodDesarguesConfiguration& config);
/// Throws FormatError on any schema violation.
WoodDesarguesConfiguration configuration_from_json(const Json& doc);

/// Report document: seed, results, summary.
Json report_to_json(const VerificationReport& report);

/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& doc);
/// Throws FormatError on a parse failure or an empty input.
Json parse_document(std::string_view text);

}  // namespace wdc
