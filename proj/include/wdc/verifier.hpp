#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdc/configuration.hpp"

namespace wdc {

enum class CheckStatus { Pass, Fail, DegeneratePass };

const char* to_string(CheckStatus status);

struct Witness {
  std::string label;
  std::string value;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// A failing result carries at least one witness whose value is the nonzero
/// residual of the violated equality. A degenerate pass names the coincidence
/// in its notes.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::vector<Witness> witnesses;
  std::string notes;
};

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t degenerate_pass = 0;
};

struct VerificationReport {
  std::optional<ConfigurationSeed> seed;
  std::vector<CheckResult> results;

  ReportSummary summary() const;
  bool ok() const { return summary().fail == 0; }
  const CheckResult* find(std::string_view name) const;
};

/// Names of every check run by verify_all, in report order.
const std::vector<std::string>& registered_checks();

// Each check is an exact, zero-tolerance evaluation. Geometric errors raised
// while evaluating (parallel lines in a tampered configuration, say) propagate;
// verify_all turns them into failures.

CheckResult check_perspective(const WoodDesarguesConfiguration& config, const PerspectiveRecord& record);
CheckResult check_five_circles(const WoodDesarguesConfiguration& config, const DerivedFigures& derived);
CheckResult check_core_similarity(const WoodDesarguesConfiguration& config);
CheckResult check_orthocentre_quadrangle(const WoodDesarguesConfiguration& config, const DerivedFigures& derived,
                                         CircleLabel circle);
CheckResult check_steiner_line(const WoodDesarguesConfiguration& config, const DerivedFigures& derived,
                               CircleLabel circle);
CheckResult check_pentagon_perspectives(const WoodDesarguesConfiguration& config, const DerivedFigures& derived);
CheckResult check_pentagon_quadrangles(const WoodDesarguesConfiguration& config, const DerivedFigures& derived);
CheckResult check_tangent_concurrency(const WoodDesarguesConfiguration& config, const DerivedFigures& derived);
CheckResult check_hagge(const WoodDesarguesConfiguration& config, const DerivedFigures& derived);

/// Lines through p, q, r meet at s on circle pqr; the perpendiculars to them
/// at p, q, r must concur at the antipode of s. Throws CollinearPoints when
/// p, q, r are collinear; s equal to one of them is a degenerate pass.
CheckResult check_lemma1(const Point& p, const Point& q, const Point& r, const Point& s);
/// Whether the perpendiculars at p, q, r to sp, sq, sr share a point. Used for
/// the converse direction (s off the circle).
bool perpendiculars_concurrent(const Point& p, const Point& q, const Point& r, const Point& s);

struct Lemma2Points {
  Circle s1;  // through J, O, L
  Circle s2;  // centre L, through J
  Circle s3;  // centre O, through J
  Point a;    // s2 and s3 again
  Point b;    // s1 and s2 again
  Point d;    // s3 and s1 again
  /// Set when the circles are coaxial or two of them touch at J.
  std::optional<std::string> degeneracy;
};

/// Throws CollinearPoints when j, o, l are collinear.
Lemma2Points lemma2_points(const Point& j, const Point& o, const Point& l);

/// Checks O, A, B and L, A, D collinear. The literally printed triple L, B, D
/// is evaluated and reported in the notes only.
CheckResult check_lemma2(const Point& j, const Point& o, const Point& l);

/// Lemma 1 on (L, M, N) with S = Z; the antipode must be Y.
CheckResult check_lemma1_instance(const WoodDesarguesConfiguration& config, const DerivedFigures& derived);
/// Lemma 2 on (J, U, L); the three second meets must be A, W and Z.
CheckResult check_lemma2_instance(const WoodDesarguesConfiguration& config, const DerivedFigures& derived);

VerificationReport verify_all(const WoodDesarguesConfiguration& config);
VerificationReport verify_all(const WoodDesarguesConfiguration& config, const DerivedFigures& derived);

}  // namespace wdc
