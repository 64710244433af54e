#ifndef GRASSCALC_VERIFY_HPP
#define GRASSCALC_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace grasscalc {

enum class VerifyLevel { quick, full };
enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string id;
  int criterion = 0;  // 1..9; 0 marks extended full-level extras
  CheckStatus status = CheckStatus::skipped;
  std::string lhs;  // computed value(s)
  std::string rhs;  // expected value
  double elapsed_seconds = 0.0;
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::quick;
  // When set, checks are skipped once the elapsed wall clock reaches the
  // budget; skipped checks never fail the run.
  std::optional<double> budget_seconds;
  // Self-test knob: runs the whole suite against a sign-flipped Berezin
  // integral. A healthy harness must then report failures.
  bool mutate_berezin_sign = false;
};

struct VerifySummary {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

using CheckProgress = std::function<void(const CheckResult&)>;

// Runs the cross-validation suite: normalization, the three closed-form
// families, trace moments, the q-decomposition, the off-diagonal pair
// integral, the G(2,N) family, duality pairing, and randomized algebra
// properties. quick stays within dim_top <= 12; full runs everything.
std::vector<CheckResult> run_verification(const VerifyOptions& opts,
                                          const CheckProgress& progress = {});

VerifySummary summarize(const std::vector<CheckResult>& results);

const char* to_string(CheckStatus s);
const char* criterion_label(int criterion);

}  // namespace grasscalc

#endif
