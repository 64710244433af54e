// Acceptance suite: runs the full cross-validation catalogue and prints one
// pass/fail line per criterion, with per-check detail on failure.

#include <cstdio>
#include <map>
#include <vector>

#include "grasscalc/verify.hpp"

int main() {
  using namespace grasscalc;

  VerifyOptions opts;
  opts.level = VerifyLevel::full;
  const std::vector<CheckResult> results = run_verification(opts);

  struct Bucket {
    int pass = 0;
    int fail = 0;
    double elapsed = 0.0;
    std::vector<const CheckResult*> failures;
  };
  std::map<int, Bucket> buckets;
  for (const CheckResult& r : results) {
    Bucket& b = buckets[r.criterion];
    b.elapsed += r.elapsed_seconds;
    if (r.status == CheckStatus::pass) ++b.pass;
    if (r.status == CheckStatus::fail) {
      ++b.fail;
      b.failures.push_back(&r);
    }
  }

  int total_failed = 0;
  const auto print_bucket = [&](int criterion, const Bucket& b) {
    const char* verdict = b.fail == 0 ? "PASS" : "FAIL";
    if (criterion == 0)
      std::printf("%s  extended: %s (%d/%d checks, %.2fs)\n", verdict,
                  criterion_label(criterion), b.pass, b.pass + b.fail,
                  b.elapsed);
    else
      std::printf("%s  criterion %d: %s (%d/%d checks, %.2fs)\n", verdict,
                  criterion, criterion_label(criterion), b.pass,
                  b.pass + b.fail, b.elapsed);
    for (const CheckResult* f : b.failures)
      std::printf("      failed %s: got [%s], expected [%s]\n", f->id.c_str(),
                  f->lhs.c_str(), f->rhs.c_str());
    total_failed += b.fail;
  };
  for (const auto& [criterion, b] : buckets)
    if (criterion != 0) print_bucket(criterion, b);
  if (auto it = buckets.find(0); it != buckets.end())
    print_bucket(0, it->second);

  const VerifySummary s = summarize(results);
  std::printf("summary: %d passed, %d failed, %d skipped\n", s.passed,
              s.failed, s.skipped);
  return total_failed == 0 ? 0 : 1;
}
