// Acceptance runner: executes the full nine-criterion suite and prints one
// PASS/FAIL line per criterion. Exit code 0 only if every criterion passes
// within its time budget.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "psf/verify.hpp"

int main(int argc, char** argv) {
  psf::AcceptanceOptions opt;
  if (const char* env = std::getenv("PSF_JOBS")) opt.jobs = std::max(1, std::atoi(env));
  if (argc > 1) opt.jobs = std::max(1, std::atoi(argv[1]));

  psf::VerifyReport report = psf::run_acceptance(opt);

  // Wall-clock budgets for the two heavyweight criteria.
  for (psf::CriterionOutcome& c : report.criteria) {
    double budget = c.id == 1 ? 600.0 : c.id == 3 ? 300.0 : 0.0;
    if (budget > 0.0 && c.seconds > budget) {
      c.pass = false;
      c.note = "time budget of " + std::to_string(budget) + "s exceeded";
    }
  }

  int failed = 0;
  for (const psf::CriterionOutcome& c : report.criteria) {
    if (!c.pass) ++failed;
    std::printf("%s criterion %d: %s (%lld checks, %lld failures, %.1fs)%s%s\n",
                c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.checked,
                c.failures, c.seconds, c.note.empty() ? "" : " — ",
                c.note.c_str());
  }
  if (failed == 0) {
    std::printf("all %zu criteria passed\n", report.criteria.size());
    return 0;
  }
  std::printf("%d of %zu criteria failed\n", failed, report.criteria.size());
  return 1;
}
