// Runs every acceptance criterion and prints one line per criterion.
#include <cstdio>
#include <cstdlib>
#include <string>

#include <gammaspace/suite.hpp>

int main(int argc, char** argv) {
  gs::Config cfg;
  cfg.budget = 50'000'000;
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  std::vector<gs::suite::CheckResult> results;
  for (int k = 1; k <= gs::suite::criterion_count(); ++k) {
    if (only != 0 && k != only) continue;
    const auto r = gs::suite::run_criterion(k, cfg);
    const char* mark = r.passed() ? "PASS" : "FAIL";
    std::printf("%s %-4s %-26s %7.2fs / %5.0fs  %s", mark, r.id.c_str(), r.tag.c_str(), r.seconds, r.ceiling,
                r.title.c_str());
    if (!r.verdict.holds()) std::printf("  [%s: %s]", gs::to_string(r.verdict.status), r.verdict.detail.c_str());
    else if (!r.within_ceiling()) std::printf("  [over the time ceiling]");
    std::printf("\n");
    std::fflush(stdout);
    results.push_back(r);
  }
  int passed = 0;
  for (const auto& r : results) passed += r.passed() ? 1 : 0;
  std::printf("%d/%zu criteria passed\n", passed, results.size());
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
