// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>

#include "vk/acceptance.hpp"

int main() {
  vk::AcceptanceOptions opts;
  opts.on_result = [](const vk::CriterionResult& r) {
    std::printf("[%s] %2d %s: %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  };
  int failed = 0;
  for (const auto& r : vk::run_acceptance(opts)) failed += r.passed ? 0 : 1;
  std::printf("%d/12 criteria passed\n", 12 - failed);
  return failed == 0 ? 0 : 1;
}
