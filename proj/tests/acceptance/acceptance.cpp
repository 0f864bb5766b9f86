// Prints one line per acceptance criterion and exits non-zero if any failed.
// Usage: acceptance [--seed N] [--small] [--json]

#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>

#include "verify/verify.hpp"

int main(int argc, char** argv) {
  mobiuslab::SuiteOptions options;
  options.size = mobiuslab::SuiteSize::Full;
  bool json = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      options.seed = std::stoull(argv[++i]);
    } else if (std::strcmp(argv[i], "--small") == 0) {
      options.size = mobiuslab::SuiteSize::Small;
    } else if (std::strcmp(argv[i], "--json") == 0) {
      json = true;
    } else {
      std::fprintf(stderr, "usage: %s [--seed N] [--small] [--json]\n", argv[0]);
      return 2;
    }
  }
  int failed = 0;
  for (int id = 1; id <= 20; ++id) {
    const auto item = mobiuslab::run_suite_item(id, options);
    if (!item.pass) ++failed;
    std::printf("criterion %2d: %s  %s: %s (%.1fs)\n", id, item.pass ? "PASS" : "FAIL", item.name.c_str(),
                item.summary.c_str(), item.seconds);
    if (json) std::cout << mobiuslab::to_json(item).dump() << "\n";
    std::fflush(stdout);
  }
  std::printf("%d/20 criteria passed\n", 20 - failed);
  return failed == 0 ? 0 : 1;
}
