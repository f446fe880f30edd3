#include <cstdlib>
#include <iostream>
#include <string>

#include "mvkit/acceptance.hpp"

int main(int argc, char** argv) {
  mvkit::AcceptanceOptions opts;
  if (argc > 1) opts.seed = std::stoull(argv[1]);
  int failed = 0;
  for (int id = 1; id <= mvkit::kCriterionCount; ++id) {
    auto r = mvkit::run_criterion(id, opts);
    std::cout << mvkit::format_result(r) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << mvkit::kCriterionCount - failed << "/" << mvkit::kCriterionCount
            << " (seed " << opts.seed << ")" << std::endl;
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
