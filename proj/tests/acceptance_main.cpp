// One line per acceptance criterion; exit status 1 if any fails.

#include <CLI11.hpp>

#include <iostream>

#include "lefschetz/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  app.add_option("--only", only, "criterion numbers (default: all)")
      ->check(CLI::Range(1, lefschetz::acceptance::kCriterionCount));
  CLI11_PARSE(app, argc, argv);

  std::size_t failed = 0;
  const auto outcomes = lefschetz::acceptance::run(only);
  for (const auto& o : outcomes) {
    std::cout << lefschetz::acceptance::format(o) << std::endl;
    failed += !o.pass;
  }
  std::cout << outcomes.size() - failed << "/" << outcomes.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
