#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "volterra_app/acceptance.hpp"

int main(int argc, char** argv) {
  volterra::app::AcceptanceOptions options;
  CLI::App app{"acceptance criteria"};
  std::string corpus = options.corpus.string();
  app.add_option("--corpus", corpus, "directory of operator JSON files");
  app.add_option("--seed", options.seed, "seed for random sample points");
  app.add_option("--only", options.only, "criterion ids to run");
  CLI11_PARSE(app, argc, argv);
  options.corpus = corpus;

  int failed = 0;
  const auto results = volterra::app::run_acceptance(options, [&](const volterra::app::CriterionResult& r) {
    std::cout << volterra::app::criterion_line(r) << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (failed == 0 && !results.empty() ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
  return failed == 0 && !results.empty() ? 0 : 1;
}
