#include <CLI11.hpp>

#include <iostream>

#include "lamistrat/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria, one PASS/FAIL line each"};
  lamistrat::AcceptanceOptions options;
  app.add_option("--seed", options.seed);
  app.add_option("--samples", options.samples)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (const auto& r : lamistrat::run_acceptance(options)) {
    all = all && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << "): " << r.checks
              << " checks";
    if (!r.failures.empty()) std::cout << "; first failure: " << r.failures.front();
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
