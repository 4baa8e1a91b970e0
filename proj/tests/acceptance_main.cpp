// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  mk1::acceptance::Options opt;
  int                      only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string const arg = argv[i];
    if (arg == "--quick") {
      opt.quick = true;
    } else if (arg.rfind("--seed=", 0) == 0) {
      opt.seed = std::stoull(arg.substr(7));
    } else if (arg.rfind("--only=", 0) == 0) {
      only = std::stoi(arg.substr(7));
    } else {
      std::cerr << "usage: acceptance [--quick] [--seed=N] [--only=ID]\n";
      return 2;
    }
  }
  bool ok     = true;
  auto report = [&](mk1::acceptance::Outcome const& o) {
    ok = ok && o.pass;
    std::cout << mk1::acceptance::format(o) << std::endl;
  };
  if (only) {
    report(mk1::acceptance::run_one(only, opt));
  } else {
    mk1::acceptance::run_all(opt, report);
  }
  std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILURES") << std::endl;
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
