// Acceptance driver: runs the eight fixed verification suites and prints one
// PASS/FAIL line per suite.  Exit code 0 iff everything passed; 3 on a budget
// problem.

#include <cstdio>
#include <cstring>
#include <string>

#include "sylow/accept.hpp"

int main(int argc, char** argv) {
  sylow::accept::Options opt;
  int only = 0;
  for (int k = 1; k < argc; ++k) {
    std::string arg = argv[k];
    auto next = [&]() -> std::string {
      if (k + 1 >= argc) {
        std::fprintf(stderr, "missing value for %s\n", arg.c_str());
        std::exit(2);
      }
      return argv[++k];
    };
    if (arg == "--criterion")
      only = std::stoi(next());
    else if (arg == "--seed")
      opt.seed = std::stoull(next());
    else if (arg == "--sample-pairs")
      opt.sample_pairs = std::stoi(next());
    else if (arg == "--sample-triples")
      opt.sample_triples = std::stoi(next());
    else {
      std::fprintf(stderr, "usage: %s [--criterion k] [--seed s] [--sample-pairs n] [--sample-triples n]\n",
                   argv[0]);
      return 2;
    }
  }

  try {
    bool all = true;
    auto report = [&](const sylow::accept::Result& r) {
      all = all && r.pass;
      std::printf("%s  criterion %d: %s (%.1fs, limit %.0fs)%s%s\n", r.pass ? "PASS" : "FAIL",
                  r.id, r.name.c_str(), r.seconds, r.limit_seconds,
                  r.detail.empty() ? "" : " -- ", r.detail.c_str());
      std::fflush(stdout);
    };
    if (only > 0) {
      report(sylow::accept::run_criterion(only, opt));
    } else {
      for (int id = 1; id <= 8; ++id) report(sylow::accept::run_criterion(id, opt));
    }
    return all ? 0 : 1;
  } catch (const sylow::BudgetError& e) {
    std::fprintf(stderr, "budget exceeded: %s\n", e.what());
    return 3;
  }
}
