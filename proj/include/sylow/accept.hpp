#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sylow/group.hpp"

namespace sylow::accept {

struct Options {
  std::uint64_t seed = 1;
  int sample_pairs = 10000;     // sampled closure pairs for large groups
  int sample_triples = 10000;   // sampled action-axiom triples
  std::uint64_t max_group = kGroupSizeGuard;
  std::uint64_t max_orbit = kOrbitSizeGuard;
};

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;  // empty on pass; otherwise names the violated claim
};

// The eight fixed verification suites.  Failure details carry the claim
// anchors (unique, fonecocycle, monomial, classifybycore, J in stab,
// isotostair, eldegree, identificationANorbits, mincond, DecANorbits,
// TruncatedColumnOperationG, RestrRowTildeU, leftactionSupp).
Result run_criterion(int id, const Options& opt);
std::vector<Result> run_all(const Options& opt);

// The generic per-configuration checks behind `verify --type X --n k --q q`:
// group construction, cocycle, fast-vs-dense action agreement, and (within
// budget) the regular-character identity and staircase classification.
std::vector<Result> run_config_suite(Family fam, int n, long q, const Options& opt);

}  // namespace sylow::accept
