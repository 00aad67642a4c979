#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sylow/characters.hpp"

namespace sylow {

// Main / minor / supplementary conditions of [A] and the derived core and
// verge.  All position lists are sorted row-major.  Main conditions are the
// per-row rightmost nonzero entries; minor conditions mirror the right main
// conditions (dropped in type C when they land on the diagonal); a
// supplementary condition is a tril position left of a minor or left main
// condition of its row that shares a column with some minor condition and is
// not itself a minor or main condition.  core = mc + minc + suppl for B/D and
// mc + suppl for C.
struct Conditions {
  std::vector<Pos> mc, lmc, rmc, minc, suppl, core;
  LinChar verge;
  bool staircase = false;  // main conditions in pairwise distinct columns
};

Conditions conditions_of(const GroupCtx& G, const LinChar& a);
bool is_staircase(const GroupCtx& G, const LinChar& a);

// Arms, legs and places of a staircase character, with the bijection
// phi: Limb -> Pl in the canonical processing order (reduced legs by main
// condition column, each top-down; then arms by right main condition column,
// positions left to right).
struct LimbData {
  std::vector<Pos> legs, reduced_legs, arms;
  std::vector<Pos> limb;                    // reduced_legs + arms, sorted
  std::vector<Pos> places_p, places_m;      // the P and M parts, sorted
  std::vector<Pos> places;                  // union, sorted
  std::vector<std::pair<Pos, Pos>> order;   // (limb position, phi(position))
};

LimbData limbs_and_places(const GroupCtx& G, const Conditions& c);

// The unique member of the orbit of a with the prescribed entries on Pl(a).
// lambda must be total on the places.
LinChar fill_places(const GroupCtx& G, const LinChar& a, const std::map<Pos, gf::Elem>& lambda);

// The unique core character in the orbit of a (places filled with zero).
LinChar to_core(const GroupCtx& G, const LinChar& a);

struct Orbit {
  LinChar rep;                   // lexicographically least member
  std::vector<LinChar> members;  // sorted
  Conditions cond;
  std::optional<LinChar> core;   // present for staircase orbits
};

inline constexpr std::uint64_t kOrbitSizeGuard = 1'000'000;

// BFS closure of {a} under the right dot action of the root generators.
Orbit enumerate_orbit(const GroupCtx& G, const LinChar& a,
                      std::uint64_t max_size = kOrbitSizeGuard);

// A staircase character b with C O_a isomorphic to C O_b, together with the
// witness w in Utilde_pUP acting by b = w.a; repeatedly clears the lower of
// two main conditions sharing a column, sweeping columns right to left.
std::pair<LinChar, Mat> staircase_transform(const GroupCtx& G, const LinChar& a);

// J(A) = pUP \ Limb(A); closed for staircase conditions (checked).
std::vector<Pos> J_of(const GroupCtx& G, const Conditions& c);

// Brute-force stabilizer {u in U : [a].u = [a]}.
std::vector<Mat> stabilizer_brute(const GroupCtx& G, const LinChar& a,
                                  std::uint64_t max_size = kGroupSizeGuard);

// All orbits on Vhat, seeds visited in lexicographic order (so orbits come out
// sorted by their canonical representatives) and sizes summing to q^|pUP|.
std::vector<Orbit> orbit_decomposition(const GroupCtx& G,
                                       std::uint64_t max_orbit = kOrbitSizeGuard,
                                       std::uint64_t max_total = kGroupSizeGuard);

}  // namespace sylow
