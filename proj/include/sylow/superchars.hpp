#pragma once

#include <map>
#include <string>

#include "sylow/classfun.hpp"

namespace sylow {

// Data of one elementary character: position, nonzero alpha, the removed row
// pieces rho_{i,j}, the closed complement J_{i,j} = pUP \ rho_{i,j} and its
// normal sub-pattern J without (i,j) itself.
struct ElementaryDatum {
  Pos pos;
  gf::Elem alpha = 0;
  std::vector<Pos> rho;
  std::vector<Pos> J;
  std::vector<Pos> Jcirc;
};

ElementaryDatum elementary_datum(const GroupCtx& G, Pos p, gf::Elem alpha);

// |rho_{i,j}|, which the induced degree formula pins to j-i-1 on UP and n-i on
// the antidiagonal.
int elementary_degree_exponent(const GroupCtx& G, Pos p);

// U_{i,j} as a set, and the linear character u -> theta(alpha u_{ij}) on it.
std::vector<Mat> elementary_subgroup(const GroupCtx& G, const ElementaryDatum& d);
cyclo::CycInt elementary_linear_value(const GroupCtx& G, const ElementaryDatum& d, const Mat& u);

// xi^{i,j}_alpha, induced from U_{i,j}; multiplicativity is verified.
ClassFunction elementary_character(const GroupCtx& G, const ElementaryDatum& d);

// O^{i,j}_a = {[a].u : u in U_{i,j}} for a core a with mc = {(i,j)}; the shape
// of the result and the monomial identity [B]u = chi(u) [B].u are checked.
std::vector<LinChar> ij_suborbit(const GroupCtx& G, const LinChar& a, const ElementaryDatum& d);

struct ElementaryCaseReport {
  int case_id = 0;  // 1, 2 or 3
  cyclo::BigInt degree;
  cyclo::BigInt xi_norm;                 // <xi, xi>
  std::vector<cyclo::BigInt> multiplicities;  // <chi_{O_{A_beta}}, xi> per beta (case 2/3 detail)
  bool ok = false;
  std::string detail;
};

// Verifies the identification of xi^{i,j}_alpha with orbit characters:
// case 1 (tril, or type C with (i,j) in UP): xi = chi_{O_A} and <xi,xi> = 1;
// case 2 (types B/D, trir): xi = sum over beta of chi_{O_{A_beta}}, the
//   summands irreducible and pairwise orthogonal;
// case 3 (type C, j = ibar): <chi_{O_A}, xi> = 1 and <xi,xi> = 1.
ElementaryCaseReport identify_elementary(const GroupCtx& G, const ElementaryDatum& d);

// Utilde-orbit of a staircase character; checked to coincide with
// {[B] : verge(B) = verge(a)}.
std::vector<LinChar> tilde_orbit(const GroupCtx& G, const LinChar& a,
                                 std::uint64_t max_size = kOrbitSizeGuard);

// Basic subset D (mirror symmetric, at most one entry per row and per column
// of UR) together with the nonzero values Phi on D n pUP.
struct BasicSet {
  std::vector<Pos> D;  // full mirror-symmetric set, sorted
  std::map<Pos, gf::Elem> phi;
};

// Builds D as S + mirror(S) from S = D n pUP and validates both conditions;
// the thrown diagnostics name the violated condition.
BasicSet make_basic_set(const GroupCtx& G, const std::vector<std::pair<Pos, gf::Elem>>& s);

// Limb(A) n main(A) empty (implies staircase).
bool is_main_separated(const GroupCtx& G, const LinChar& a);

LinChar basic_verge(const GroupCtx& G, const BasicSet& bs);  // A(D, Phi)

// Product of the elementary characters over D n pUP; trivial for empty D.
ClassFunction supercharacter(const GroupCtx& G, const BasicSet& bs);

struct ANDecomposition {
  LinChar verge;
  std::vector<Orbit> orbits;           // U-orbits partitioning the Utilde-orbit
  std::vector<LinChar> cores;          // their cores, all main separated
  bool has_antidiagonal = false;       // some (i, ibar) in D (type C)
  bool character_identity = false;     // sum chi_O == xi (checked when no antidiagonal)
  cyclo::BigInt xi_multiplicity;       // <sum chi_O, xi> (>= 1 in the antidiagonal case)
  std::string detail;
  bool ok = false;
};

// The decomposition of the Andre-Neto module attached to (D, Phi) into
// U-orbit modules, with every claim re-checked numerically.
ANDecomposition decompose_AN(const GroupCtx& G, const BasicSet& bs,
                             std::uint64_t max_size = kOrbitSizeGuard);

}  // namespace sylow
