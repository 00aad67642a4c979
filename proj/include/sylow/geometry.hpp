#pragma once

#include <compare>
#include <string>
#include <vector>

namespace sylow {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

// A classical type over the fixed ambient N x N square.  N = 2n+1 and
// ntilde = n+1 for B_n; N = 2n and ntilde = n for C_n and D_n.  Type A_{N-1}
// is carried along for the full unitriangular group.
struct LieType {
  Family family = Family::A;
  int n = 0;
  int N = 0;
  int ntilde = 0;
};

LieType lie_type(Family f, int n);
LieType lie_type_a(int N);  // A_{N-1} on an N x N square
Family family_from_char(char c);

// i -> N+1-i; an order-reversing involution of 1..N.
int mirror(int i, int N);

// epsilon_{ij}: -1 exactly when the type is C_n and exactly one of i, j lies
// in {n+1, ..., N}; +1 otherwise.
int epsilon(const LieType& t, int i, int j);

// Entry (i, j) of the Gram matrix S, in {-1, 0, +1}.  Types B, C, D only.
int gram_sign(const LieType& t, int i, int j);

// 1-based matrix position; the default ordering is row-major.
struct Pos {
  int i = 0;
  int j = 0;
  auto operator<=>(const Pos&) const = default;
};

enum class Region {
  Square,
  Diag,
  UR,    // strictly upper triangle, i < j
  CC,    // upper half of the antidiagonal, i = N+1-j, i < j
  UP,    // i < j < N+1-i
  RP,    // N+1-j < i < j
  UPC,   // UP + CC
  RPC,   // RP + CC
  PUP,   // UP for B/D, UPC for C, UR for A
  Tril,  // pUP with j <= ntilde
  Trir,  // pUP with j > ntilde
  KL,    // everything above the antidiagonal, j < N+1-i
  PKL,   // KL for B/D, KL + CC for C
};

Region region_from_name(const std::string& name);
const char* region_name(Region r);

bool in_region(const LieType& t, Region r, int i, int j);
inline bool in_region(const LieType& t, Region r, Pos p) { return in_region(t, r, p.i, p.j); }

// Members in row-major order (i ascending, then j ascending).
std::vector<Pos> region_members(const LieType& t, Region r);

// Closedness of J inside pUP:
//   (i)  (i,j), (j,k) in J           => (i,k) in J
//   (ii) (i,j), (kbar,jbar) in J and (i,k) in pUP => (i,k) in J
// For type A only condition (i) applies (J is a subset of UR).
// Throws if J is not contained in pUP (UR for type A).
bool is_closed(const LieType& t, const std::vector<Pos>& J);

}  // namespace sylow
