#include "sylow/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sylow {

LieType lie_type(Family f, int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  LieType t;
  t.family = f;
  t.n = n;
  switch (f) {
    case Family::A:
      throw std::invalid_argument("type A is sized by lie_type_a");
    case Family::B:
      t.N = 2 * n + 1;
      t.ntilde = n + 1;
      break;
    case Family::C:
    case Family::D:
      t.N = 2 * n;
      t.ntilde = n;
      break;
  }
  return t;
}

LieType lie_type_a(int N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  LieType t;
  t.family = Family::A;
  t.n = N - 1;
  t.N = N;
  t.ntilde = N;  // unused; tril/trir do not apply to type A
  return t;
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
  }
  throw std::invalid_argument("unknown type (expected A, B, C or D)");
}

int mirror(int i, int N) {
  if (i < 1 || i > N) throw std::out_of_range("mirror: index out of range");
  return N + 1 - i;
}

int epsilon(const LieType& t, int i, int j) {
  if (i < 1 || i > t.N || j < 1 || j > t.N) throw std::out_of_range("epsilon: index out of range");
  if (t.family != Family::C) return 1;
  bool hi = i > t.n, hj = j > t.n;
  return hi != hj ? -1 : 1;
}

int gram_sign(const LieType& t, int i, int j) {
  if (t.family == Family::A) throw std::invalid_argument("type A carries no bilinear form");
  if (i < 1 || i > t.N || j < 1 || j > t.N) throw std::out_of_range("gram_sign: index out of range");
  if (j != t.N + 1 - i) return 0;
  if (t.family == Family::C && i > t.n) return -1;
  return 1;
}

Region region_from_name(const std::string& name) {
  static const struct {
    const char* n;
    Region r;
  } table[] = {
      {"square", Region::Square}, {"diag", Region::Diag}, {"UR", Region::UR},
      {"CC", Region::CC},         {"UP", Region::UP},     {"RP", Region::RP},
      {"UPC", Region::UPC},       {"RPC", Region::RPC},   {"pUP", Region::PUP},
      {"tril", Region::Tril},     {"trir", Region::Trir}, {"KL", Region::KL},
      {"pKL", Region::PKL},
  };
  for (const auto& row : table)
    if (name == row.n) return row.r;
  throw std::invalid_argument("unknown region name: " + name);
}

const char* region_name(Region r) {
  switch (r) {
    case Region::Square: return "square";
    case Region::Diag: return "diag";
    case Region::UR: return "UR";
    case Region::CC: return "CC";
    case Region::UP: return "UP";
    case Region::RP: return "RP";
    case Region::UPC: return "UPC";
    case Region::RPC: return "RPC";
    case Region::PUP: return "pUP";
    case Region::Tril: return "tril";
    case Region::Trir: return "trir";
    case Region::KL: return "KL";
    case Region::PKL: return "pKL";
  }
  return "?";
}

bool in_region(const LieType& t, Region r, int i, int j) {
  const int N = t.N;
  if (i < 1 || i > N || j < 1 || j > N) return false;
  switch (r) {
    case Region::Square: return true;
    case Region::Diag: return i == j;
    case Region::UR: return i < j;
    case Region::CC: return i < j && i == N + 1 - j;
    case Region::UP: return i < j && j < N + 1 - i;
    case Region::RP: return N + 1 - j < i && i < j;
    case Region::UPC: return in_region(t, Region::UP, i, j) || in_region(t, Region::CC, i, j);
    case Region::RPC: return in_region(t, Region::RP, i, j) || in_region(t, Region::CC, i, j);
    case Region::PUP:
      if (t.family == Family::A) return i < j;
      if (t.family == Family::C) return in_region(t, Region::UPC, i, j);
      return in_region(t, Region::UP, i, j);
    case Region::Tril: return in_region(t, Region::PUP, i, j) && j <= t.ntilde;
    case Region::Trir: return in_region(t, Region::PUP, i, j) && j > t.ntilde;
    case Region::KL: return j < N + 1 - i;
    case Region::PKL:
      if (t.family == Family::C)
        return in_region(t, Region::KL, i, j) || in_region(t, Region::CC, i, j);
      return in_region(t, Region::KL, i, j);
  }
  return false;
}

std::vector<Pos> region_members(const LieType& t, Region r) {
  std::vector<Pos> out;
  for (int i = 1; i <= t.N; ++i)
    for (int j = 1; j <= t.N; ++j)
      if (in_region(t, r, i, j)) out.push_back({i, j});
  return out;
}

bool is_closed(const LieType& t, const std::vector<Pos>& J) {
  Region ambient = t.family == Family::A ? Region::UR : Region::PUP;
  std::set<Pos> s(J.begin(), J.end());
  for (const Pos& p : s)
    if (!in_region(t, ambient, p))
      throw std::invalid_argument("is_closed: subset leaves the ambient region");
  const int N = t.N;
  for (const Pos& a : s)
    for (const Pos& b : s) {
      if (a.j == b.i && in_region(t, ambient, a.i, b.j) && !s.contains({a.i, b.j}))
        return false;
      if (t.family == Family::A) continue;
      // condition (ii): a = (i,j), b = (kbar, jbar) with k = mirror(b.i)
      if (b.j == N + 1 - a.j) {
        int k = N + 1 - b.i;
        if (in_region(t, Region::PUP, a.i, k) && !s.contains({a.i, k})) return false;
      }
    }
  return true;
}

}  // namespace sylow
