#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sylow/cyclo.hpp"
#include "sylow/group.hpp"

namespace sylow {

// [A], a linear character of (V,+) labelled by its matrix A supported on pUP;
// entry k belongs to GroupCtx::pup()[k].  The identification is [A] = chi_{-A},
// and every coefficient formula below is stated for [A] under that convention.
// Comparison is lexicographic, which doubles as the canonical orbit order
// (row-major positions, then field-element order).
struct LinChar {
  std::vector<gf::Elem> v;
  bool operator==(const LinChar&) const = default;
  auto operator<=>(const LinChar&) const = default;
};

struct LinCharHash {
  std::size_t operator()(const LinChar& a) const {
    std::size_t h = 1469598103934665603ull;
    for (gf::Elem e : a.v) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

LinChar zero_char(const GroupCtx& G);
LinChar unit_char(const GroupCtx& G, Pos p, gf::Elem value);
gf::Elem char_entry(const GroupCtx& G, const LinChar& a, int i, int j);  // 0 off pUP
Mat char_to_matrix(const GroupCtx& G, const LinChar& a);
LinChar project_pup(const GroupCtx& G, const Mat& m);  // pi_{pUP}

// kappa(A,B) = tr(A^t B) = sum over the common support of A_ij B_ij.
gf::Elem kappa(const GroupCtx& G, const Mat& a, const Mat& b);
gf::Elem kappa(const GroupCtx& G, const LinChar& a, const Mat& b);
gf::Elem kappa(const GroupCtx& G, const LinChar& a, const LinChar& b);

// f: the projection of a unitriangular matrix to its pUP entries; a right
// 1-cocycle for the V-action below, bijective on U.
LinChar cocycle_f(const GroupCtx& G, const Mat& u);

// The V-action A.u = pi(Au) of Utilde on V (this is the action appearing in
// the cocycle identity f(uv) = f(u).v + f(v); it is not the character action).
LinChar v_dot(const GroupCtx& G, const LinChar& a, const Mat& u);

// --- right action on characters ----------------------------------------------

// [A].u = [pi(A u^{-t})], dense route.
LinChar dot_right(const GroupCtx& G, const LinChar& a, const Mat& u);
// Restricted column operation: [A].xtilde_{ij}(alpha) adds -alpha * column j
// to column i and truncates to pUP.
LinChar dot_right_tilde(const GroupCtx& G, const LinChar& a, int i, int j, gf::Elem alpha);
// [A].x_{ij}(alpha) via the column-operation decomposition of the root element.
LinChar dot_right_root(const GroupCtx& G, const LinChar& a, Pos p, gf::Elem alpha);

// zeta_p^exponent * [chr]
struct MonomialTerm {
  int exponent = 0;  // in Z_p
  LinChar chr;
};

// [A]u = zeta^t [A].u with t = Tr(kappa(-A, f(u^{-1}))); valid for u in Utilde.
MonomialTerm monomial_right(const GroupCtx& G, const LinChar& a, const Mat& u);

// --- left actions -------------------------------------------------------------

// u.[A] = [pi(u^{-t} A)], dense route.
LinChar dot_left(const GroupCtx& G, const Mat& u, const LinChar& a);
// Restricted row operation: xtilde_{ij}(alpha).[A] adds -alpha * row i to
// row j and truncates; trivial whenever ibar < j.
LinChar dot_left_tilde(const GroupCtx& G, int i, int j, gf::Elem alpha, const LinChar& a);

// An element of C Vhat with exact cyclotomic-rational coefficients.
struct CharCombination {
  std::map<LinChar, cyclo::CycRat> terms;  // no zero coefficients stored
};

// lambda_x [A] expanded in the character basis by brute force over all of U.
CharCombination lambda_left_general(const GroupCtx& G, const Mat& x, const LinChar& a,
                                    std::uint64_t max_size = kGroupSizeGuard);
// Single-term form, valid when supp(x^{-t} A) lies in pKL; throws
// std::domain_error("support leaves pKL") otherwise.
MonomialTerm lambda_left_fast(const GroupCtx& G, const Mat& x, const LinChar& a);

// f*([A]) as a vector over U in u_index order: u -> zeta^{Tr(kappa(-A, u))}.
std::vector<cyclo::CycInt> f_star(const GroupCtx& G, const LinChar& a,
                                  std::uint64_t max_size = kGroupSizeGuard);

}  // namespace sylow
