#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sylow/geometry.hpp"
#include "sylow/gf.hpp"

namespace sylow {

// Thrown when an enumeration would exceed its size cap; callers treat this
// differently from a verification failure.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense N x N matrix over F_q, 1-based accessors.
struct Mat {
  int N = 0;
  std::vector<gf::Elem> a;

  Mat() = default;
  explicit Mat(int n) : N(n), a(std::size_t(n) * n, 0) {}
  static Mat identity(int n);

  gf::Elem& at(int i, int j) { return a[std::size_t(i - 1) * N + (j - 1)]; }
  gf::Elem at(int i, int j) const { return a[std::size_t(i - 1) * N + (j - 1)]; }
  bool operator==(const Mat&) const = default;
};

// Everything the artifact computes happens inside one of these: the type, the
// field, and the cached position bookkeeping (pUP in row-major order and the
// completion positions RPC resp. RP).
class GroupCtx {
 public:
  GroupCtx(LieType t, gf::FieldCtx F);

  const LieType& type() const { return type_; }
  const gf::FieldCtx& field() const { return F_; }
  int N() const { return type_.N; }
  int q() const { return F_.q(); }
  int mir(int i) const { return type_.N + 1 - i; }

  const std::vector<Pos>& pup() const { return pup_; }
  int pup_index(int i, int j) const {
    if (i < 1 || i > type_.N || j < 1 || j > type_.N) return -1;
    return pup_idx_[std::size_t(i - 1) * type_.N + (j - 1)];
  }
  bool in_pup(int i, int j) const { return pup_index(i, j) >= 0; }
  // RPC for types B/D, RP for type C; row-major, so every entry the
  // completion recursion consumes is already known when it is reached.
  const std::vector<Pos>& completion_positions() const { return comp_; }

  std::uint64_t u_order() const;  // q^|pUP|; throws BudgetError on overflow

 private:
  LieType type_;
  gf::FieldCtx F_;
  std::vector<Pos> pup_;
  std::vector<int> pup_idx_;
  std::vector<Pos> comp_;
};

// --- matrix arithmetic ------------------------------------------------------

Mat multiply(const GroupCtx& G, const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
// Inverse of an upper unitriangular matrix.
Mat inverse_unitriangular(const GroupCtx& G, const Mat& u);
bool is_unitriangular(const Mat& a);

// The antiautomorphism A -> A^R, (A^R)_{ij} = epsilon_{ij} A_{jbar, ibar}.
Mat r_dual(const GroupCtx& G, const Mat& a);
// Gram matrix S of the invariant form.
Mat gram_matrix(const GroupCtx& G);

// Membership in U = G(q) n U_N(q): u unitriangular and (u u^R)_{rs} = 0 on RPC.
bool is_member(const GroupCtx& G, const Mat& u);

// --- coordinates and completion ---------------------------------------------

// Values on pUP, aligned with GroupCtx::pup().
using Coords = std::vector<gf::Elem>;

// The unique u in U with u_{ij} = lambda_{ij} on pUP; the remaining entries
// follow from the membership recursion, processed row by row, left to right.
Mat complete(const GroupCtx& G, const Coords& lambda);
Coords extract_coords(const GroupCtx& G, const Mat& u);

// --- root elements and pattern subgroups -------------------------------------

// x_{ij}(alpha) for (i,j) in pUP, by type:
//   B, j != n+1 : 1 + a e_{ij} - a e_{jbar,ibar}
//   B, j == n+1 : 1 + a e_{i,n+1} - a e_{n+1,ibar} - (a^2/2) e_{i,ibar}
//   C, j <= n   : 1 + a e_{ij} - a e_{jbar,ibar}
//   C, n<j<ibar : 1 + a e_{ij} + a e_{jbar,ibar}
//   C, j == ibar: 1 + a e_{i,ibar}
//   D           : 1 + a e_{ij} - a e_{jbar,ibar}
Mat root_element(const GroupCtx& G, Pos p, gf::Elem alpha);
// xtilde_{ij}(alpha) = 1 + alpha e_{ij}, i < j.
Mat tilde_root(const GroupCtx& G, int i, int j, gf::Elem alpha);

// Coefficients alpha with  prod_{k} x_{order[k]}(alpha[k]) = u,  the product
// taken in the given order.  Throws std::invalid_argument when u is not a
// product over the given positions (round trip is always re-checked).
std::vector<std::pair<Pos, gf::Elem>> factorize(const GroupCtx& G, const Mat& u,
                                                const std::vector<Pos>& order);

// x = xt * z with xt in Utilde_pUP and z in Utilde_J, J = UR \ pUP; both unique.
std::pair<Mat, Mat> factor_tilde(const GroupCtx& G, const Mat& x);

// --- enumeration --------------------------------------------------------------

inline constexpr std::uint64_t kGroupSizeGuard = 10'000'000;

// Canonical indexing of U: the pUP coordinate vector read as a base-q number,
// most significant digit first, so index order is lexicographic on Coords.
std::uint64_t u_index(const GroupCtx& G, const Mat& u);
Mat u_element(const GroupCtx& G, std::uint64_t idx);

// All of U in index order.  Guarded by max_size.
std::vector<Mat> enumerate_u(const GroupCtx& G, std::uint64_t max_size = kGroupSizeGuard);

// Pattern subgroup U_J for closed J (products of root elements over J, odometer
// order); q^|J| elements, each exactly once.
std::vector<Mat> pattern_subgroup(const GroupCtx& G, const std::vector<Pos>& J,
                                  std::uint64_t max_size = kGroupSizeGuard);
// Membership u in U_J for closed J: u in U and coordinates supported on J.
bool pattern_member(const GroupCtx& G, const std::vector<Pos>& J, const Mat& u);

// Type-A pattern subgroup Utilde_J for J closed in UR; Utilde itself is
// tilde_pattern_subgroup over the whole of UR.
std::vector<Mat> tilde_pattern_subgroup(const GroupCtx& G, const std::vector<Pos>& J,
                                        std::uint64_t max_size = kGroupSizeGuard);

}  // namespace sylow
