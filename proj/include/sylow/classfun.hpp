#pragma once

#include <functional>
#include <unordered_set>

#include "sylow/cyclo.hpp"
#include "sylow/orbits.hpp"

namespace sylow {

// A complex-valued function on U, stored on every element in u_index order.
// Conjugation invariance is something we check, never assume.
struct ClassFunction {
  std::vector<cyclo::CycInt> vals;
  const cyclo::CycInt& at(std::uint64_t idx) const { return vals[idx]; }
};

ClassFunction trivial_character(const GroupCtx& G);
// |U| at the identity, zero elsewhere.
ClassFunction regular_character(const GroupCtx& G);

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_mul(const ClassFunction& a, const ClassFunction& b);  // pointwise
bool cf_equal(const ClassFunction& a, const ClassFunction& b);

// chi_O(u) = sum over members [B] fixed by the dot action of u of
// zeta^{Tr(kappa(-B, f(u^{-1})))}.
ClassFunction orbit_character(const GroupCtx& G, const Orbit& o);
// Same trace over any plain set of characters closed under the action.
ClassFunction member_set_character(const GroupCtx& G, const std::vector<LinChar>& members);

// Frobenius induction of a linear character chi of the subgroup H (given by
// enumeration).  chi is checked to be multiplicative on H; values of the
// induced character are checked to be honest algebraic integers (the division
// by |H| must be exact).
ClassFunction induce(const GroupCtx& G, const std::vector<Mat>& H,
                     const std::function<cyclo::CycInt(const Mat&)>& chi,
                     bool check_multiplicative = true);

// <chi, psi> = (1/|U|) sum_u chi(u) conj(psi(u)).  The sum must come out
// rational and the division exact; anything else throws std::logic_error.
cyclo::BigInt inner_product(const GroupCtx& G, const ClassFunction& a, const ClassFunction& b);

// Explicit conjugation-invariance check.
bool is_class_function(const GroupCtx& G, const ClassFunction& f,
                       std::uint64_t max_size = kGroupSizeGuard);

// One representative per conjugacy class of U, the least u_index in each.
std::vector<std::uint64_t> class_representatives(const GroupCtx& G,
                                                 std::uint64_t max_size = kGroupSizeGuard);

}  // namespace sylow
