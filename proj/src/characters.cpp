#include "sylow/characters.hpp"

namespace sylow {

LinChar zero_char(const GroupCtx& G) {
  LinChar a;
  a.v.assign(G.pup().size(), 0);
  return a;
}

LinChar unit_char(const GroupCtx& G, Pos p, gf::Elem value) {
  int k = G.pup_index(p.i, p.j);
  if (k < 0) throw std::invalid_argument("unit_char: position not in pUP");
  LinChar a = zero_char(G);
  a.v[std::size_t(k)] = value;
  return a;
}

gf::Elem char_entry(const GroupCtx& G, const LinChar& a, int i, int j) {
  int k = G.pup_index(i, j);
  return k < 0 ? gf::Elem(0) : a.v[std::size_t(k)];
}

Mat char_to_matrix(const GroupCtx& G, const LinChar& a) {
  Mat m(G.N());
  for (std::size_t k = 0; k < a.v.size(); ++k) m.at(G.pup()[k].i, G.pup()[k].j) = a.v[k];
  return m;
}

LinChar project_pup(const GroupCtx& G, const Mat& m) {
  LinChar a = zero_char(G);
  for (std::size_t k = 0; k < a.v.size(); ++k) a.v[k] = m.at(G.pup()[k].i, G.pup()[k].j);
  return a;
}

gf::Elem kappa(const GroupCtx& G, const Mat& a, const Mat& b) {
  if (a.N != b.N) throw std::invalid_argument("kappa: dimension mismatch");
  const auto& F = G.field();
  gf::Elem s = 0;
  for (std::size_t k = 0; k < a.a.size(); ++k)
    if (a.a[k] != 0 && b.a[k] != 0) s = F.add(s, F.mul(a.a[k], b.a[k]));
  return s;
}

gf::Elem kappa(const GroupCtx& G, const LinChar& a, const Mat& b) {
  const auto& F = G.field();
  gf::Elem s = 0;
  for (std::size_t k = 0; k < a.v.size(); ++k)
    if (a.v[k] != 0) s = F.add(s, F.mul(a.v[k], b.at(G.pup()[k].i, G.pup()[k].j)));
  return s;
}

gf::Elem kappa(const GroupCtx& G, const LinChar& a, const LinChar& b) {
  const auto& F = G.field();
  gf::Elem s = 0;
  for (std::size_t k = 0; k < a.v.size(); ++k)
    if (a.v[k] != 0 && b.v[k] != 0) s = F.add(s, F.mul(a.v[k], b.v[k]));
  return s;
}

LinChar cocycle_f(const GroupCtx& G, const Mat& u) { return project_pup(G, u); }

LinChar v_dot(const GroupCtx& G, const LinChar& a, const Mat& u) {
  return project_pup(G, multiply(G, char_to_matrix(G, a), u));
}

LinChar dot_right(const GroupCtx& G, const LinChar& a, const Mat& u) {
  Mat uinvt = transpose(inverse_unitriangular(G, u));
  return project_pup(G, multiply(G, char_to_matrix(G, a), uinvt));
}

LinChar dot_right_tilde(const GroupCtx& G, const LinChar& a, int i, int j, gf::Elem alpha) {
  if (i >= j) throw std::invalid_argument("dot_right_tilde: need i < j");
  const auto& F = G.field();
  LinChar out = a;
  if (alpha == 0) return out;
  for (int r = 1; r <= G.N(); ++r) {
    gf::Elem src = char_entry(G, a, r, j);
    if (src == 0) continue;
    int k = G.pup_index(r, i);
    if (k >= 0) out.v[std::size_t(k)] = F.sub(out.v[std::size_t(k)], F.mul(alpha, src));
  }
  return out;
}

LinChar dot_right_root(const GroupCtx& G, const LinChar& a, Pos p, gf::Elem alpha) {
  if (!G.in_pup(p.i, p.j)) throw std::invalid_argument("dot_right_root: position not in pUP");
  const auto& F = G.field();
  const int i = p.i, j = p.j, ib = G.mir(p.i), jb = G.mir(p.j);
  switch (G.type().family) {
    case Family::B:
      if (j == G.type().ntilde) {
        LinChar t = dot_right_tilde(G, a, i, j, alpha);
        t = dot_right_tilde(G, t, j, ib, F.neg(alpha));
        return dot_right_tilde(G, t, i, ib, F.mul(F.half(), F.mul(alpha, alpha)));
      }
      return dot_right_tilde(G, dot_right_tilde(G, a, i, j, alpha), jb, ib, F.neg(alpha));
    case Family::C:
      if (j == ib) return dot_right_tilde(G, a, i, j, alpha);
      if (j <= G.type().n)
        return dot_right_tilde(G, dot_right_tilde(G, a, i, j, alpha), jb, ib, F.neg(alpha));
      return dot_right_tilde(G, dot_right_tilde(G, a, i, j, alpha), jb, ib, alpha);
    case Family::D:
      return dot_right_tilde(G, dot_right_tilde(G, a, i, j, alpha), jb, ib, F.neg(alpha));
    case Family::A:
      break;
  }
  throw std::logic_error("unreachable");
}

MonomialTerm monomial_right(const GroupCtx& G, const LinChar& a, const Mat& u) {
  const auto& F = G.field();
  Mat uinv = inverse_unitriangular(G, u);
  // t = Tr(kappa(-A, f(u^{-1})))
  gf::Elem k = kappa(G, a, uinv);  // entries of u^{-1} on pUP = f(u^{-1})
  MonomialTerm out;
  out.exponent = F.trace(F.neg(k));
  out.chr = project_pup(G, multiply(G, char_to_matrix(G, a), transpose(uinv)));
  return out;
}

LinChar dot_left(const GroupCtx& G, const Mat& u, const LinChar& a) {
  Mat uinvt = transpose(inverse_unitriangular(G, u));
  return project_pup(G, multiply(G, uinvt, char_to_matrix(G, a)));
}

LinChar dot_left_tilde(const GroupCtx& G, int i, int j, gf::Elem alpha, const LinChar& a) {
  if (i >= j) throw std::invalid_argument("dot_left_tilde: need i < j");
  const auto& F = G.field();
  LinChar out = a;
  if (alpha == 0) return out;
  for (int c = 1; c <= G.N(); ++c) {
    gf::Elem src = char_entry(G, a, i, c);
    if (src == 0) continue;
    int k = G.pup_index(j, c);
    if (k >= 0) out.v[std::size_t(k)] = F.sub(out.v[std::size_t(k)], F.mul(alpha, src));
  }
  return out;
}

CharCombination lambda_left_general(const GroupCtx& G, const Mat& x, const LinChar& a,
                                    std::uint64_t max_size) {
  const auto& F = G.field();
  const int p = F.p();
  std::uint64_t order = G.u_order();
  if (order > max_size) throw BudgetError("lambda_left_general: group larger than the size cap");

  // T = x^{-t} A; the group-algebra vector has coefficient
  // theta(kappa(-T, u)) at the basis element f(u), u in U.
  Mat T = multiply(G, transpose(inverse_unitriangular(G, x)), char_to_matrix(G, a));
  std::vector<int> expo(order);
  std::vector<LinChar> fu(order);
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    Mat u = u_element(G, idx);
    gf::Elem k = kappa(G, T, u);
    expo[idx] = F.trace(F.neg(k));
    fu[idx] = project_pup(G, u);
  }

  // Coefficient of [B]: (1/|V|) sum_u theta(kappa(-T,u)) * theta(kappa(B, f(u))).
  CharCombination out;
  cyclo::BigInt vol = order;  // |V| = |U|
  LinChar b = zero_char(G);
  std::uint64_t count = order;  // |V|
  for (std::uint64_t bi = 0; bi < count; ++bi) {
    std::uint64_t v = bi;
    for (std::size_t k = b.v.size(); k-- > 0;) {
      b.v[k] = gf::Elem(v % std::uint64_t(G.q()));
      v /= std::uint64_t(G.q());
    }
    cyclo::CycInt num(p);
    for (std::uint64_t idx = 0; idx < order; ++idx) {
      int t = (expo[idx] + F.trace(kappa(G, b, fu[idx]))) % p;
      num += cyclo::CycInt::zeta_pow(p, t);
    }
    if (!num.is_zero()) out.terms.emplace(b, cyclo::CycRat(std::move(num), vol));
  }
  return out;
}

MonomialTerm lambda_left_fast(const GroupCtx& G, const Mat& x, const LinChar& a) {
  const auto& F = G.field();
  Mat xinv = inverse_unitriangular(G, x);
  Mat T = multiply(G, transpose(xinv), char_to_matrix(G, a));
  for (int i = 1; i <= G.N(); ++i)
    for (int j = 1; j <= G.N(); ++j)
      if (T.at(i, j) != 0 && !in_region(G.type(), Region::PKL, i, j))
        throw std::domain_error("support leaves pKL");
  MonomialTerm out;
  out.exponent = F.trace(F.neg(kappa(G, a, xinv)));  // Tr(kappa(-B, x^{-1}))
  out.chr = project_pup(G, T);
  return out;
}

std::vector<cyclo::CycInt> f_star(const GroupCtx& G, const LinChar& a, std::uint64_t max_size) {
  const auto& F = G.field();
  std::uint64_t order = G.u_order();
  if (order > max_size) throw BudgetError("f_star: group larger than the size cap");
  std::vector<cyclo::CycInt> out;
  out.reserve(order);
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    Mat u = u_element(G, idx);
    out.push_back(cyclo::CycInt::zeta_pow(F.p(), F.trace(F.neg(kappa(G, a, u)))));
  }
  return out;
}

}  // namespace sylow
