#include "sylow/group.hpp"

#include <algorithm>

namespace sylow {

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

GroupCtx::GroupCtx(LieType t, gf::FieldCtx F) : type_(t), F_(std::move(F)) {
  if (t.family == Family::A) throw std::invalid_argument("GroupCtx requires type B, C or D");
  pup_ = region_members(type_, Region::PUP);
  pup_idx_.assign(std::size_t(type_.N) * type_.N, -1);
  for (std::size_t k = 0; k < pup_.size(); ++k)
    pup_idx_[std::size_t(pup_[k].i - 1) * type_.N + (pup_[k].j - 1)] = int(k);
  Region comp = type_.family == Family::C ? Region::RP : Region::RPC;
  comp_ = region_members(type_, comp);
}

std::uint64_t GroupCtx::u_order() const {
  std::uint64_t n = 1;
  for (std::size_t k = 0; k < pup_.size(); ++k) {
    if (n > kGroupSizeGuard) throw BudgetError("group order exceeds the size guard");
    n *= std::uint64_t(F_.q());
  }
  return n;
}

Mat multiply(const GroupCtx& G, const Mat& a, const Mat& b) {
  if (a.N != b.N) throw std::invalid_argument("multiply: dimension mismatch");
  const auto& F = G.field();
  const int N = a.N;
  Mat c(N);
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k) {
      gf::Elem v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 1; j <= N; ++j) {
        gf::Elem w = b.at(k, j);
        if (w == 0) continue;
        c.at(i, j) = F.add(c.at(i, j), F.mul(v, w));
      }
    }
  return c;
}

Mat transpose(const Mat& a) {
  Mat t(a.N);
  for (int i = 1; i <= a.N; ++i)
    for (int j = 1; j <= a.N; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

bool is_unitriangular(const Mat& a) {
  for (int i = 1; i <= a.N; ++i) {
    if (a.at(i, i) != 1) return false;
    for (int j = 1; j < i; ++j)
      if (a.at(i, j) != 0) return false;
  }
  return true;
}

Mat inverse_unitriangular(const GroupCtx& G, const Mat& u) {
  if (!is_unitriangular(u)) throw std::invalid_argument("inverse: not unitriangular");
  const auto& F = G.field();
  const int N = u.N;
  Mat x = Mat::identity(N);
  // back substitution: x_{ij} = -u_{ij} - sum_{i<k<j} u_{ik} x_{kj}
  for (int j = 1; j <= N; ++j)
    for (int i = j - 1; i >= 1; --i) {
      gf::Elem s = u.at(i, j);
      for (int k = i + 1; k < j; ++k) s = F.add(s, F.mul(u.at(i, k), x.at(k, j)));
      x.at(i, j) = F.neg(s);
    }
  return x;
}

Mat r_dual(const GroupCtx& G, const Mat& a) {
  const auto& F = G.field();
  const int N = a.N;
  Mat r(N);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      gf::Elem v = a.at(G.mir(j), G.mir(i));
      r.at(i, j) = epsilon(G.type(), i, j) == 1 ? v : F.neg(v);
    }
  return r;
}

Mat gram_matrix(const GroupCtx& G) {
  const auto& F = G.field();
  Mat s(G.N());
  for (int i = 1; i <= G.N(); ++i)
    for (int j = 1; j <= G.N(); ++j) s.at(i, j) = F.from_int(gram_sign(G.type(), i, j));
  return s;
}

bool is_member(const GroupCtx& G, const Mat& u) {
  if (u.N != G.N() || !is_unitriangular(u)) return false;
  Mat prod = multiply(G, u, r_dual(G, u));
  for (const Pos& p : region_members(G.type(), Region::RPC))
    if (prod.at(p.i, p.j) != 0) return false;
  return true;
}

Mat complete(const GroupCtx& G, const Coords& lambda) {
  if (lambda.size() != G.pup().size()) throw std::invalid_argument("complete: wrong arity");
  const auto& F = G.field();
  const int N = G.N();
  Mat u = Mat::identity(N);
  for (std::size_t k = 0; k < lambda.size(); ++k) u.at(G.pup()[k].i, G.pup()[k].j) = lambda[k];
  for (const Pos& p : G.completion_positions()) {
    const int r = p.i, s = p.j;
    if (in_region(G.type(), Region::CC, r, s)) {
      // u_{r,rbar} = -(1/2) sum_{r<l<rbar} u_{rl} u_{r,lbar}   (types B, D)
      gf::Elem sum = 0;
      for (int l = r + 1; l < s; ++l) sum = F.add(sum, F.mul(u.at(r, l), u.at(r, G.mir(l))));
      u.at(r, s) = F.neg(F.mul(F.half(), sum));
    } else {
      // u_{rs} = -eps_{rs} u_{sbar,rbar} - sum_{r<l<s} eps_{ls} u_{rl} u_{sbar,lbar}
      gf::Elem acc = u.at(G.mir(s), G.mir(r));
      if (epsilon(G.type(), r, s) == -1) acc = F.neg(acc);
      for (int l = r + 1; l < s; ++l) {
        gf::Elem term = F.mul(u.at(r, l), u.at(G.mir(s), G.mir(l)));
        if (epsilon(G.type(), l, s) == -1) term = F.neg(term);
        acc = F.add(acc, term);
      }
      u.at(r, s) = F.neg(acc);
    }
  }
  return u;
}

Coords extract_coords(const GroupCtx& G, const Mat& u) {
  Coords c(G.pup().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = u.at(G.pup()[k].i, G.pup()[k].j);
  return c;
}

Mat root_element(const GroupCtx& G, Pos p, gf::Elem alpha) {
  if (!G.in_pup(p.i, p.j)) throw std::invalid_argument("root_element: position not in pUP");
  const auto& F = G.field();
  const int i = p.i, j = p.j, ib = G.mir(p.i), jb = G.mir(p.j);
  Mat x = Mat::identity(G.N());
  switch (G.type().family) {
    case Family::B:
      x.at(i, j) = alpha;
      if (j == G.type().ntilde) {
        x.at(j, ib) = F.neg(alpha);
        x.at(i, ib) = F.neg(F.mul(F.half(), F.mul(alpha, alpha)));
      } else {
        x.at(jb, ib) = F.neg(alpha);
      }
      break;
    case Family::C:
      x.at(i, j) = alpha;
      if (j == ib) break;                       // antidiagonal: single matrix unit
      x.at(jb, ib) = j <= G.type().n ? F.neg(alpha) : alpha;
      break;
    case Family::D:
      x.at(i, j) = alpha;
      x.at(jb, ib) = F.neg(alpha);
      break;
    case Family::A:
      throw std::logic_error("unreachable");
  }
  return x;
}

Mat tilde_root(const GroupCtx& G, int i, int j, gf::Elem alpha) {
  if (i >= j || i < 1 || j > G.N()) throw std::invalid_argument("tilde_root: need 1 <= i < j <= N");
  Mat x = Mat::identity(G.N());
  x.at(i, j) = alpha;
  return x;
}

namespace {

// Positions sorted by height j - i (products of root elements only reach a
// matrix entry from strictly smaller heights, so entries at height h are
// affine in the height-h coefficient).
std::vector<std::size_t> height_order(const std::vector<Pos>& ps) {
  std::vector<std::size_t> idx(ps.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return ps[a].j - ps[a].i < ps[b].j - ps[b].i; });
  return idx;
}

Mat product_over(const GroupCtx& G, const std::vector<Pos>& order,
                 const std::vector<gf::Elem>& alpha) {
  Mat prod = Mat::identity(G.N());
  for (std::size_t k = 0; k < order.size(); ++k)
    if (alpha[k] != 0) prod = multiply(G, prod, root_element(G, order[k], alpha[k]));
  return prod;
}

}  // namespace

std::vector<std::pair<Pos, gf::Elem>> factorize(const GroupCtx& G, const Mat& u,
                                                const std::vector<Pos>& order) {
  const auto& F = G.field();
  std::vector<gf::Elem> alpha(order.size(), 0);
  for (std::size_t k : height_order(order)) {
    const Pos p = order[k];
    Mat at0 = product_over(G, order, alpha);
    alpha[k] = 1;
    Mat at1 = product_over(G, order, alpha);
    gf::Elem c = F.sub(at1.at(p.i, p.j), at0.at(p.i, p.j));
    if (c == 0) throw std::logic_error("factorize: degenerate coefficient");
    alpha[k] = F.div(F.sub(u.at(p.i, p.j), at0.at(p.i, p.j)), c);
  }
  if (product_over(G, order, alpha) != u)
    throw std::invalid_argument("factorize: input is not a product over the given positions");
  std::vector<std::pair<Pos, gf::Elem>> out;
  out.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) out.emplace_back(order[k], alpha[k]);
  return out;
}

std::pair<Mat, Mat> factor_tilde(const GroupCtx& G, const Mat& x) {
  if (!is_unitriangular(x)) throw std::invalid_argument("factor_tilde: not unitriangular");
  const auto& F = G.field();
  // xt = 1 + B with supp(B) in pUP; fix B height by height so that
  // inv(xt) * x has zero entries on all of pUP.
  Mat xt = Mat::identity(G.N());
  std::vector<std::size_t> byh = height_order(G.pup());
  int done_h = 0;
  Mat z = x;
  for (std::size_t k : byh) {
    const Pos p = G.pup()[k];
    if (p.j - p.i > done_h) {
      z = multiply(G, inverse_unitriangular(G, xt), x);
      done_h = p.j - p.i;
    }
    xt.at(p.i, p.j) = F.add(xt.at(p.i, p.j), z.at(p.i, p.j));
  }
  z = multiply(G, inverse_unitriangular(G, xt), x);
  for (const Pos& p : G.pup())
    if (z.at(p.i, p.j) != 0) throw std::logic_error("factor_tilde: projection not annihilated");
  return {xt, z};
}

std::uint64_t u_index(const GroupCtx& G, const Mat& u) {
  Coords c = extract_coords(G, u);
  std::uint64_t idx = 0;
  for (gf::Elem d : c) idx = idx * std::uint64_t(G.q()) + d;
  return idx;
}

Mat u_element(const GroupCtx& G, std::uint64_t idx) {
  Coords c(G.pup().size(), 0);
  for (std::size_t k = c.size(); k-- > 0;) {
    c[k] = gf::Elem(idx % std::uint64_t(G.q()));
    idx /= std::uint64_t(G.q());
  }
  return complete(G, c);
}

std::vector<Mat> enumerate_u(const GroupCtx& G, std::uint64_t max_size) {
  std::uint64_t n = G.u_order();
  if (n > max_size) throw BudgetError("enumerate_u: group larger than the size cap");
  std::vector<Mat> out;
  out.reserve(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) out.push_back(u_element(G, idx));
  return out;
}

namespace {

std::uint64_t power_checked(std::uint64_t q, std::size_t m, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (n > cap) throw BudgetError("pattern subgroup larger than the size cap");
    n *= q;
  }
  if (n > cap) throw BudgetError("pattern subgroup larger than the size cap");
  return n;
}

template <typename RootFn>
std::vector<Mat> odometer_products(const GroupCtx& G, const std::vector<Pos>& J,
                                   std::uint64_t max_size, RootFn root) {
  std::uint64_t n = power_checked(std::uint64_t(G.q()), J.size(), max_size);
  std::vector<Mat> out;
  out.reserve(n);
  std::vector<gf::Elem> lam(J.size(), 0);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t k = lam.size(); k-- > 0;) {
      lam[k] = gf::Elem(v % std::uint64_t(G.q()));
      v /= std::uint64_t(G.q());
    }
    Mat prod = Mat::identity(G.N());
    for (std::size_t k = 0; k < J.size(); ++k)
      if (lam[k] != 0) prod = multiply(G, prod, root(J[k], lam[k]));
    out.push_back(prod);
  }
  return out;
}

}  // namespace

std::vector<Mat> pattern_subgroup(const GroupCtx& G, const std::vector<Pos>& J,
                                  std::uint64_t max_size) {
  if (!is_closed(G.type(), J)) throw std::invalid_argument("pattern_subgroup: J is not closed");
  return odometer_products(G, J, max_size,
                           [&](Pos p, gf::Elem a) { return root_element(G, p, a); });
}

bool pattern_member(const GroupCtx& G, const std::vector<Pos>& J, const Mat& u) {
  if (!is_member(G, u)) return false;
  Coords c = extract_coords(G, u);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (std::find(J.begin(), J.end(), G.pup()[k]) == J.end()) return false;
  }
  return true;
}

std::vector<Mat> tilde_pattern_subgroup(const GroupCtx& G, const std::vector<Pos>& J,
                                        std::uint64_t max_size) {
  LieType ta = lie_type_a(G.N());
  if (!is_closed(ta, J)) throw std::invalid_argument("tilde_pattern_subgroup: J is not closed");
  return odometer_products(G, J, max_size,
                           [&](Pos p, gf::Elem a) { return tilde_root(G, p.i, p.j, a); });
}

}  // namespace sylow
