#include "sylow/classfun.hpp"

#include <unordered_map>

namespace sylow {

ClassFunction trivial_character(const GroupCtx& G) {
  ClassFunction f;
  f.vals.assign(G.u_order(), cyclo::CycInt::from_int(G.field().p(), 1));
  return f;
}

ClassFunction regular_character(const GroupCtx& G) {
  std::uint64_t n = G.u_order();
  ClassFunction f;
  f.vals.assign(n, cyclo::CycInt(G.field().p()));
  f.vals[u_index(G, Mat::identity(G.N()))] = cyclo::CycInt::from_int(G.field().p(), cyclo::BigInt(n));
  return f;
}

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
  if (a.vals.size() != b.vals.size()) throw std::invalid_argument("cf_add: size mismatch");
  ClassFunction out = a;
  for (std::size_t k = 0; k < out.vals.size(); ++k) out.vals[k] += b.vals[k];
  return out;
}

ClassFunction cf_mul(const ClassFunction& a, const ClassFunction& b) {
  if (a.vals.size() != b.vals.size()) throw std::invalid_argument("cf_mul: size mismatch");
  ClassFunction out = a;
  for (std::size_t k = 0; k < out.vals.size(); ++k) out.vals[k] = out.vals[k] * b.vals[k];
  return out;
}

bool cf_equal(const ClassFunction& a, const ClassFunction& b) { return a.vals == b.vals; }

ClassFunction member_set_character(const GroupCtx& G, const std::vector<LinChar>& members) {
  const auto& F = G.field();
  std::uint64_t n = G.u_order();
  ClassFunction f;
  f.vals.assign(n, cyclo::CycInt(F.p()));
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    Mat u = u_element(G, idx);
    Mat uinv = inverse_unitriangular(G, u);
    Mat uinvt = transpose(uinv);
    cyclo::CycInt val(F.p());
    for (const LinChar& b : members) {
      LinChar moved = project_pup(G, multiply(G, char_to_matrix(G, b), uinvt));
      if (moved == b) val += cyclo::CycInt::zeta_pow(F.p(), F.trace(F.neg(kappa(G, b, uinv))));
    }
    f.vals[idx] = std::move(val);
  }
  return f;
}

ClassFunction orbit_character(const GroupCtx& G, const Orbit& o) {
  return member_set_character(G, o.members);
}

ClassFunction induce(const GroupCtx& G, const std::vector<Mat>& H,
                     const std::function<cyclo::CycInt(const Mat&)>& chi,
                     bool check_multiplicative) {
  const auto& F = G.field();
  if (H.empty()) throw std::invalid_argument("induce: empty subgroup");
  std::unordered_map<std::uint64_t, cyclo::CycInt> chi_by_idx;
  for (const Mat& h : H) chi_by_idx.emplace(u_index(G, h), chi(h));
  if (chi_by_idx.size() != H.size()) throw std::invalid_argument("induce: repeated subgroup element");

  if (check_multiplicative) {
    for (const Mat& h1 : H)
      for (const Mat& h2 : H) {
        Mat prod = multiply(G, h1, h2);
        auto it = chi_by_idx.find(u_index(G, prod));
        if (it == chi_by_idx.end()) throw std::invalid_argument("induce: subgroup not closed");
        if (!(it->second == chi(h1) * chi(h2)))
          throw std::invalid_argument("induce: chi is not multiplicative on H");
      }
  }

  std::uint64_t n = G.u_order();
  std::vector<Mat> elems = enumerate_u(G);
  ClassFunction f;
  f.vals.reserve(n);
  cyclo::BigInt hsize = H.size();
  for (std::uint64_t ui = 0; ui < n; ++ui) {
    cyclo::CycInt acc(F.p());
    for (std::uint64_t gi = 0; gi < n; ++gi) {
      Mat conj = multiply(G, multiply(G, elems[gi], elems[ui]),
                          inverse_unitriangular(G, elems[gi]));
      auto it = chi_by_idx.find(u_index(G, conj));
      if (it != chi_by_idx.end()) acc += it->second;
    }
    f.vals.push_back(acc.divide_exact(hsize));
  }
  return f;
}

cyclo::BigInt inner_product(const GroupCtx& G, const ClassFunction& a, const ClassFunction& b) {
  if (a.vals.size() != b.vals.size()) throw std::invalid_argument("inner_product: size mismatch");
  cyclo::CycInt acc(a.vals.empty() ? 3 : a.vals[0].p());
  for (std::size_t k = 0; k < a.vals.size(); ++k) acc += a.vals[k] * b.vals[k].conj();
  if (!acc.is_rational()) throw std::logic_error("inner_product: non-rational result");
  cyclo::BigInt num = acc.rational_part();
  cyclo::BigInt n = a.vals.size();
  if (num % n != 0) throw std::logic_error("inner_product: inexact division");
  return num / n;
}

std::vector<std::uint64_t> class_representatives(const GroupCtx& G, std::uint64_t max_size) {
  std::uint64_t n = G.u_order();
  if (n > max_size) throw BudgetError("class_representatives: group larger than the size cap");
  std::vector<Mat> elems = enumerate_u(G, max_size);
  std::vector<bool> seen(n, false);
  std::vector<std::uint64_t> reps;
  for (std::uint64_t ui = 0; ui < n; ++ui) {
    if (seen[ui]) continue;
    reps.push_back(ui);
    for (std::uint64_t gi = 0; gi < n; ++gi) {
      Mat conj = multiply(G, multiply(G, elems[gi], elems[ui]),
                          inverse_unitriangular(G, elems[gi]));
      seen[u_index(G, conj)] = true;
    }
  }
  return reps;
}

bool is_class_function(const GroupCtx& G, const ClassFunction& f, std::uint64_t max_size) {
  std::uint64_t n = G.u_order();
  if (n > max_size) throw BudgetError("is_class_function: group larger than the size cap");
  std::vector<Mat> elems = enumerate_u(G, max_size);
  for (std::uint64_t ui = 0; ui < n; ++ui)
    for (std::uint64_t gi = 0; gi < n; ++gi) {
      Mat conj = multiply(G, multiply(G, elems[gi], elems[ui]),
                          inverse_unitriangular(G, elems[gi]));
      if (!(f.vals[u_index(G, conj)] == f.vals[ui])) return false;
    }
  return true;
}

}  // namespace sylow
