#include "sylow/gf.hpp"

#include <stdexcept>

namespace sylow::gf {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over Z_p, coefficient k at index k, no trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& g, int p) {
  trim(f);
  while (f.size() >= g.size()) {
    int lead = f.back();
    std::size_t shift = f.size() - g.size();
    for (std::size_t k = 0; k < g.size(); ++k) {
      int& c = f[shift + k];
      c = (c - lead * g[k]) % p;
      if (c < 0) c += p;
    }
    trim(f);
  }
  return f;
}

Poly poly_mul(const Poly& f, const Poly& g, int p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  trim(h);
  return h;
}

// Trial division by every monic polynomial of degree 1..deg(g)/2.
bool is_irreducible(const Poly& g, int p) {
  int deg = int(g.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      Poly h(d + 1, 0);
      long v = idx;
      for (int k = 0; k < d; ++k) {
        h[k] = int(v % p);
        v /= p;
      }
      h[d] = 1;
      if (poly_mod(g, h, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldCtx FieldCtx::make(long p, long e) {
  if (p == 2) throw std::invalid_argument("even characteristic unsupported");
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be an odd prime");
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  long q = 1;
  for (long k = 0; k < e; ++k) {
    q *= p;
    if (q > 1024) throw std::invalid_argument("field too large (q > 1024)");
  }

  FieldCtx F;
  F.p_ = int(p);
  F.e_ = int(e);
  F.q_ = int(q);

  if (e == 1) {
    F.modulus_ = {0, 1};
  } else {
    long count = q;  // p^e candidate coefficient vectors
    bool found = false;
    for (long idx = 0; idx < count && !found; ++idx) {
      Poly g(std::size_t(e) + 1, 0);
      long v = idx;
      for (long k = 0; k < e; ++k) {
        g[std::size_t(k)] = int(v % p);
        v /= p;
      }
      g[std::size_t(e)] = 1;
      if (is_irreducible(g, int(p))) {
        F.modulus_ = g;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");
  }

  auto to_poly = [&](Elem a) {
    Poly f(std::size_t(e), 0);
    long v = a;
    for (long k = 0; k < e; ++k) {
      f[std::size_t(k)] = int(v % p);
      v /= p;
    }
    trim(f);
    return f;
  };
  auto from_poly = [&](Poly f) {
    long v = 0;
    for (std::size_t k = f.size(); k-- > 0;) v = v * p + f[k];
    return Elem(v);
  };

  F.mul_.assign(std::size_t(q) * q, 0);
  for (long a = 0; a < q; ++a)
    for (long b = a; b < q; ++b) {
      Poly prod = poly_mul(to_poly(Elem(a)), to_poly(Elem(b)), int(p));
      if (e > 1) prod = poly_mod(prod, F.modulus_, int(p));
      Elem c = from_poly(prod);
      F.mul_[std::size_t(a) * q + b] = c;
      F.mul_[std::size_t(b) * q + a] = c;
    }

  F.inv_.assign(std::size_t(q), 0);
  for (long a = 1; a < q; ++a)
    for (long b = 1; b < q; ++b)
      if (F.mul(Elem(a), Elem(b)) == 1) {
        F.inv_[std::size_t(a)] = Elem(b);
        break;
      }

  F.trace_.assign(std::size_t(q), 0);
  for (long a = 0; a < q; ++a) {
    Elem acc = 0, frob = Elem(a);
    for (long k = 0; k < e; ++k) {
      acc = F.add(acc, frob);
      frob = F.pow(frob, p);
    }
    if (acc >= p) throw std::logic_error("trace left the prime field");
    F.trace_[std::size_t(a)] = acc;
  }

  F.half_ = F.inv(F.from_int(2));
  return F;
}

FieldCtx FieldCtx::from_q(long q) {
  if (q < 3) throw std::invalid_argument("q must be an odd prime power >= 3");
  long p = 0;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return make(q, 1);
  long e = 0, v = q;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1) throw std::invalid_argument("q is not a prime power");
  return make(p, e);
}

Elem FieldCtx::add(Elem a, Elem b) const {
  long r = 0, mul = 1;
  for (int k = 0; k < e_; ++k) {
    int da = (a / mul) % p_ + (b / mul) % p_;
    // digits combine without carry: coefficients are independent mod p
    r += long(da % p_) * mul;
    mul *= p_;
  }
  return Elem(r);
}

Elem FieldCtx::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldCtx::neg(Elem a) const {
  long r = 0, mul = 1;
  for (int k = 0; k < e_; ++k) {
    int d = (a / mul) % p_;
    r += long((p_ - d) % p_) * mul;
    mul *= p_;
  }
  return Elem(r);
}

Elem FieldCtx::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  return inv_[a];
}

Elem FieldCtx::pow(Elem a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = 1;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Elem FieldCtx::from_int(long k) const {
  long r = k % p_;
  if (r < 0) r += p_;
  return Elem(r);
}

std::vector<int> FieldCtx::coeffs(Elem a) const {
  std::vector<int> c(std::size_t(e_), 0);
  long v = a;
  for (int k = 0; k < e_; ++k) {
    c[std::size_t(k)] = int(v % p_);
    v /= p_;
  }
  return c;
}

std::string FieldCtx::to_string(Elem a) const {
  std::string s;
  auto c = coeffs(a);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(c[k]);
  }
  return s;
}

}  // namespace sylow::gf
