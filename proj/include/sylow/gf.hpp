#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sylow::gf {

// An element of F_q, stored as an index in [0, q).  The base-p digits of the
// index are the coefficients of the polynomial-basis representation (digit k
// is the coefficient of x^k).  Index order is the canonical enumeration
// order: it starts at 0 and is lexicographic on the coefficient vector read
// from the highest coefficient down.
using Elem = std::uint16_t;

// F_q = F_{p^e} for an odd prime p.  Arithmetic is table driven; contexts are
// immutable after construction, so elements move freely between threads.
class FieldCtx {
 public:
  // Builds F_{p^e}.  For e > 1 the modulus is the first irreducible monic
  // polynomial in increasing order of its non-leading coefficient vector
  // (read as a base-p number), so the construction is reproducible.
  static FieldCtx make(long p, long e);
  // Parses q = p^e from its value (e.g. 9 -> p=3, e=2).
  static FieldCtx from_q(long q);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem half() const { return half_; }  // 1/2; exists because p is odd

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * q_ + b]; }
  Elem inv(Elem a) const;  // throws std::domain_error on zero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long k) const;
  Elem from_int(long k) const;  // k mod p, embedded as a constant

  // Absolute trace Tr_{F_q/F_p}(a) = a + a^p + ... + a^{p^(e-1)}, in [0, p).
  int trace(Elem a) const { return trace_[a]; }

  // Monic modulus, coefficients c_0..c_e with c_e = 1 (for e = 1: x - 0... the
  // prime field keeps the trivial modulus {0, 1}, i.e. plain arithmetic mod p).
  const std::vector<int>& modulus() const { return modulus_; }
  std::vector<int> coeffs(Elem a) const;  // c_0..c_{e-1}
  std::string to_string(Elem a) const;    // comma-separated coefficients

 private:
  FieldCtx() = default;
  int p_ = 0, e_ = 0, q_ = 0;
  Elem half_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<int> trace_;
};

}  // namespace sylow::gf
