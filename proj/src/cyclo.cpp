#include "sylow/cyclo.hpp"

#include <stdexcept>

namespace sylow::cyclo {

int CycInt::check(int p) {
  if (p < 3) throw std::invalid_argument("CycInt needs an odd prime p >= 3");
  return p;
}

CycInt CycInt::from_int(int p, BigInt v) {
  CycInt x(p);
  x.c_[0] = std::move(v);
  return x;
}

CycInt CycInt::zeta_pow(int p, long t) {
  CycInt x(p);
  long r = t % p;
  if (r < 0) r += p;
  if (r == p - 1) {
    for (auto& c : x.c_) c = -1;  // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
  } else {
    x.c_[std::size_t(r)] = 1;
  }
  return x;
}

bool CycInt::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool CycInt::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

const BigInt& CycInt::rational_part() const {
  if (!is_rational()) throw std::logic_error("CycInt: value is not rational");
  return c_[0];
}

CycInt CycInt::conj() const {
  // zeta^k -> zeta^{p-k}; accumulate over exponents 0..p-1, then reduce.
  std::vector<BigInt> ext(std::size_t(p_), 0);
  ext[0] = c_[0];
  for (std::size_t k = 1; k < c_.size(); ++k) ext[std::size_t(p_) - k] = c_[k];
  CycInt out(p_);
  for (std::size_t k = 0; k + 1 < std::size_t(p_); ++k) out.c_[k] = ext[k] - ext[std::size_t(p_ - 1)];
  return out;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  if (p_ != o.p_) throw std::invalid_argument("CycInt: mixed p");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  if (p_ != o.p_) throw std::invalid_argument("CycInt: mixed p");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("CycInt: mixed p");
  const int p = a.p_;
  std::vector<BigInt> ext(std::size_t(p), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      ext[(i + j) % std::size_t(p)] += a.c_[i] * b.c_[j];
    }
  }
  CycInt out(p);
  for (std::size_t k = 0; k + 1 < std::size_t(p); ++k) out.c_[k] = ext[k] - ext[std::size_t(p - 1)];
  return out;
}

CycInt operator*(const BigInt& k, CycInt a) {
  for (auto& c : a.c_) c *= k;
  return a;
}

CycInt CycInt::divide_exact(const BigInt& d) const {
  if (d == 0) throw std::invalid_argument("CycInt: division by zero");
  CycInt out(p_);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] % d != 0) throw std::logic_error("CycInt: inexact division");
    out.c_[k] = c_[k] / d;
  }
  return out;
}

std::string CycInt::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) s += ',';
    s += c_[k].str();
  }
  return s + "]";
}

namespace {
BigInt gcd_big(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

CycRat::CycRat(CycInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("CycRat: zero denominator");
  if (den_ < 0) throw std::invalid_argument("CycRat: denominator must be positive");
  BigInt g = den_;
  for (const auto& c : num_.coords()) {
    g = gcd_big(g, c);
    if (g == 1) break;
  }
  if (g > 1) {
    num_ = num_.divide_exact(g);
    den_ /= g;
  }
}

std::string CycRat::to_string() const {
  std::string s = num_.to_string();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

}  // namespace sylow::cyclo
