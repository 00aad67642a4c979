#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace sylow::cyclo {

using BigInt = boost::multiprecision::cpp_int;

// An element of Z[zeta_p] in the basis 1, zeta, ..., zeta^{p-2}; the relation
// 1 + zeta + ... + zeta^{p-1} = 0 eliminates zeta^{p-1}.  Coordinates are
// arbitrary-precision integers, equality is coordinate equality.
class CycInt {
 public:
  explicit CycInt(int p) : p_(check(p)), c_(std::size_t(p - 1)) {}
  static CycInt from_int(int p, BigInt v);
  static CycInt zeta_pow(int p, long t);  // zeta_p^t

  int p() const { return p_; }
  const std::vector<BigInt>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;             // coordinates of zeta..zeta^{p-2} all zero
  const BigInt& rational_part() const;  // requires is_rational()

  CycInt conj() const;  // zeta -> zeta^{-1}

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const BigInt& k, CycInt a);
  bool operator==(const CycInt&) const = default;

  // Coordinate-wise exact division; throws std::logic_error on a remainder.
  CycInt divide_exact(const BigInt& d) const;

  std::string to_string() const;

 private:
  static int check(int p);
  int p_;
  std::vector<BigInt> c_;
};

// Exact element of Q(zeta_p): num / den with den > 0, reduced by the gcd of
// den and all numerator coordinates.
class CycRat {
 public:
  explicit CycRat(CycInt num, BigInt den = 1);
  const CycInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }
  bool operator==(const CycRat&) const = default;
  std::string to_string() const;

 private:
  CycInt num_;
  BigInt den_;
};

}  // namespace sylow::cyclo
