#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cusp/rational.hpp"

namespace cusp {

/// Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
///
/// Holds the N-th cyclotomic polynomial and the reduction of every power
/// zeta^j (0 <= j < N) into the basis. Immutable once built.
class CycField {
 public:
  static std::shared_ptr<const CycField> make(long N);

  long modulus() const { return N_; }
  int degree() const { return phi_; }
  /// Integer coefficients of Phi_N, low to high, monic of degree phi(N).
  const std::vector<long>& cyclotomic_polynomial() const { return phi_poly_; }
  /// Sparse canonical form of zeta^j for j reduced modulo N.
  const std::vector<std::pair<int, long>>& power(long j) const;

 private:
  explicit CycField(long N);

  long N_;
  int phi_;
  std::vector<long> phi_poly_;
  std::vector<std::vector<std::pair<int, long>>> powers_;
};

using CycFieldPtr = std::shared_ptr<const CycField>;

long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
/// Integer coefficients of Phi_n, low to high.
std::vector<long> cyclotomic_poly(long n);

/// Element of Q(zeta_N), stored as its canonical coordinate vector.
///
/// A default-constructed or rational-constructed value has no field attached;
/// it behaves as a rational constant and adopts the field of the other
/// operand in mixed arithmetic.
class CycNumber {
 public:
  CycNumber() = default;
  CycNumber(long v) : CycNumber(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  CycNumber(const Rational& r);                  // NOLINT(google-explicit-constructor)
  CycNumber(CycFieldPtr field, std::vector<Rational> coeffs);

  static CycNumber zero(const CycFieldPtr& field);
  static CycNumber one(const CycFieldPtr& field);
  static CycNumber rational(const CycFieldPtr& field, const Rational& r);
  /// zeta_N^k in the field of modulus N.
  static CycNumber root(const CycFieldPtr& field, long k);

  const CycFieldPtr& field() const { return field_; }
  long modulus() const { return field_ ? field_->modulus() : 1; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;

  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o);
  /// this += factor * zeta^k, the hot path for character sums.
  void add_root(long k, const Rational& factor = Rational(1));

  CycNumber operator-() const;
  CycNumber inverse() const;
  CycNumber pow(long e) const;
  /// Galois automorphism zeta -> zeta^a, gcd(a, N) = 1.
  CycNumber galois(long a) const;
  CycNumber conj() const { return galois(-1); }
  /// Image under Q(zeta_N) -> Q(zeta_M), N | M.
  CycNumber embed(const CycFieldPtr& target) const;

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  /// Human-readable sum such as "1 + 2*z^3 - 1/2*z^5" (z = zeta_N).
  std::string to_string() const;

 private:
  void adopt(const CycFieldPtr& f);
  void check_compatible(const CycNumber& o) const;

  CycFieldPtr field_;
  std::vector<Rational> c_;  // empty when no field: then r_ is the value
  Rational r_ = 0;
};

inline bool is_zero(const CycNumber& x) { return x.is_zero(); }

}  // namespace cusp
