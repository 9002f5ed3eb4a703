#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cusp/cyclotomic.hpp"

namespace cusp {

/// Polynomials over F_ell, coefficients low to high.
using FpPoly = std::vector<long>;

namespace fp {
FpPoly trim(FpPoly a);
FpPoly mul(const FpPoly& a, const FpPoly& b, long ell);
FpPoly mod(FpPoly a, const FpPoly& f, long ell);
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, long ell);
FpPoly powmod(FpPoly a, unsigned long long e, const FpPoly& f, long ell);
FpPoly gcd(FpPoly a, FpPoly b, long ell);
long inv(long a, long ell);
bool is_irreducible(const FpPoly& f, long ell);
/// Least monic irreducible polynomial of degree d, comparing coefficient
/// vectors (c_0, c_1, ..., c_{d-1}) lexicographically.
FpPoly least_irreducible(int d, long ell);
}  // namespace fp

/// Multiplicative order of a modulo m (gcd(a, m) = 1).
long multiplicative_order(long a, long m);

/// Irreducible factors of Phi_N modulo ell (without multiplicity), in the
/// deterministic order: lexicographic on (c_0, ..., c_{d-1}).
std::vector<FpPoly> cyclotomic_factors_mod(long N, long ell);

/// F_ell[x]/(f) for a chosen irreducible factor f of Phi_N mod ell; the class
/// of x is the image of zeta_N.
class ResidueField {
 public:
  static std::shared_ptr<const ResidueField> make(long N, long ell, int factor_index);

  long ell() const { return ell_; }
  long cyclotomic_modulus() const { return N_; }
  int factor_index() const { return index_; }
  int degree() const { return static_cast<int>(f_.size()) - 1; }
  const FpPoly& modulus_poly() const { return f_; }
  /// x^j mod f
  const FpPoly& power(long j) const;

 private:
  ResidueField(long N, long ell, int index, FpPoly f);
  long N_;
  long ell_;
  int index_;
  FpPoly f_;
  std::vector<FpPoly> powers_;
};

using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

/// Element of F_ell[x]/(f). Field-less values are integers awaiting a field.
class ResidueScalar {
 public:
  ResidueScalar() = default;
  ResidueScalar(long v) : int_(v) {}  // NOLINT(google-explicit-constructor)
  ResidueScalar(ResidueFieldPtr field, FpPoly coeffs);

  const ResidueFieldPtr& field() const { return field_; }
  /// Coefficients in the basis 1, x, ..., x^{d-1}; requires a field.
  const FpPoly& coeffs() const { return c_; }
  bool is_zero() const;

  ResidueScalar& operator+=(const ResidueScalar& o);
  ResidueScalar& operator-=(const ResidueScalar& o);
  ResidueScalar& operator*=(const ResidueScalar& o);
  ResidueScalar& operator/=(const ResidueScalar& o);
  ResidueScalar operator-() const;
  ResidueScalar inverse() const;

  friend ResidueScalar operator+(ResidueScalar a, const ResidueScalar& b) { return a += b; }
  friend ResidueScalar operator-(ResidueScalar a, const ResidueScalar& b) { return a -= b; }
  friend ResidueScalar operator*(ResidueScalar a, const ResidueScalar& b) { return a *= b; }
  friend ResidueScalar operator/(ResidueScalar a, const ResidueScalar& b) { return a /= b; }
  friend bool operator==(const ResidueScalar& a, const ResidueScalar& b);
  friend bool operator!=(const ResidueScalar& a, const ResidueScalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void adopt(const ResidueFieldPtr& f);
  ResidueFieldPtr field_;
  FpPoly c_;
  long int_ = 0;
};

inline bool is_zero(const ResidueScalar& x) { return x.is_zero(); }

/// Image of an ell-integral element of Q(zeta_N) in the residue field.
/// Throws NotIntegralAtEll when a coefficient denominator is divisible by ell.
ResidueScalar reduce_mod_ell(const CycNumber& x, const ResidueFieldPtr& field);
ResidueScalar reduce_mod_ell(const Rational& x, const ResidueFieldPtr& field);

}  // namespace cusp
