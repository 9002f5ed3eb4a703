#pragma once

#include <string>
#include <vector>

#include "cusp/rankin_selberg.hpp"
#include "cusp/residue.hpp"

namespace cusp {

using ResiduePoly = Poly<ResidueScalar>;
using ResidueEulerFactor = EulerFactor<ResidueScalar>;
using ResidueRationalFunction = RationalFunction<ResidueScalar>;

struct BanalityVerdict {
  long ell = 0;
  long q = 0;
  int n = 2;
  int e = 1;
  bool banal = false;
  /// (q-1)(q^{n/e}-1) mod ell
  long witness = 0;
};

/// Throws InvalidArgument unless ell is prime, EllEqualsP when ell = p.
BanalityVerdict banal_check(const TypeParams& type, long ell);

/// Coefficientwise reduction of the inverse polynomial. Throws NotIntegralAtEll.
ResidueEulerFactor reduce_euler_factor(const CycEulerFactor& L, const ResidueFieldPtr& field);
/// Residue field from the largest cyclotomic modulus among the coefficients.
ResidueEulerFactor reduce_euler_factor(const CycEulerFactor& L, long ell, int factor_index = 0);

ResiduePoly reduce_poly(const CycPoly& f, const ResidueFieldPtr& field);
ResidueRationalFunction reduce_rational_function(const CycRationalFunction& f, const ResidueFieldPtr& field);

struct CorollaryReport {
  long ell = 0;
  int factor_index = 0;
  BanalityVerdict banal1;
  BanalityVerdict banal2;
  ResidueFieldPtr residue;
  CycRationalFunction I;
  CycEulerFactor L;
  ResidueRationalFunction reduced_I;
  ResidueEulerFactor reduced_factor;
  ResidueEulerFactor reduced_L;
  ResidueScalar reduced_scalar;
  long terms_checked = 0;
  long cells_checked = 0;
  bool integral_ok = false;   // every cell value is ell-integral
  bool commutes_ok = false;   // cellwise and total reduction agree
  bool match = false;         // normalized reduced integral matches reduced L
  std::vector<std::string> notes;
  bool pass() const { return integral_ok && commutes_ok && match; }
};

/// Throws NonBanal when either type fails banal_check.
CorollaryReport verify_corollary(const TypeParams& t1, const TypeParams& t2, long ell, int factor_index = 0,
                                 const EngineOptions& opt = {});

std::string to_string(const ResiduePoly& f);
std::string to_string(const ResidueEulerFactor& L);
Json to_json(const BanalityVerdict& v);
/// {"ell", "banal", "reduced_factor", "match", ...}
Json to_json(const CorollaryReport& r);

}  // namespace cusp
