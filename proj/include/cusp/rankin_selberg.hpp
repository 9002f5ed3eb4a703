#pragma once

#include <map>
#include <string>
#include <vector>

#include "cusp/measure.hpp"
#include "cusp/polynomial.hpp"
#include "cusp/serialize.hpp"
#include "cusp/whittaker.hpp"

namespace cusp {

using CycPoly = Poly<CycNumber>;
using CycEulerFactor = EulerFactor<CycNumber>;

struct EngineOptions {
  /// Torus valuations kk range over [-e*window, e*window].
  int window = 2;
  /// Cell level; 0 picks the family level (1 depth zero, 2 ramified).
  int level = 0;
  int jobs = 1;
};

/// One term of the cell sum: weight * W1(g) * W2(g), g = diag(p^kk u, 1) k.
struct CellTerm {
  std::size_t cell = 0;
  int kk = 0;
  long u = 1;
  Rational weight;
  CycNumber w1;
  CycNumber w2;
};

/// A coset of (P cap K)\K at level m, keyed by its bottom row mod p^m.
struct KCell {
  std::vector<long> row;
  PadicMatrix k;
  Rational volume;
  /// kk -> integral over N\P^{(kk)} of W1 W2 (p k) dp
  std::map<int, CycNumber> slices;
};

struct SupportCheckCounts {
  long checked = 0;
  long slice_violations = 0;   // nonzero off the slices kk = i n/e
  long coset_violations = 0;   // bottom row outside the rows of k_i J
  long mirabolic_violations = 0;  // p outside N (P cap J)
  bool pass() const { return slice_violations == 0 && coset_violations == 0 && mirabolic_violations == 0; }
};

struct EngineRun {
  int level = 1;
  int kmin = 0;
  int kmax = 0;
  std::vector<KCell> cells;
  std::vector<CellTerm> terms;
  SupportCheckCounts support;
  /// Sum over cells of volume * sum_kk slices * q^kk X^kk.
  CycRationalFunction over_K;
};

/// Right and left translates by k_i: k_0 = 1, k_1 = [[0,1],[1,0]].
PadicMatrix k_rep(int i);
/// Bottom row of k mod p^m lies in the bottom rows of k_i J.
bool row_in_k_i_J(const SimpleType& T, int i, const std::vector<long>& row, int m);

class RankinSelbergEngine {
 public:
  /// Throws InvalidArgument unless W2 transforms under the inverse of W1's character.
  RankinSelbergEngine(WhittakerEvaluator W1, WhittakerEvaluator W2, EngineOptions opt = {});

  const WhittakerEvaluator& W1() const { return W1_; }
  const WhittakerEvaluator& W2() const { return W2_; }
  const EngineOptions& options() const { return opt_; }
  long q() const { return T().p(); }
  int n() const { return T().n(); }
  int e() const { return T().e(); }
  int level() const { return m_; }

  /// Integral of W1 W2 over N\P^{(k)}.
  CycNumber b_k(int k) const;
  /// sum_k b_k q^k X^k over the window.
  CycRationalFunction I0() const;
  /// Full cell run over (P cap K)\K with the support checks.
  EngineRun run() const;
  CycRationalFunction integrate_over_K() const { return run().over_K; }
  /// Z_factor(omega) * integrate_over_K with omega the product of the
  /// central characters.
  CycRationalFunction rankin_selberg_I() const;
  CycRationalFunction rankin_selberg_I(const EngineRun& r) const;
  /// omega_1 omega_2(varpi_F), or zero when omega_1 omega_2 is ramified.
  CycNumber central_product() const;

 private:
  const SimpleType& T() const { return W1_.type(); }
  void run_cell(KCell& cell, std::size_t index, std::vector<CellTerm>& terms, SupportCheckCounts& checks) const;

  WhittakerEvaluator W1_;
  WhittakerEvaluator W2_;
  EngineOptions opt_;
  int m_;
};

/// (q-1)/(1 - omega X^n); only the indicator of o^n is supported.
CycRationalFunction Z_factor(long q, int n, const CycNumber& omega = CycNumber(1), const std::string& phi = "1_o^n");

/// True when type 2 is an unramified twist of the contragredient of type 1.
bool is_dual_pair(const TypeParams& t1, const TypeParams& t2);
/// 1/(1 - A1 A2 X^{n/e}) for dual pairs, 1 otherwise. Throws FamilyMismatch.
CycEulerFactor l_factor(const TypeParams& t1, const TypeParams& t2);

struct VerificationReport {
  TypeParams type1;
  TypeParams type2;
  long q = 0;
  int n = 2;
  int e = 1;
  int level = 1;
  bool dual_pair = false;
  CycRationalFunction I;
  CycRationalFunction over_K;
  CycEulerFactor expected;
  Rational mu = 0;
  Rational u = 0;
  Rational lambda_vol = 0;
  /// (i, c_i, q^{in/e})
  std::vector<std::tuple<int, CycNumber, Rational>> c;
  SupportCheckCounts support;
  bool bessel_ok = false;    // J(1) = 1, duality, convolution
  bool support_ok = false;   // support propositions on every cell
  bool f_const_ok = false;   // F_i in {0, lambdaVol}
  bool c_shape_ok = false;   // c_i = mu q^{-in/e}
  bool volume_ok = false;    // coset volumes u (q^{n/e}-1) q^{-in/e}
  bool theorem_ok = false;   // I = mu (q-1)(q^{n/e}-1) L
  bool oracle_checked = false;
  bool oracle_ok = true;
  std::vector<std::string> notes;
  bool pass() const {
    return bessel_ok && support_ok && f_const_ok && c_shape_ok && volume_ok && theorem_ok && oracle_ok;
  }
};

struct VerifyOptions {
  EngineOptions engine;
  /// Compare coefficients 0..oracle_kmax with the brute-force oracle (-1: skip).
  int oracle_kmax = -1;
};

/// Builds W1 = W(T1) and W2 = W(T2) in a common field and runs every check.
VerificationReport verify_main_theorem(const TypeParams& t1, const TypeParams& t2, const VerifyOptions& opt = {});

Json to_json(const TypeParams& t);
Json to_json(const VerificationReport& r);
/// "i,c_i,q^{in/e}" lines with a header.
std::string c_table_csv(const VerificationReport& r);

}  // namespace cusp
