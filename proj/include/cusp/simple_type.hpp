#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cusp/cuspidal.hpp"
#include "cusp/cyclotomic.hpp"
#include "cusp/padic.hpp"

namespace cusp {

enum class Family { DepthZero, Ramified };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

/// Parameters of an extended maximal simple type of GL_2(Q_p).
///
/// DepthZero: Lambda inflates the cuspidal character of GL_2(F_p) attached
/// to the regular character Theta = theta_index on F_{p^2}^x.
/// Ramified: J = o_E^x (1 + P) for E = Q_p(varpi_E), varpi_E = [[0,p],[1,0]],
/// Lambda = sigma on the Teichmuller part times theta_beta, beta = eps varpi_E^{-1}.
/// In both cases A = Lambda(varpi_E) and eps is the sign of psi_t.
struct TypeParams {
  Family family = Family::DepthZero;
  long p = 2;
  int n = 2;
  long theta_index = 1;
  long sigma = 0;
  CycNumber A = CycNumber(1);
  int psi_sign = 1;

  /// (Theta^{-1} or sigma^{-1}, A^{-1}, -eps)
  TypeParams dual() const;
  /// Unramified twist chi(varpi_F) = c: A -> c^{n/e} A.
  TypeParams twisted(const CycNumber& c) const;
  int e() const { return family == Family::DepthZero ? 1 : 2; }
};

/// Smallest N with every root of unity needed by the given types in Q(zeta_N):
/// p^{1+extra_depth} (depth zero) or p^{2+extra_depth} and p-1 (ramified),
/// q^2-1 for Theta, and the field moduli of A and the extra scalars.
long session_modulus(const std::vector<TypeParams>& types, const std::vector<CycNumber>& scalars = {},
                     int extra_depth = 0);

/// psi_t(u) = theta(eps sum t_i u_{i,i+1})
class PsiT {
 public:
  PsiT(long p, std::vector<PadicScalar> t, int sign, int cap, CycFieldPtr K);
  const std::vector<PadicScalar>& t() const { return t_; }
  int sign() const { return sign_; }
  CycNumber operator()(const PadicMatrix& u) const;
  /// psi_t on [[1,x],[0,1]]
  CycNumber of_entry(const PadicScalar& x) const;
  PsiT inverse() const { return PsiT(p_, t_, -sign_, cap_, K_); }

 private:
  long p_;
  std::vector<PadicScalar> t_;
  int sign_;
  int cap_;
  CycFieldPtr K_;
};

class SimpleType {
 public:
  /// Validates the parameters and checks that Lambda restricted to N cap J
  /// is psi_t at level p^2. Throws NotRegular, EvenResidualCharacteristic,
  /// NondegeneracyFailure, InvalidArgument.
  static std::shared_ptr<const SimpleType> make(const TypeParams& params, CycFieldPtr K);

  const TypeParams& params() const { return P_; }
  Family family() const { return P_.family; }
  long p() const { return P_.p; }
  int n() const { return P_.n; }
  int e() const { return P_.e(); }
  const CycFieldPtr& field() const { return K_; }
  /// Depth cap of theta in this field.
  int cap() const { return cap_; }
  const LatticeChain& chain() const { return chain_; }
  const PsiT& psi() const { return psi_; }
  const CycNumber& A() const { return A_; }
  /// varpi_E: varpi_F Id (depth zero) or [[0,p],[1,0]].
  const PadicMatrix& uniformizer() const { return chain_.uniformizer(); }
  PadicMatrix uniformizer_power(int a) const;
  /// Level of the finite quotient through which Lambda factors.
  int level() const { return P_.family == Family::DepthZero ? 1 : 2; }

  bool in_J(const PadicMatrix& j0) const;
  /// varpi_E^a j0 presentation of j in bold J, or none.
  std::optional<std::pair<int, PadicMatrix>> decompose_bold_J(const PadicMatrix& j) const;

  /// Character of psi_t extended to U = (N cap J) H^1, on the presentation u = n h.
  CycNumber extended_psi(const PadicMatrix& n, const PadicMatrix& h) const;
  /// Same, with u decomposed internally.
  CycNumber extended_psi(const PadicMatrix& u) const;

  /// Bessel function on varpi_E^a j0.
  CycNumber bessel(int a, const PadicMatrix& j0) const;
  CycNumber bessel(const PadicMatrix& j) const;

  /// Ramified only: theta_beta(h) for h in 1 + P, and the tame part.
  CycNumber theta_beta(const PadicMatrix& h) const;
  CycNumber sigma_bar(long x) const;
  /// Depth zero only.
  const FiniteBessel& finite_bessel() const { return *fin_; }
  FiniteMatrix reduce_K(const PadicMatrix& k) const;

  /// Central character at varpi_F and on a unit scalar.
  CycNumber central_at_uniformizer() const;
  CycNumber central_on_unit(long u) const;

  /// Elements of J modulo the level subgroup, as integer matrices.
  std::vector<PadicMatrix> finite_quotient() const;

 private:
  SimpleType(const TypeParams& params, CycFieldPtr K);
  void check_nondegenerate() const;

  TypeParams P_;
  CycFieldPtr K_;
  int cap_;
  LatticeChain chain_;
  PsiT psi_;
  CycNumber A_;
  std::shared_ptr<const FiniteBessel> fin_;
  long primitive_root_ = 1;
};

using SimpleTypePtr = std::shared_ptr<const SimpleType>;

}  // namespace cusp
