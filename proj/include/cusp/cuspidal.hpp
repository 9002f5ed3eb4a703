#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cusp/cyclotomic.hpp"
#include "cusp/finite_matrix.hpp"

namespace cusp {

/// Character of F_{q^n}^x sending the stored generator g to zeta_{q^n-1}^k.
class RegularCharacter {
 public:
  RegularCharacter(std::shared_ptr<const FiniteFieldTower> tower, int n, long k);

  int n() const { return n_; }
  long index() const { return k_; }
  long group_order() const { return m_; }
  /// Order of the character.
  long order() const;
  /// Theta^q != Theta (for n = 2; all Frobenius conjugates distinct in general).
  bool is_regular() const;
  /// e with Theta(x) = zeta_{q^n-1}^e.
  long exponent(FiniteField::Elem x) const;
  CycNumber eval(FiniteField::Elem x, const CycFieldPtr& K) const;

  RegularCharacter inverse() const { return RegularCharacter(tower_, n_, -k_); }
  RegularCharacter frobenius() const;
  /// True when other = this^{q^i} for some i.
  bool same_orbit(const RegularCharacter& other) const;
  const FiniteFieldTower& tower() const { return *tower_; }
  const std::shared_ptr<const FiniteFieldTower>& tower_ptr() const { return tower_; }

 private:
  std::shared_ptr<const FiniteFieldTower> tower_;
  int n_;
  long m_;
  long k_;
};

/// x -> zeta_p^{eps * Tr(x)} on F_q.
class FiniteAdditiveCharacter {
 public:
  FiniteAdditiveCharacter(std::shared_ptr<const FiniteFieldTower> tower, int sign = 1);
  int sign() const { return sign_; }
  long exponent(FiniteField::Elem x) const;
  CycNumber eval(FiniteField::Elem x, const CycFieldPtr& K) const;
  FiniteAdditiveCharacter inverse() const { return FiniteAdditiveCharacter(tower_, -sign_); }

 private:
  std::shared_ptr<const FiniteFieldTower> tower_;
  int sign_;
};

/// Trace character of the cuspidal representation of GL_2(F_q) attached to a
/// regular Theta, tabulated over all matrix codes.
class CuspidalCharacter {
 public:
  CuspidalCharacter(std::shared_ptr<const MatrixGroup> group, const RegularCharacter& theta, CycFieldPtr K);

  const MatrixGroup& group() const { return *G_; }
  const std::shared_ptr<const MatrixGroup>& group_ptr() const { return G_; }
  const RegularCharacter& theta() const { return theta_; }
  const CycFieldPtr& field() const { return K_; }
  const CycNumber& operator()(const FiniteMatrix& g) const;
  CycNumber value_on_label(const ConjClassLabel& label) const;

  /// <chi, chi> over the whole group.
  CycNumber inner_product(const CuspidalCharacter& other) const;
  /// sum over N_n(F_q) of chi(u)
  CycNumber unipotent_sum() const;
  CycNumber degree() const;

 private:
  std::shared_ptr<const MatrixGroup> G_;
  RegularCharacter theta_;
  CycFieldPtr K_;
  std::vector<CycNumber> table_;
};

/// g -> (1/|N|) sum_{u in N} psi(u)^{-1} chi(g u), with psi(u) the additive
/// character applied to the sum of superdiagonal entries.
class FiniteBessel {
 public:
  FiniteBessel(std::shared_ptr<const CuspidalCharacter> chi, const FiniteAdditiveCharacter& psi);

  const CycNumber& operator()(const FiniteMatrix& g) const;
  const MatrixGroup& group() const { return chi_->group(); }
  const CuspidalCharacter& character() const { return *chi_; }
  const FiniteAdditiveCharacter& psi() const { return psi_; }
  /// psi evaluated on an upper unitriangular matrix
  CycNumber psi_of(const FiniteMatrix& u) const;

  /// Bessel function of the contragredient with the inverse additive character.
  FiniteBessel dual() const;
  /// sum over N\P of J(g1 m^{-1}) J(m g2) == J(g1 g2)
  bool convolution_check(const FiniteMatrix& g1, const FiniteMatrix& g2) const;
  /// J(u g) = J(g u) = psi(u) J(g) for all u in N.
  bool transformation_check(const FiniteMatrix& g) const;

  /// CSV with the matrix entries then the value.
  std::string table_csv() const;

 private:
  std::shared_ptr<const CuspidalCharacter> chi_;
  FiniteAdditiveCharacter psi_;
  std::vector<FiniteMatrix> N_;
  std::vector<FiniteMatrix> NP_;
  std::vector<CycNumber> table_;
};

}  // namespace cusp
