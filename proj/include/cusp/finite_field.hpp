#pragma once

#include <map>
#include <memory>
#include <vector>

namespace cusp {

/// GF(p^d) = F_p[x]/(f), f the lexicographically least monic irreducible of
/// degree d. Elements are coded as integers sum c_i p^i in [0, p^d).
class FiniteField {
 public:
  using Elem = int;

  static std::shared_ptr<const FiniteField> make(long p, int d);

  long characteristic() const { return p_; }
  int degree() const { return d_; }
  int size() const { return size_; }
  const std::vector<long>& modulus_poly() const { return f_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long e) const;
  /// a^p
  Elem frobenius(Elem a) const { return pow(a, p_); }

  /// Least element (by code) of multiplicative order size-1.
  Elem generator() const { return gen_; }
  /// g^k
  Elem exp(long long k) const;
  /// k in [0, size-1) with g^k = a; a != 0.
  long log(Elem a) const;
  /// Multiplicative order of a != 0.
  long order(Elem a) const;

  /// Tr_{GF(p^d)/F_p}(a) as an integer in [0, p).
  long trace_to_prime(Elem a) const;
  /// Image of the integer k mod p.
  Elem from_int(long k) const;

 private:
  FiniteField(long p, int d);
  Elem mul_poly(Elem a, Elem b) const;

  long p_;
  int d_;
  int size_;
  std::vector<long> f_;
  Elem gen_ = 1;
  std::vector<Elem> exp_;
  std::vector<int> log_;
};

using FiniteFieldPtr = std::shared_ptr<const FiniteField>;

/// F_q = GF(p^f) together with its extensions F_{q^n}, each built over F_p,
/// and the embedding F_q -> F_{q^n} sending the base variable to the least
/// root (by code) of the base defining polynomial.
class FiniteFieldTower {
 public:
  FiniteFieldTower(long p, int f, const std::vector<int>& extension_degrees);

  long p() const { return p_; }
  int f() const { return f_; }
  long q() const { return base_->size(); }
  const FiniteFieldPtr& base() const { return base_; }
  const FiniteFieldPtr& ext(int n) const;
  FiniteField::Elem embed(int n, FiniteField::Elem a) const;
  /// Inverse of embed on the image; throws when x is not in F_q.
  FiniteField::Elem restrict(int n, FiniteField::Elem x) const;
  bool in_base(int n, FiniteField::Elem x) const;
  /// x -> x^q on F_{q^n}
  FiniteField::Elem frobenius_q(int n, FiniteField::Elem x) const;
  FiniteField::Elem norm(int n, FiniteField::Elem x) const;
  FiniteField::Elem trace(int n, FiniteField::Elem x) const;

 private:
  struct Ext {
    FiniteFieldPtr field;
    std::vector<FiniteField::Elem> embed;
    std::map<FiniteField::Elem, FiniteField::Elem> restrict;
  };
  const Ext& ext_data(int n) const;
  void build_ext(int n);

  long p_;
  int f_;
  FiniteFieldPtr base_;
  std::map<int, Ext> exts_;
};

}  // namespace cusp
