#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "cusp/cyclotomic.hpp"
#include "cusp/rational.hpp"

namespace cusp {

/// Element of Q inside Q_p.
using PadicScalar = Rational;

/// v_p(x), with INT_MAX for zero.
int vp(const PadicScalar& x, long p);
/// |x|_F = p^{-v_p(x)}
Rational padic_abs(const PadicScalar& x, long p);
/// x mod p^m for p-integral x, in [0, p^m).
long residue_mod_power(const PadicScalar& x, long p, int m);

/// theta(x) = zeta_{p^{m+1}}^{p^m x mod p^{m+1}} with m = max(0, -v_p(x)) minimal.
/// Throws DepthExceeded when v_p(x) < -cap.
CycNumber theta_eval(const PadicScalar& x, long p, int cap, const CycFieldPtr& K);

/// Invertible n x n matrix over Q in Q_p.
class PadicMatrix {
 public:
  PadicMatrix() = default;
  PadicMatrix(int n, std::vector<Rational> entries);
  static PadicMatrix identity(int n);
  static PadicMatrix diag(const std::vector<Rational>& d);
  static PadicMatrix from_ints(int n, const std::vector<long>& entries);

  int n() const { return n_; }
  const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<Rational>& entries() const { return e_; }

  Rational det() const;
  int val_det(long p) const { return vp(det(), p); }
  PadicMatrix inverse() const;
  PadicMatrix transpose() const;

  /// min v_p over the entries of row i
  int row_min_val(int i, long p) const;
  int min_val(long p) const;
  bool is_integral(long p) const { return min_val(p) >= 0; }
  /// Entries integral and determinant a unit.
  bool in_K(long p) const;
  bool is_upper_unipotent() const;
  bool is_diagonal() const;
  /// Entrywise residues mod p^m (requires integral entries).
  std::vector<long> reduce(long p, int m) const;

  friend PadicMatrix operator*(const PadicMatrix& a, const PadicMatrix& b);
  friend bool operator==(const PadicMatrix& a, const PadicMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend bool operator!=(const PadicMatrix& a, const PadicMatrix& b) { return !(a == b); }
  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<Rational> e_;
};

struct NAK {
  PadicMatrix n;  // upper unipotent
  PadicMatrix a;  // diagonal with entries p^{v_i}
  PadicMatrix k;  // in K
  long prime = 0;
  std::vector<int> valuations() const;
};

/// g = n a k with k in GL_n(Z_p) found by column reduction from the bottom row.
NAK iwasawa_NAK(const PadicMatrix& g, long p);

struct PZK {
  PadicMatrix p;  // mirabolic: bottom row (0, ..., 0, 1)
  PadicMatrix z;  // p^l Id
  PadicMatrix k;  // in K
  int l = 0;
};

/// g = p z k with z = p^l Id, l the minimal valuation of the bottom row.
std::optional<PZK> iwasawa_PZK(const PadicMatrix& g, long p);

/// Completion of a primitive integral row to an element of K with that bottom
/// row: identity rows except the pivot (last unit entry), then the row.
PadicMatrix complete_bottom_row(const std::vector<Rational>& row, long p);

/// Period-e chain of lattices of row vectors L_k = (p^{a_1(k)} o, ..., p^{a_n(k)} o),
/// with the uniformizer acting on the right.
class LatticeChain {
 public:
  LatticeChain(long p, int n, int e, std::vector<std::vector<int>> period, PadicMatrix uniformizer);
  static LatticeChain depth_zero(long p, int n);
  static LatticeChain ramified_gl2(long p);

  long p() const { return p_; }
  int n() const { return n_; }
  int e() const { return e_; }
  /// a_i(k), i in 1..n
  int a(int i, int k) const;
  const PadicMatrix& uniformizer() const { return w_; }
  /// Stated invariants: periodicity, a_n(0) = 0, a_n(-1) = -1, uniformizer
  /// shifting the chain, primitive last rows of the uniformizer powers.
  bool check_invariants(std::string* why = nullptr) const;
  /// X stabilizes every L_k under right multiplication.
  bool in_order(const PadicMatrix& X) const;

 private:
  long p_;
  int n_;
  int e_;
  std::vector<std::vector<int>> period_;  // period_[k][i-1], k in 0..e-1
  PadicMatrix w_;
};

}  // namespace cusp
