#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cusp/finite_field.hpp"

namespace cusp {

/// n x n matrix over F_q (n <= 3), row-major, with its determinant.
struct FiniteMatrix {
  int n = 0;
  std::array<int, 9> a{};
  int det = 0;

  int at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
  friend bool operator==(const FiniteMatrix& x, const FiniteMatrix& y) { return x.n == y.n && x.a == y.a; }
  friend bool operator!=(const FiniteMatrix& x, const FiniteMatrix& y) { return !(x == y); }
};

/// Conjugacy label. For n = 2 the kinds are the four GL_2 types; for n = 3
/// the label is (characteristic polynomial, minimal polynomial).
struct ConjClassLabel {
  enum class Kind { Central, CentralUnipotent, Split, Elliptic, Generic };
  Kind kind = Kind::Generic;
  /// Central/CentralUnipotent: {z}. Split: {a, b} with a < b (codes in F_q).
  /// Elliptic: {x} with x the lesser of x, x^q (code in F_{q^2}).
  /// Generic: char poly coefficients then min poly coefficients, low to high.
  std::vector<int> data;

  friend bool operator==(const ConjClassLabel& x, const ConjClassLabel& y) { return x.kind == y.kind && x.data == y.data; }
  friend bool operator<(const ConjClassLabel& x, const ConjClassLabel& y) {
    return x.kind != y.kind ? x.kind < y.kind : x.data < y.data;
  }
  std::string to_string() const;
};

/// GL_n(F_q) for 1 <= n <= 3.
class MatrixGroup {
 public:
  static constexpr long kEnumerationLimit = 100000000;

  MatrixGroup(std::shared_ptr<const FiniteFieldTower> tower, int n);

  int n() const { return n_; }
  long q() const { return q_; }
  const FiniteField& field() const { return *F_; }
  const FiniteFieldTower& tower() const { return *tower_; }
  /// prod_{i<n} (q^n - q^i)
  long order() const;

  FiniteMatrix make(const std::vector<int>& entries) const;
  FiniteMatrix identity() const;
  FiniteMatrix diag(const std::vector<int>& d) const;
  FiniteMatrix mul(const FiniteMatrix& x, const FiniteMatrix& y) const;
  FiniteMatrix inv(const FiniteMatrix& x) const;
  FiniteMatrix conjugate(const FiniteMatrix& g, const FiniteMatrix& h) const { return mul(mul(h, g), inv(h)); }
  int trace(const FiniteMatrix& x) const;

  /// Entries read as base-q digits, entry (0,0) least significant.
  long code(const FiniteMatrix& g) const;
  /// Number of codes, q^{n^2}.
  long code_count() const { return codes_; }

  /// Every element of GL_n(F_q) exactly once, in code order.
  /// Throws TooLarge when q^{n^2} exceeds kEnumerationLimit.
  void enumerate(const std::function<void(const FiniteMatrix&)>& fn) const;
  /// The invertible matrices with code in [lo, hi), for partitioning work.
  void enumerate_range(long lo, long hi, const std::function<void(const FiniteMatrix&)>& fn) const;
  std::vector<FiniteMatrix> elements() const;

  /// Upper unitriangular matrices N_n(F_q).
  std::vector<FiniteMatrix> unipotent_elements() const;
  /// Bottom-row representatives of P_n(F_q)\GL_n(F_q), one per nonzero row.
  std::vector<FiniteMatrix> mirabolic_coset_reps() const;
  /// Representatives of N_n(F_q)\P_n(F_q).
  std::vector<FiniteMatrix> unipotent_mirabolic_reps() const;

  /// Monic characteristic polynomial, coefficients low to high.
  std::vector<int> char_poly(const FiniteMatrix& g) const;
  std::vector<int> min_poly(const FiniteMatrix& g) const;
  ConjClassLabel classify(const FiniteMatrix& g) const;
  /// Size of the conjugacy class with this label (n = 2).
  long class_size(const ConjClassLabel& label) const;

 private:
  FiniteMatrix from_code(long c) const;
  int det_of(const std::array<int, 9>& a) const;

  std::shared_ptr<const FiniteFieldTower> tower_;
  FiniteFieldPtr F_;
  int n_;
  long q_;
  long codes_;
  /// roots_[t*q + d]: roots in F_{q^2} of x^2 - t x + d (n = 2).
  std::vector<std::vector<int>> roots_;
};

}  // namespace cusp
