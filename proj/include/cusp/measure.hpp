#pragma once

#include <vector>

#include "cusp/padic.hpp"

namespace cusp {

/// Ambient groups for finite-level descriptors.
enum class Ambient {
  G,           // GL_n(F)
  P,           // mirabolic P_n
  Z,           // centre
  N,           // upper unipotent
  PKQuotient,  // (P cap K)\K, classes keyed by bottom rows
  Units,       // F^x through o^x mod 1 + p^m
};

/// A finite union of level-m cosets given by representatives; duplicates
/// modulo level m count once.
struct Descriptor {
  Ambient ambient = Ambient::G;
  int level = 1;
  std::vector<PadicMatrix> reps;
};

/// Haar measures on G_n(Q_p) and its subgroups, each normalized so that its
/// intersection with K^1 (or the image of K^1) has volume 1.
class MeasureContext {
 public:
  MeasureContext(long p, int n);

  long q() const { return p_; }
  int n() const { return n_; }

  /// Volume of one coset of the level-m subgroup of the ambient group.
  Rational coset_volume(Ambient ambient, int m) const;
  /// Throws UnsupportedDescriptor for level < 1 or representatives outside
  /// the ambient compact set.
  Rational volume(const Descriptor& d) const;

  /// K as a union of level-1 cosets, one per element of GL_n(F_q).
  Descriptor maximal_compact() const;
  /// P cap K as a union of level-1 cosets.
  Descriptor mirabolic_compact() const;
  /// (P cap K)\K at level m.
  Descriptor mirabolic_quotient(int m) const;

  /// |det p|, the modular factor for conjugation inside P.
  Rational modular_character(const PadicMatrix& p) const { return padic_abs(p.det(), p_); }

  /// g in N diag(p^{v1}, p^{v2}) k0 K^m (n = 2).
  bool in_unipotent_cell(const PadicMatrix& g, int v1, int v2, const PadicMatrix& k0, int m) const;
  /// Quotient volume of the image of diag(p^{v1}, p^{v2}) k0 K^m in N\G.
  Rational unipotent_cell_volume(int v1, int v2, int m) const;
  /// The same cell measured through N\P x Z x (P cap K)\K with the product
  /// of the normalized measures and the factor |det p|^{-1}; equals (q-1)
  /// times unipotent_cell_volume.
  Rational split_cell_volume(int v1, int v2, const PadicMatrix& k0, int m) const;

 private:
  long p_;
  int n_;
};

/// Units of o modulo 1 + p^m, as integers in [1, p^m) prime to p.
std::vector<long> unit_representatives(long p, int m);
/// Primitive rows of (o/p^m)^n, as integer vectors.
std::vector<std::vector<long>> primitive_rows(long p, int n, int m);

}  // namespace cusp
