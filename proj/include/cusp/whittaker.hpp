#pragma once

#include <cstddef>
#include <optional>

#include "cusp/simple_type.hpp"

namespace cusp {

/// g = n varpi_E^i j0 with n in N and j0 in J.
struct SupportDecomposition {
  PadicMatrix n;
  int i = 0;
  PadicMatrix j0;
};

/// Closed-form membership test for N bold J.
std::optional<SupportDecomposition> support_decompose(const SimpleType& T, const PadicMatrix& g);

/// Bounded search over n = [[1, x], [0, 1]] with x in p^{-w} o modulo p^2.
/// Used to cross-check support_decompose; throws WindowExceeded when the
/// entries of g are too deep for the window to be conclusive.
std::optional<SupportDecomposition> support_search(const SimpleType& T, const PadicMatrix& g, int w);

struct BesselSuiteOptions {
  /// Duality on every element of the finite quotient up to this size, else on a sample.
  std::size_t duality_exhaustive_up_to = 1000;
  std::size_t duality_samples = 500;
  /// Convolution on all pairs when the finite group has at most this many elements.
  std::size_t convolution_exhaustive_up_to = 48;
  std::size_t convolution_samples = 200;
  unsigned seed = 1;
};

struct BesselSuiteResult {
  bool unit_ok = false;        // J(1) = 1
  std::size_t duality_checked = 0;
  bool duality_exhaustive = false;
  bool duality_ok = false;     // J^vee(j) = J(j^{-1})
  std::size_t convolution_checked = 0;
  bool convolution_exhaustive = false;
  bool convolution_ok = false; // convolution identity, or multiplicativity on J mod p^2
  bool pass() const { return unit_ok && duality_ok && convolution_ok; }
};

/// Bessel function checks on the finite quotient of J. The dual type is built in K.
BesselSuiteResult bessel_suite(const SimpleType& T, const CycFieldPtr& K, const BesselSuiteOptions& opt = {});

/// W, or W^vee when dual, optionally multiplied by c^{v(det g)}.
class WhittakerEvaluator {
 public:
  explicit WhittakerEvaluator(SimpleTypePtr type, bool dual = false, CycNumber twist = CycNumber(1));

  const SimpleType& type() const { return *T_; }
  const SimpleTypePtr& type_ptr() const { return T_; }
  bool is_dual() const { return dual_; }
  const CycNumber& twist() const { return c_; }
  /// Character of N under which this function transforms.
  CycNumber psi(const PadicMatrix& u) const;

  CycNumber operator()(const PadicMatrix& g) const;
  /// Value on a known decomposition.
  CycNumber on(const SupportDecomposition& d, int val_det) const;

 private:
  SimpleTypePtr T_;
  bool dual_;
  CycNumber c_;
};

}  // namespace cusp
