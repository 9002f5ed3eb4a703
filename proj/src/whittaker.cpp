#include "cusp/whittaker.hpp"

#include <random>

#include "cusp/error.hpp"

namespace cusp {

namespace {

PadicMatrix upper(const PadicScalar& x) { return PadicMatrix(2, {1, x, 0, 1}); }

std::optional<SupportDecomposition> finish(const SimpleType& T, const PadicMatrix& g, const PadicMatrix& n, int i) {
  PadicMatrix j0 = T.uniformizer_power(-i) * n.inverse() * g;
  if (!T.in_J(j0)) return std::nullopt;
  return SupportDecomposition{n, i, j0};
}

}  // namespace

std::optional<SupportDecomposition> support_decompose(const SimpleType& T, const PadicMatrix& g) {
  const long p = T.p();
  if (T.family() == Family::DepthZero) {
    const NAK d = iwasawa_NAK(g, p);
    const std::vector<int> v = d.valuations();
    if (v[0] != v[1]) return std::nullopt;
    return SupportDecomposition{d.n, v[0], d.k};
  }
  const int i = g.val_det(p);
  const PadicMatrix h = T.uniformizer_power(-i) * g;
  if (i % 2 == 0) {
    if (h.at(1, 1) == 0 || vp(h.at(1, 1), p) != 0) return std::nullopt;
    return finish(T, g, upper(h.at(0, 1) / h.at(1, 1)), i);
  }
  if (h.at(0, 0) == 0 || vp(h.at(0, 0), p) != 0) return std::nullopt;
  return finish(T, g, upper(p * h.at(1, 0) / h.at(0, 0)), i);
}

std::optional<SupportDecomposition> support_search(const SimpleType& T, const PadicMatrix& g, int w) {
  const long p = T.p();
  const int v = g.val_det(p);
  const int step = T.n() / T.e();
  if (v % step != 0) return std::nullopt;
  const int i = v / step;
  if ((T.uniformizer_power(-i) * g).min_val(p) < -w)
    throw Error(ErrorCode::WindowExceeded, "entries deeper than the search window " + std::to_string(w));
  long span = 1;
  for (int k = 0; k < w + 2; ++k) span *= p;
  const Rational scale = qpow(p, -w);
  for (long a = 0; a < span; ++a) {
    auto d = finish(T, g, upper(scale * a), i);
    if (d) return d;
  }
  return std::nullopt;
}

BesselSuiteResult bessel_suite(const SimpleType& T, const CycFieldPtr& K, const BesselSuiteOptions& opt) {
  BesselSuiteResult r;
  r.unit_ok = T.bessel(0, PadicMatrix::identity(2)) == CycNumber(1);
  auto D = SimpleType::make(T.params().dual(), K);
  const auto Q = T.finite_quotient();
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, Q.size() - 1);
  r.duality_exhaustive = Q.size() <= opt.duality_exhaustive_up_to;
  const std::size_t count = r.duality_exhaustive ? Q.size() : opt.duality_samples;
  r.duality_ok = true;
  for (std::size_t t = 0; t < count && r.duality_ok; ++t) {
    const PadicMatrix& j = r.duality_exhaustive ? Q[t] : Q[pick(rng)];
    r.duality_ok = D->bessel(0, j) == T.bessel(0, j.inverse());
    ++r.duality_checked;
  }
  r.convolution_ok = true;
  if (T.family() == Family::DepthZero) {
    const FiniteBessel& B = T.finite_bessel();
    const auto G = B.group().elements();
    r.convolution_exhaustive = G.size() <= opt.convolution_exhaustive_up_to;
    if (r.convolution_exhaustive) {
      for (const auto& a : G)
        for (const auto& b : G) {
          ++r.convolution_checked;
          if (!B.convolution_check(a, b)) r.convolution_ok = false;
        }
    } else {
      std::uniform_int_distribution<std::size_t> g(0, G.size() - 1);
      for (std::size_t t = 0; t < opt.convolution_samples; ++t) {
        ++r.convolution_checked;
        if (!B.convolution_check(G[g(rng)], G[g(rng)])) r.convolution_ok = false;
      }
    }
    return r;
  }
  for (std::size_t t = 0; t < opt.convolution_samples; ++t) {
    const PadicMatrix& a = Q[pick(rng)];
    const PadicMatrix& b = Q[pick(rng)];
    ++r.convolution_checked;
    if (T.bessel(0, a * b) != T.bessel(0, a) * T.bessel(0, b)) r.convolution_ok = false;
  }
  return r;
}

WhittakerEvaluator::WhittakerEvaluator(SimpleTypePtr type, bool dual, CycNumber twist)
    : T_(std::move(type)), dual_(dual), c_(twist.embed(T_->field())) {
  if (c_.is_zero()) throw Error(ErrorCode::InvalidArgument, "twist must be nonzero");
}

CycNumber WhittakerEvaluator::psi(const PadicMatrix& u) const {
  return dual_ ? T_->psi().inverse()(u) : T_->psi()(u);
}

CycNumber WhittakerEvaluator::on(const SupportDecomposition& d, int val_det) const {
  CycNumber v;
  if (!dual_) {
    v = T_->psi()(d.n) * T_->bessel(d.i, d.j0);
  } else {
    const PadicMatrix conj = T_->uniformizer_power(d.i) * d.j0.inverse() * T_->uniformizer_power(-d.i);
    v = T_->psi().inverse()(d.n) * T_->bessel(-d.i, conj);
  }
  if (c_ != CycNumber(1)) v *= c_.pow(val_det);
  return v;
}

CycNumber WhittakerEvaluator::operator()(const PadicMatrix& g) const {
  auto d = support_decompose(*T_, g);
  if (!d) return CycNumber::zero(T_->field());
  return on(*d, g.val_det(T_->p()));
}

}  // namespace cusp
