#include <functional>
#include <optional>
#include <random>

#include "cusp/error.hpp"
#include "cusp/simple_type.hpp"
#include "cusp/whittaker.hpp"
#include "test_util.hpp"

using namespace cusp;

namespace {

TypeParams depth_zero(long p, long k, CycNumber A = CycNumber(1), int sign = 1) {
  TypeParams t;
  t.family = Family::DepthZero;
  t.p = p;
  t.theta_index = k;
  t.A = A;
  t.psi_sign = sign;
  return t;
}

TypeParams ramified(long p, long s, CycNumber A = CycNumber(1), int sign = 1) {
  TypeParams t;
  t.family = Family::Ramified;
  t.p = p;
  t.sigma = s;
  t.A = A;
  t.psi_sign = sign;
  return t;
}

SimpleTypePtr build(const TypeParams& t, int extra_depth = 0, const std::vector<CycNumber>& scalars = {}) {
  return SimpleType::make(t, CycField::make(session_modulus({t}, scalars, extra_depth)));
}

PadicMatrix upper(const Rational& x) { return PadicMatrix(2, {1, x, 0, 1}); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ConfigError;
}

PadicMatrix random_integral(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  while (true) {
    PadicMatrix g(2, {num(rng), num(rng), num(rng), num(rng)});
    if (g.det() != 0) return g;
  }
}

/// n varpi_E^i j with j a random lift of an element of the finite quotient.
PadicMatrix random_supported(const SimpleType& T, const std::vector<PadicMatrix>& quotient, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, quotient.size() - 1);
  std::uniform_int_distribution<int> a(-2, 2);
  std::uniform_int_distribution<long> x(-30, 30);
  const long m = T.level() == 1 ? T.p() : T.p() * T.p();
  PadicMatrix j = quotient[pick(rng)];
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) j.at(r, c) += m * x(rng);
  return upper(x(rng)) * T.uniformizer_power(a(rng)) * j;
}

/// W(g), or none when g needs theta beyond the field's depth cap.
std::optional<CycNumber> eval_capped(const std::function<CycNumber()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DepthExceeded) throw;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("type construction") {
  auto T = build(depth_zero(2, 1));
  CHECK(T->e() == 1);
  CHECK(T->psi().t()[0] == 1);
  CHECK(T->central_at_uniformizer() == CycNumber(1));
  auto R = build(ramified(3, 0));
  CHECK(R->e() == 2);
  CHECK(R->psi().t()[0] == Rational(1, 3));
  CHECK(code_of([] { build(depth_zero(3, 4)); }) == ErrorCode::NotRegular);
  CHECK(code_of([] { build(ramified(2, 0)); }) == ErrorCode::EvenResidualCharacteristic);
  CHECK(code_of([] {
          TypeParams t = depth_zero(2, 1);
          t.n = 3;
          build(t);
        }) == ErrorCode::UnsupportedDescriptor);
  CHECK(code_of([] { SimpleType::make(ramified(3, 0), CycField::make(3)); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("psi_t values") {
  auto T = build(depth_zero(3, 1));
  const CycFieldPtr& K = T->field();
  CHECK(T->psi()(PadicMatrix::identity(2)) == CycNumber(1));
  CHECK(T->psi()(upper(1)) == CycNumber::root(K, K->modulus() / 3));
  auto R = build(ramified(3, 0));
  const CycFieldPtr& L = R->field();
  CHECK(R->psi()(upper(1)) == CycNumber::root(L, L->modulus() / 9));
  CHECK(R->psi().inverse()(upper(1)) == CycNumber::root(L, -L->modulus() / 9));
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> x(-50, 50);
  for (int t = 0; t < 100; ++t) {
    const Rational a = x(rng), b = x(rng);
    CHECK(R->psi()(upper(a) * upper(b)) == R->psi()(upper(a)) * R->psi()(upper(b)));
  }
  CHECK(code_of([&] { R->psi()(upper(Rational(1, 3))); }) == ErrorCode::DepthExceeded);
}

TEST_CASE("extended psi on U") {
  auto T = build(depth_zero(3, 1));
  CHECK(T->extended_psi(PadicMatrix::identity(2)) == CycNumber(1));
  CHECK(T->extended_psi(PadicMatrix::from_ints(2, {4, 3, 6, 7})) == CycNumber(1));
  auto R = build(ramified(3, 0));
  const CycFieldPtr& L = R->field();
  const CycNumber zeta3 = CycNumber::root(L, L->modulus() / 3);
  CHECK(R->extended_psi(PadicMatrix::from_ints(2, {1, 3, 0, 1})) == zeta3);
  CHECK(R->extended_psi(PadicMatrix::from_ints(2, {1, 0, 1, 1})) == zeta3);
  CHECK(code_of([&] { R->extended_psi(PadicMatrix::from_ints(2, {1, 1, 0, 1})); }) == ErrorCode::NotInU);

  std::mt19937 rng(5);
  std::uniform_int_distribution<long> x(-20, 20);
  for (const SimpleTypePtr& S : {T, R}) {
    const long p = S->p();
    const long nstep = S->family() == Family::DepthZero ? 1 : p;
    for (int trial = 0; trial < 100; ++trial) {
      const PadicMatrix n = upper(nstep * x(rng));
      PadicMatrix h(2, {1 + p * x(rng), p * x(rng), x(rng) * (S->family() == Family::DepthZero ? p : 1), 1 + p * x(rng)});
      if (h.det() == 0) continue;
      const PadicMatrix b = upper(p * x(rng));
      const CycNumber v = S->extended_psi(n, h);
      CHECK(S->extended_psi(n * b, b.inverse() * h) == v);
      CHECK(S->extended_psi(n * h) == v);
    }
  }
}

TEST_CASE("Bessel function values") {
  auto T = build(depth_zero(2, 1));
  CHECK(T->bessel(PadicMatrix::identity(2)) == CycNumber(1));
  CHECK(T->bessel(upper(1)) == CycNumber(-1));
  const CycNumber zeta8 = CycNumber::root(CycField::make(8), 1);
  auto R = build(ramified(3, 0, zeta8), 0, {zeta8});
  CHECK(R->bessel(R->uniformizer()) == zeta8.embed(R->field()));
  CHECK(R->bessel(PadicMatrix::identity(2)) == CycNumber(1));
  CHECK(code_of([&] { R->bessel(0, PadicMatrix::from_ints(2, {1, 1, 0, 1})); }) == ErrorCode::NotInJ);
  CHECK(code_of([&] { T->bessel(PadicMatrix::diag({2, 1})); }) == ErrorCode::NotInJ);
}

TEST_CASE("dual Bessel is the Bessel function at the inverse") {
  for (const TypeParams& t : {depth_zero(2, 1), depth_zero(3, 1), depth_zero(3, 3), ramified(3, 1), ramified(5, 2)}) {
    const CycNumber A = CycNumber::root(CycField::make(4), 1);
    TypeParams ta = t;
    ta.A = A;
    const long N = session_modulus({ta}, {A});
    auto K = CycField::make(N);
    auto T = SimpleType::make(ta, K);
    auto D = SimpleType::make(ta.dual(), K);
    for (const PadicMatrix& j : T->finite_quotient()) {
      CHECK(D->bessel(0, j) == T->bessel(0, j.inverse()));
      const PadicMatrix wj = T->uniformizer() * j;
      CHECK(D->bessel(wj) == T->bessel(wj.inverse()));
    }
  }
}

TEST_CASE("ramified Lambda is a character of bold J") {
  auto R = build(ramified(5, 3));
  const auto Q = R->finite_quotient();
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, Q.size() - 1);
  for (int t = 0; t < 300; ++t) {
    const PadicMatrix a = Q[pick(rng)], b = Q[pick(rng)];
    CHECK(R->bessel(a * b) == R->bessel(a) * R->bessel(b));
    CHECK(R->bessel(R->uniformizer() * a) == R->bessel(R->uniformizer()) * R->bessel(a));
  }
  CHECK(Q.size() == 12500);
}

TEST_CASE("support decomposition examples") {
  auto T = build(depth_zero(2, 1));
  auto d = support_decompose(*T, PadicMatrix::identity(2));
  REQUIRE(d);
  CHECK(d->n == PadicMatrix::identity(2));
  CHECK(d->i == 0);
  CHECK(d->j0 == PadicMatrix::identity(2));
  CHECK_FALSE(support_decompose(*T, PadicMatrix::diag({2, 1})));
  auto R = build(ramified(3, 0));
  auto e = support_decompose(*R, R->uniformizer());
  REQUIRE(e);
  CHECK(e->n == PadicMatrix::identity(2));
  CHECK(e->i == 1);
  CHECK(e->j0 == PadicMatrix::identity(2));
}

TEST_CASE("closed-form support agrees with the bounded search") {
  std::mt19937 rng(17);
  for (const TypeParams& t : {depth_zero(2, 1), depth_zero(3, 1), ramified(3, 1), ramified(5, 0)}) {
    auto T = build(t, 1);
    const auto Q = T->finite_quotient();
    const long p = T->p();
    std::uniform_int_distribution<int> scale(0, 2);
    int evaluated = 0;
    for (int trial = 0; trial < 200; ++trial) {
      PadicMatrix g = trial % 2 ? random_supported(*T, Q, rng) : random_integral(rng);
      if (trial % 4 == 1) g = g * PadicMatrix::diag({qpow(p, scale(rng)), 1});
      const PadicMatrix h = T->uniformizer_power(-(g.val_det(p) / (2 / T->e()))) * g;
      if (h.min_val(p) < -2) continue;
      auto a = support_decompose(*T, g);
      auto b = support_search(*T, g, 2);
      CHECK(a.has_value() == b.has_value());
      if (a && b) {
        CHECK(a->i == b->i);
        CHECK(a->n * T->uniformizer_power(a->i) * a->j0 == g);
        const WhittakerEvaluator W(T);
        auto wa = eval_capped([&] { return W.on(*a, g.val_det(p)); });
        auto wb = eval_capped([&] { return W.on(*b, g.val_det(p)); });
        CHECK(wa.has_value() == wb.has_value());
        if (wa && wb) {
          CHECK(*wa == *wb);
          ++evaluated;
        }
      }
    }
    CHECK(evaluated >= 50);
  }
}

TEST_CASE("Whittaker function examples") {
  auto T = build(depth_zero(2, 1));
  const WhittakerEvaluator W(T);
  CHECK(W(PadicMatrix::identity(2)) == CycNumber(1));
  CHECK(W(PadicMatrix::diag({2, 1})) == CycNumber(0));
  CHECK(W(PadicMatrix::diag({2, 2})) == CycNumber(1));
  auto R = build(ramified(3, 0));
  const WhittakerEvaluator V(R);
  CHECK(V(PadicMatrix::identity(2)) == CycNumber(1));
  CHECK(V(PadicMatrix::diag({3, 1})) == CycNumber(0));
}

TEST_CASE("left equivariance under N") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> x(-30, 30);
  const CycNumber c = CycNumber::root(CycField::make(4), 1);
  for (const TypeParams& t : {depth_zero(3, 1, CycNumber(-1)), ramified(3, 1, c)}) {
    auto K = CycField::make(session_modulus({t}, {c}, 1));
    auto T = SimpleType::make(t, K);
    const auto Q = T->finite_quotient();
    for (const WhittakerEvaluator& W : {WhittakerEvaluator(T), WhittakerEvaluator(T, true, c)}) {
      int nonzero = 0;
      for (int trial = 0; trial < 500; ++trial) {
        const PadicMatrix g = trial % 5 ? random_supported(*T, Q, rng) : random_integral(rng);
        const PadicMatrix u = upper(x(rng));
        auto w = eval_capped([&] { return W(g); });
        auto wu = eval_capped([&] { return W(u * g); });
        if (!w || !wu) continue;
        if (!w->is_zero()) ++nonzero;
        CHECK(*wu == W.psi(u) * *w);
      }
      CHECK(nonzero >= 250);
    }
  }
}

TEST_CASE("support slices sit at |det g| = q^{-in/e}") {
  std::mt19937 rng(29);
  for (const TypeParams& t : {depth_zero(3, 1), ramified(3, 1)}) {
    auto T = build(t);
    const auto Q = T->finite_quotient();
    for (int trial = 0; trial < 200; ++trial) {
      const PadicMatrix g = random_supported(*T, Q, rng);
      auto d = support_decompose(*T, g);
      REQUIRE(d);
      CHECK(g.val_det(T->p()) == d->i * T->n() / T->e());
    }
  }
}

TEST_CASE("dual evaluator matches the dual type and its twists") {
  std::mt19937 rng(31);
  const CycNumber i4 = CycNumber::root(CycField::make(4), 1);
  for (const TypeParams& t : {depth_zero(3, 3, i4), ramified(5, 1, i4)}) {
    auto K = CycField::make(session_modulus({t}, {i4}, 1));
    auto T = SimpleType::make(t, K);
    const auto Q = T->finite_quotient();
    for (const CycNumber& c : {CycNumber(1), CycNumber(-1), i4}) {
      auto D = SimpleType::make(t.dual().twisted(c), K);
      const WhittakerEvaluator Wd(T, true, c), V(D);
      for (int trial = 0; trial < 150; ++trial) {
        const PadicMatrix g = trial % 3 ? random_supported(*T, Q, rng) : random_integral(rng);
        auto a = eval_capped([&] { return Wd(g); });
        auto b = eval_capped([&] { return V(g); });
        CHECK(a.has_value() == b.has_value());
        if (a && b) CHECK(*a == *b);
      }
    }
  }
}

TEST_CASE("central character") {
  std::mt19937 rng(37);
  const CycNumber i4 = CycNumber::root(CycField::make(4), 1);
  for (const TypeParams& t : {depth_zero(3, 1, i4), ramified(5, 3, i4)}) {
    auto T = build(t, 0, {i4});
    const auto Q = T->finite_quotient();
    const WhittakerEvaluator W(T);
    const long p = T->p();
    for (int trial = 0; trial < 100; ++trial) {
      const PadicMatrix g = random_supported(*T, Q, rng);
      auto w = eval_capped([&] { return W(g); });
      if (!w) continue;
      CHECK(W(PadicMatrix::diag({p, p}) * g) == T->central_at_uniformizer() * *w);
      for (long u = 1; u < p; ++u) CHECK(W(PadicMatrix::diag({u, u}) * g) == T->central_on_unit(u) * *w);
    }
  }
}

TEST_CASE("nondegeneracy holds for every parameter at small p") {
  for (long k = 0; k < 8; ++k) {
    if (k % 4 == 0) continue;
    CHECK_NOTHROW(build(depth_zero(3, k)));
    CHECK_NOTHROW(build(depth_zero(3, k, CycNumber(1), -1)));
  }
  for (long s = 0; s < 4; ++s) CHECK_NOTHROW(build(ramified(5, s, CycNumber(1), -1)));
}

TEST_CASE("Bessel suite") {
  auto T = build(depth_zero(2, 1));
  auto r = bessel_suite(*T, T->field());
  CHECK(r.pass());
  CHECK(r.duality_exhaustive);
  CHECK(r.duality_checked == 6);
  CHECK(r.convolution_exhaustive);
  CHECK(r.convolution_checked == 36);
  auto R = build(ramified(3, 1));
  r = bessel_suite(*R, R->field());
  CHECK(r.pass());
  CHECK(r.duality_exhaustive);
  CHECK(r.convolution_checked == 200);
  auto F = build(depth_zero(3, 1));
  BesselSuiteOptions o;
  o.convolution_exhaustive_up_to = 0;
  o.convolution_samples = 20;
  r = bessel_suite(*F, F->field(), o);
  CHECK(r.pass());
  CHECK_FALSE(r.convolution_exhaustive);
  CHECK(r.convolution_checked == 20);
}
