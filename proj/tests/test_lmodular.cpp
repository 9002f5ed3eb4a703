#include "cusp/error.hpp"
#include "cusp/lmodular.hpp"
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

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ConfigError;
}

ResiduePoly fp_poly(const ResidueFieldPtr& F, std::vector<long> c) {
  std::vector<ResidueScalar> out;
  for (long x : c) out.push_back(ResidueScalar(F, FpPoly{mod_floor(x, F->ell())}));
  return ResiduePoly(std::move(out));
}

}  // namespace

TEST_CASE("banality witness") {
  auto v = banal_check(depth_zero(2, 1), 3);
  CHECK_FALSE(v.banal);
  CHECK(v.witness == 0);
  v = banal_check(depth_zero(2, 1), 5);
  CHECK(v.banal);
  CHECK(v.witness == 3);
  v = banal_check(ramified(3, 0), 5);
  CHECK(v.e == 2);
  CHECK(v.banal);
  CHECK(v.witness == 4);
  CHECK(code_of([] { banal_check(depth_zero(2, 1), 2); }) == ErrorCode::EllEqualsP);
  CHECK(code_of([] { banal_check(depth_zero(2, 1), 9); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("banal iff the witness is nonzero") {
  for (long q : {2, 3, 5, 7})
    for (long ell : {2, 3, 5, 7, 11, 13}) {
      if (ell == q) continue;
      const auto v = banal_check(depth_zero(q, 1), ell);
      CHECK(v.banal == ((q - 1) * (q * q - 1) % ell != 0));
      if (q == 2) continue;
      const auto r = banal_check(ramified(q, 0), ell);
      CHECK(r.banal == ((q - 1) * (q - 1) % ell != 0));
    }
}

TEST_CASE("reduce_euler_factor") {
  const CycEulerFactor L(CycPoly({1, 0, -1}));
  const auto R = reduce_euler_factor(L, 5);
  CHECK(R.inverse() == fp_poly(ResidueField::make(1, 5, 0), {1, 0, -1}));

  const CycNumber z3 = CycNumber::root(CycField::make(3), 1);
  const CycEulerFactor M = CycEulerFactor::geometric(z3, 1);
  int hits = 0;
  for (int idx : {0, 1}) {
    const auto F = ResidueField::make(3, 7, idx);
    const auto r = reduce_euler_factor(M, 7, idx);
    if (r.inverse() == fp_poly(F, {1, -2})) ++hits;
    else CHECK(r.inverse() == fp_poly(F, {1, -4}));
  }
  CHECK(hits == 1);

  const CycEulerFactor bad = CycEulerFactor::geometric(CycNumber(Rational(1, 5)), 1);
  CHECK(code_of([&] { reduce_euler_factor(bad, 5); }) == ErrorCode::NotIntegralAtEll);
}

TEST_CASE("corollary, depth zero q = 2, ell = 5") {
  const auto r = verify_corollary(depth_zero(2, 1), depth_zero(2, 2, 1, -1), 5);
  CHECK(r.integral_ok);
  CHECK(r.commutes_ok);
  CHECK(r.match);
  CHECK(r.pass());
  CHECK(r.cells_checked > 0);
  CHECK(r.reduced_factor.inverse() == fp_poly(r.residue, {1, 0, -1}));
  CHECK(r.reduced_scalar == ResidueScalar(r.residue, FpPoly{3}));
  const Json j = to_json(r);
  CHECK(j["ell"] == 5);
  CHECK(j["banal"] == true);
  CHECK(j["match"] == true);
  CHECK(j["reduced_factor"] == "1/(1 - X^2)");
}

TEST_CASE("corollary, depth zero q = 3, ell in {5, 7}") {
  for (long ell : {5, 7})
    for (long k : {1, 2, 3}) {
      const TypeParams t = depth_zero(3, k);
      const auto r = verify_corollary(t, t.dual(), ell);
      CHECK(r.pass());
    }
}

TEST_CASE("corollary, ramified p = 3, ell = 5") {
  const auto r = verify_corollary(ramified(3, 1), ramified(3, 1, 1, -1), 5);
  CHECK(r.pass());
  CHECK(r.reduced_factor.inverse() == fp_poly(r.residue, {1, -1}));
}

TEST_CASE("corollary with a twist keeps every residue-field choice consistent") {
  const CycNumber i4 = CycNumber::root(CycField::make(4), 1);
  const TypeParams t = depth_zero(2, 1);
  const TypeParams d = t.dual().twisted(i4);
  for (int idx : {0, 1}) {
    const auto r = verify_corollary(t, d, 5, idx);
    CHECK(r.pass());
    CHECK(r.reduced_factor == r.reduced_L);
  }
}

TEST_CASE("corollary refusals") {
  CHECK(code_of([] { verify_corollary(depth_zero(2, 1), depth_zero(2, 2, 1, -1), 3); }) == ErrorCode::NonBanal);
  CHECK(code_of([] { verify_corollary(depth_zero(2, 1), depth_zero(2, 2, 1, -1), 2); }) == ErrorCode::EllEqualsP);
  CHECK(code_of([] { verify_corollary(depth_zero(3, 1), depth_zero(3, 2, 1, -1), 5); }) == ErrorCode::InvalidArgument);
}
