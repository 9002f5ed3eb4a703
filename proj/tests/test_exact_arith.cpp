#include <random>

#include "cusp/cyclotomic.hpp"
#include "cusp/error.hpp"
#include "cusp/polynomial.hpp"
#include "cusp/residue.hpp"
#include "cusp/serialize.hpp"
#include "test_util.hpp"

using namespace cusp;

namespace {

using RF = RationalFunction<CycNumber>;
using P = Poly<CycNumber>;

P poly(std::initializer_list<long> cs) {
  std::vector<CycNumber> v;
  for (long c : cs) v.emplace_back(c);
  return P(v);
}

CycNumber random_cyc(const CycFieldPtr& K, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c;
  for (int i = 0; i < K->degree(); ++i) c.emplace_back(num(rng), den(rng));
  for (auto& r : c) r.canonicalize();
  return CycNumber(K, c);
}

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(CycNumber::root(CycField::make(1), 0) == CycNumber(1));
  CHECK(CycNumber::root(CycField::make(4), 2) == CycNumber(-1));
  auto K3 = CycField::make(3);
  CHECK(CycNumber::root(K3, 1).pow(3) == CycNumber(1));
  CHECK(CycNumber::root(K3, 1) != CycNumber(1));

  for (long N : {5L, 8L, 9L, 12L, 15L}) {
    auto K = CycField::make(N);
    for (long k = 0; k < N; ++k) {
      const long ord = N / gcd_long(k, N);
      const CycNumber z = CycNumber::root(K, k);
      CHECK(z.pow(ord) == CycNumber(1));
      for (long d = 1; d < ord; ++d)
        if (ord % d == 0) CHECK(z.pow(d) != CycNumber(1));
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_poly(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_poly(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_poly(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_poly(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(72) == 24);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20240917);
  const long moduli[] = {3, 4, 8, 9, 12, 24, 72};
  for (int trial = 0; trial < 1000; ++trial) {
    auto K = CycField::make(moduli[trial % 7]);
    const CycNumber a = random_cyc(K, rng), b = random_cyc(K, rng), c = random_cyc(K, rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    if (!a.is_zero()) REQUIRE(a * a.inverse() == CycNumber(1));
    REQUIRE(a - a == CycNumber(0));
  }
}

TEST_CASE("galois action and embedding") {
  auto K4 = CycField::make(4);
  auto K12 = CycField::make(12);
  const CycNumber i = CycNumber::root(K4, 1);
  CHECK(i.conj() == -i);
  CHECK(i.embed(K12) == CycNumber::root(K12, 3));
  const CycNumber z = CycNumber::root(K12, 1);
  CHECK(z.galois(5) == CycNumber::root(K12, 5));
  CHECK((z + z * z).galois(7) == z.galois(7) + z.galois(7) * z.galois(7));
}

TEST_CASE("mixed field-less and fielded values") {
  auto K = CycField::make(5);
  CycNumber z = CycNumber::root(K, 1);
  CHECK(z * CycNumber(0) == CycNumber(0));
  CHECK(CycNumber(1) * z == z);
  CHECK((z - z).is_zero());
  CycNumber s(0);
  for (long k = 0; k < 5; ++k) s += CycNumber::root(K, k);
  CHECK(s == CycNumber(0));
  CHECK(CycNumber::root(K, 2).to_string() == "z5^2");
}

TEST_CASE("fields must match") {
  auto K3 = CycField::make(3);
  auto K5 = CycField::make(5);
  CHECK_THROWS_AS(CycNumber::root(K3, 1) + CycNumber::root(K5, 1), Error);
}

TEST_CASE("euler_normalize") {
  {
    RF f(poly({3}), poly({1, 0, -1}));
    auto n = f.euler_normalize();
    CHECK(n.factor.inverse() == poly({1, 0, -1}));
    CHECK(n.scalar == CycNumber(3));
    CHECK(n.monomial == 0);
  }
  {
    const long q = 2;
    RF f(poly({0, q - 1}), poly({1, -1}));
    auto n = f.euler_normalize();
    CHECK(n.factor.inverse() == poly({1, -1}));
    CHECK(n.scalar == CycNumber(1));
    CHECK(n.monomial == 1);
  }
  {
    RF f(poly({6}), poly({2, 0, -2}));
    auto n = f.euler_normalize();
    CHECK(n.factor.inverse() == poly({1, 0, -1}));
    CHECK(n.scalar == CycNumber(3));
    CHECK(n.monomial == 0);
  }
  CHECK(RF(poly({1, 1}), poly({1, 0, -1})).euler_normalize().factor.inverse() == poly({1, -1}));
  try {
    (void)RF(poly({1, 2}), poly({1, -3})).euler_normalize();
    FAIL("expected NotMonomialMultiple");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMonomialMultiple);
  }
}

TEST_CASE("euler_normalize then re-multiply is the identity") {
  auto K = CycField::make(12);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const CycNumber a = random_cyc(K, rng);
    CycNumber c = random_cyc(K, rng);
    if (c.is_zero()) c = CycNumber(1);
    const int m = trial % 5 - 2;
    const int k = 1 + trial % 3;
    RF f = RF(P::constant(c), P::constant(CycNumber(1)), m) * RF::from_euler(EulerFactor<CycNumber>::geometric(a, k));
    auto n = f.euler_normalize();
    RF back = RF(P::constant(n.scalar), P::constant(CycNumber(1)), n.monomial) * RF::from_euler(n.factor);
    CHECK(back == f);
  }
}

TEST_CASE("series_coefficients") {
  auto one = [](const std::vector<CycNumber>& v, std::vector<long> w) {
    REQUIRE(v.size() == w.size());
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == CycNumber(w[i]));
  };
  one(RF(poly({1}), poly({1, 0, -1})).series_coefficients(0, 4), {1, 0, 1, 0, 1});
  one(RF(poly({3}), poly({1, 0, -1})).series_coefficients(0, 2), {3, 0, 3});
  one(RF(poly({1, 0, 0, 0, -1}), poly({1, 0, -1})).series_coefficients(0, 3), {1, 0, 1, 0});
  one(RF(poly({1}), poly({1, -1}), -2).series_coefficients(-3, 1), {0, 1, 1, 1, 1});
}

TEST_CASE("rational function reduction and reassembly") {
  RF f(poly({1, 0, 0, 0, -1}), poly({1, 0, -1}));
  CHECK(f.denominator() == poly({1}));
  CHECK(f.numerator() == poly({1, 0, 1}));
  RF g(poly({0, 0, 2}), poly({0, 4, -4}));
  CHECK(g.shift() == 1);
  CHECK(g.numerator() == P::constant(CycNumber(Rational(1, 2))));
  CHECK(g.denominator() == poly({1, -1}));
  CHECK(g * RF(poly({4, -4}), poly({1})) == RF(poly({0, 2}), poly({1})));
  CHECK_THROWS_AS(RF(poly({1}), P()), Error);
}

TEST_CASE("series of a product is the convolution of series") {
  auto K = CycField::make(8);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    RF f(P({random_cyc(K, rng), random_cyc(K, rng)}), P({CycNumber(1), random_cyc(K, rng)}));
    RF g(P({random_cyc(K, rng)}), P({CycNumber(1), CycNumber(0), random_cyc(K, rng)}), trial % 3 - 1);
    const int lo = -2, hi = 6;
    auto sf = f.series_coefficients(lo, hi), sg = g.series_coefficients(lo, hi), sfg = (f * g).series_coefficients(lo, hi);
    // f starts at degree 0 and g at degree >= -1, so degrees up to hi - 1 see complete sums
    for (int k = lo; k < hi; ++k) {
      CycNumber conv(0);
      for (int i = lo; i <= hi; ++i) {
        const int j = k - i;
        if (j < lo || j > hi) continue;
        conv += sf[static_cast<std::size_t>(i - lo)] * sg[static_cast<std::size_t>(j - lo)];
      }
      CHECK(conv == sfg[static_cast<std::size_t>(k - lo)]);
    }
  }
}

TEST_CASE("cyclotomic factorization mod ell") {
  auto f = cyclotomic_factors_mod(3, 7);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == FpPoly{3, 1});
  CHECK(f[1] == FpPoly{5, 1});
  CHECK(cyclotomic_factors_mod(5, 2) == std::vector<FpPoly>{{1, 1, 1, 1, 1}});
  auto g = cyclotomic_factors_mod(8, 3);
  CHECK(g.size() == 2);
  for (const auto& h : g) CHECK(h.size() == 3);
  CHECK(fp::least_irreducible(2, 2) == FpPoly{1, 1, 1});
  CHECK(fp::least_irreducible(2, 3) == FpPoly{1, 0, 1});
  CHECK(fp::is_irreducible(fp::least_irreducible(3, 5), 5));
}

TEST_CASE("reduce_mod_ell") {
  auto F3 = ResidueField::make(1, 3, 0);
  CHECK(reduce_mod_ell(CycNumber(2), F3) == ResidueScalar(F3, {2}));
  CHECK(reduce_mod_ell(CycNumber(2), F3) == -ResidueScalar(F3, {1}));

  auto K3 = CycField::make(3);
  auto F7 = ResidueField::make(3, 7, 1);
  CHECK(F7->modulus_poly() == FpPoly{5, 1});
  CHECK(reduce_mod_ell(CycNumber::root(K3, 1), F7) == ResidueScalar(F7, {2}));

  auto F2 = ResidueField::make(1, 2, 0);
  try {
    (void)reduce_mod_ell(CycNumber(Rational(1, 2)), F2);
    FAIL("expected NotIntegralAtEll");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIntegralAtEll);
  }
}

TEST_CASE("reduction is a ring homomorphism") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  const std::pair<long, long> cases[] = {{12, 5}, {24, 7}, {9, 5}, {8, 3}, {15, 2}};
  for (auto [N, ell] : cases) {
    auto K = CycField::make(N);
    const int nf = static_cast<int>(cyclotomic_factors_mod(N, ell).size());
    for (int idx = 0; idx < nf; ++idx) {
      auto F = ResidueField::make(N, ell, idx);
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> a, b;
        for (int i = 0; i < K->degree(); ++i) {
          int d = den(rng);
          while (d % ell == 0) d = den(rng);
          a.emplace_back(num(rng), d);
          b.emplace_back(num(rng), 1);
        }
        for (auto& r : a) r.canonicalize();
        CycNumber x(K, a), y(K, b);
        CHECK(reduce_mod_ell(x * y, F) == reduce_mod_ell(x, F) * reduce_mod_ell(y, F));
        CHECK(reduce_mod_ell(x + y, F) == reduce_mod_ell(x, F) + reduce_mod_ell(y, F));
      }
      CHECK(reduce_mod_ell(CycNumber::root(K, 1), F) != ResidueScalar(F, {1}));
    }
  }
}

TEST_CASE("residue field arithmetic") {
  auto F = ResidueField::make(5, 2, 0);
  CHECK(F->degree() == 4);
  ResidueScalar x(F, {0, 1});
  ResidueScalar acc(1);
  for (int i = 0; i < 5; ++i) acc *= x;
  CHECK(acc == ResidueScalar(1));
  CHECK(x * x.inverse() == ResidueScalar(1));
  CHECK((x + x).is_zero());
}

TEST_CASE("json round trip") {
  auto K = CycField::make(12);
  const CycNumber z = CycNumber::root(K, 1);
  const CycNumber x = z * CycNumber(Rational(3, 4)) - CycNumber(2);
  CHECK(cyc_from_json(to_json(x)) == x);
  CHECK(to_json(CycNumber(Rational(-1, 3))).dump() == R"({"N":1,"coeffs":["-1/3"]})");

  RF f(P({CycNumber(1), z}), P({CycNumber(1), CycNumber(0), -z * z}), -1);
  CHECK(rational_function_from_json(to_json(f)) == f);
  RF g(poly({6}), poly({2, 0, -2}));
  CHECK(to_json(g).dump() == R"({"N":1,"num":[[0,["3"]]],"den":[[0,["1"]],[2,["-1"]]]})");
  CHECK(to_string(g) == "3/(1 - X^2)");
}
