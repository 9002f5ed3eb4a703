#include <random>

#include "cusp/cuspidal.hpp"
#include "cusp/error.hpp"
#include "test_util.hpp"

using namespace cusp;

namespace {

struct Setup {
  std::shared_ptr<const FiniteFieldTower> tower;
  std::shared_ptr<const MatrixGroup> G;
  CycFieldPtr K;
};

Setup setup(long p, int f = 1) {
  Setup s;
  s.tower = std::make_shared<const FiniteFieldTower>(p, f, std::vector<int>{2});
  s.G = std::make_shared<const MatrixGroup>(s.tower, 2);
  const long q = s.tower->q();
  s.K = CycField::make(lcm_long(p, q * q - 1));
  return s;
}

std::shared_ptr<const CuspidalCharacter> chi_of(const Setup& s, long k) {
  return std::make_shared<const CuspidalCharacter>(s.G, RegularCharacter(s.tower, 2, k), s.K);
}

}  // namespace

TEST_CASE("regularity") {
  auto s = setup(3);
  CHECK(RegularCharacter(s.tower, 2, 1).is_regular());
  CHECK(RegularCharacter(s.tower, 2, 1).order() == 8);
  CHECK_FALSE(RegularCharacter(s.tower, 2, 4).is_regular());
  try {
    CuspidalCharacter(s.G, RegularCharacter(s.tower, 2, 4), s.K);
    FAIL("expected NotRegular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotRegular);
  }
  CHECK(RegularCharacter(s.tower, 2, 1).same_orbit(RegularCharacter(s.tower, 2, 3)));
  CHECK_FALSE(RegularCharacter(s.tower, 2, 1).same_orbit(RegularCharacter(s.tower, 2, 2)));
}

TEST_CASE("cuspidal character of GL2(F2)") {
  auto s = setup(2);
  auto chi = chi_of(s, 1);
  const MatrixGroup& G = *s.G;
  CHECK((*chi)(G.identity()) == CycNumber(1));
  CHECK((*chi)(G.make({1, 1, 0, 1})) == CycNumber(-1));
  CHECK((*chi)(G.make({0, 1, 1, 1})) == CycNumber(1));
  CHECK(chi->inner_product(*chi) == CycNumber(1));
  CHECK(chi->unipotent_sum() == CycNumber(0));
}

TEST_CASE("degree for q = 3") {
  auto s = setup(3);
  CHECK(chi_of(s, 1)->degree() == CycNumber(2));
}

TEST_CASE("certification of every regular character") {
  for (long p : {2L, 3L, 5L}) {
    auto s = setup(p);
    const long q = p;
    for (long k = 0; k < q * q - 1; ++k) {
      RegularCharacter th(s.tower, 2, k);
      if (!th.is_regular()) continue;
      auto chi = chi_of(s, k);
      CHECK(chi->inner_product(*chi) == CycNumber(1));
      CHECK(chi->unipotent_sum() == CycNumber(0));
      CHECK(chi->degree() == CycNumber(q - 1));
    }
  }
}

TEST_CASE("distinct orbits give orthogonal characters") {
  auto s = setup(3);
  CHECK(chi_of(s, 1)->inner_product(*chi_of(s, 2)) == CycNumber(0));
  CHECK(chi_of(s, 1)->inner_product(*chi_of(s, 3)) == CycNumber(1));
}

TEST_CASE("non-prime residue field") {
  auto s = setup(2, 2);
  for (long k : {1L, 2L, 7L}) {
    auto chi = chi_of(s, k);
    CHECK(chi->inner_product(*chi) == CycNumber(1));
    CHECK(chi->unipotent_sum() == CycNumber(0));
    CHECK(chi->degree() == CycNumber(3));
  }
}

TEST_CASE("additive character") {
  auto s = setup(3);
  FiniteAdditiveCharacter psi(s.tower);
  CHECK(psi.eval(0, s.K) == CycNumber(1));
  CHECK(psi.eval(1, s.K) != CycNumber(1));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(psi.eval(s.tower->base()->add(x, y), s.K) == psi.eval(x, s.K) * psi.eval(y, s.K));
}

TEST_CASE("finite Bessel examples for q = 2") {
  auto s = setup(2);
  FiniteBessel J(chi_of(s, 1), FiniteAdditiveCharacter(s.tower));
  const MatrixGroup& G = *s.G;
  CHECK(J(G.identity()) == CycNumber(1));
  CHECK(J(G.make({1, 1, 0, 1})) == CycNumber(-1));
  CHECK(J(G.make({0, 1, 1, 0})) == CycNumber(-1));
  CHECK(J.convolution_check(G.identity(), G.identity()));
  const auto w = G.make({0, 1, 1, 0});
  CHECK(J.convolution_check(w, G.inv(w)));
}

TEST_CASE("Bessel identities, exhaustive for q in {2, 3}") {
  for (long p : {2L, 3L}) {
    auto s = setup(p);
    for (long k = 1; k < p * p - 1; ++k) {
      if (!RegularCharacter(s.tower, 2, k).is_regular()) continue;
      for (int sign : {1, -1}) {
        FiniteBessel J(chi_of(s, k), FiniteAdditiveCharacter(s.tower, sign));
        const FiniteBessel Jd = J.dual();
        const MatrixGroup& G = *s.G;
        CHECK(J(G.identity()) == CycNumber(1));
        auto els = G.elements();
        for (const auto& g : els) {
          CHECK(Jd(g) == J(G.inv(g)));
          CHECK(J.transformation_check(g));
        }
        for (const auto& g1 : els)
          for (const auto& g2 : els) REQUIRE(J.convolution_check(g1, g2));
      }
    }
  }
}

TEST_CASE("Bessel convolution, random pairs for q = 5") {
  auto s = setup(5);
  FiniteBessel J(chi_of(s, 1), FiniteAdditiveCharacter(s.tower));
  auto els = s.G->elements();
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  for (int t = 0; t < 200; ++t) CHECK(J.convolution_check(els[pick(rng)], els[pick(rng)]));
}

TEST_CASE("Bessel table CSV") {
  auto s = setup(2);
  FiniteBessel J(chi_of(s, 1), FiniteAdditiveCharacter(s.tower));
  const std::string csv = J.table_csv();
  CHECK(csv.rfind("g11,g12,g21,g22,value\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}
