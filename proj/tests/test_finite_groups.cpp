#include <map>
#include <random>
#include <set>

#include "cusp/error.hpp"
#include "cusp/finite_matrix.hpp"
#include "test_util.hpp"

using namespace cusp;

namespace {
std::shared_ptr<const FiniteFieldTower> tower(long p, int f = 1) {
  return std::make_shared<const FiniteFieldTower>(p, f, std::vector<int>{2, 3});
}
}  // namespace

TEST_CASE("finite field generators and orders") {
  for (auto [p, d] : std::vector<std::pair<long, int>>{{2, 1}, {2, 3}, {3, 2}, {5, 2}, {2, 6}, {5, 3}}) {
    auto F = FiniteField::make(p, d);
    CHECK(F->order(F->generator()) == F->size() - 1);
    std::set<int> seen;
    for (long k = 0; k < F->size() - 1; ++k) seen.insert(F->exp(k));
    CHECK(static_cast<int>(seen.size()) == F->size() - 1);
    for (int a = 1; a < F->size(); ++a) CHECK(F->mul(a, F->inv(a)) == 1);
  }
}

TEST_CASE("norm and trace") {
  for (long p : {2L, 3L, 5L}) {
    auto T = tower(p);
    for (int n : {2, 3}) {
      const FiniteField& E = *T->ext(n);
      std::set<int> traces, norms;
      for (int x = 0; x < E.size(); ++x) {
        traces.insert(T->trace(n, x));
        if (x) norms.insert(T->norm(n, x));
        for (int y = 0; y < E.size(); y += 7) {
          CHECK(T->trace(n, E.add(x, y)) == T->base()->add(T->trace(n, x), T->trace(n, y)));
          if (x && y) CHECK(T->norm(n, E.mul(x, y)) == T->base()->mul(T->norm(n, x), T->norm(n, y)));
        }
      }
      CHECK(static_cast<long>(traces.size()) == p);
      CHECK(static_cast<long>(norms.size()) == p - 1);
    }
  }
  // F_4 over F_2 then F_16 = F_4 extended by 2: transitivity of the trace to F_2
  auto T = std::make_shared<const FiniteFieldTower>(2, 2, std::vector<int>{2});
  const FiniteField& E = *T->ext(2);
  for (int x = 0; x < E.size(); ++x) CHECK(E.trace_to_prime(x) == T->base()->trace_to_prime(T->trace(2, x)));
}

TEST_CASE("enumerate_group counts") {
  auto count = [](long p, int n) {
    MatrixGroup G(tower(p), n);
    long c = 0;
    G.enumerate([&](const FiniteMatrix&) { ++c; });
    CHECK(c == G.order());
    return c;
  };
  CHECK(count(2, 2) == 6);
  CHECK(count(3, 2) == 48);
  CHECK(count(5, 1) == 4);
  CHECK(count(2, 3) == 168);
  MatrixGroup G(tower(3), 2);
  long split = 0;
  G.enumerate_range(0, 40, [&](const FiniteMatrix&) { ++split; });
  G.enumerate_range(40, G.code_count(), [&](const FiniteMatrix&) { ++split; });
  CHECK(split == 48);
}

TEST_CASE("enumeration guard") {
  auto T = std::make_shared<const FiniteFieldTower>(2, 3, std::vector<int>{2});
  MatrixGroup G(T, 3);
  CHECK_NOTHROW(G.order());
  MatrixGroup H(std::make_shared<const FiniteFieldTower>(101, 1, std::vector<int>{2}), 3);
  try {
    H.enumerate([](const FiniteMatrix&) {});
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("group axioms") {
  for (long p : {2L, 3L}) {
    for (int n : {2, 3}) {
      MatrixGroup G(tower(p), n);
      auto els = G.elements();
      std::mt19937 rng(3);
      std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
      for (int t = 0; t < 200; ++t) {
        const auto& a = els[pick(rng)];
        const auto& b = els[pick(rng)];
        const auto& c = els[pick(rng)];
        CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
        CHECK(G.mul(a, G.inv(a)) == G.identity());
        CHECK(G.mul(a, b).det == G.field().mul(a.det, b.det));
      }
    }
  }
}

TEST_CASE("classify_conjugacy examples") {
  MatrixGroup G(tower(2), 2);
  auto id = G.classify(G.identity());
  CHECK(id.kind == ConjClassLabel::Kind::Central);
  CHECK(id.data == std::vector<int>{1});
  auto u = G.classify(G.make({1, 1, 0, 1}));
  CHECK(u.kind == ConjClassLabel::Kind::CentralUnipotent);
  CHECK(u.data == std::vector<int>{1});
  CHECK(G.classify(G.make({0, 1, 1, 1})).kind == ConjClassLabel::Kind::Elliptic);
}

TEST_CASE("class equation and conjugation invariance") {
  for (long p : {2L, 3L, 5L}) {
    MatrixGroup G(tower(p), 2);
    auto els = G.elements();
    std::map<ConjClassLabel, long> sizes;
    for (const auto& g : els) ++sizes[G.classify(g)];
    long total = 0;
    for (const auto& [label, count] : sizes) {
      CHECK(count == G.class_size(label));
      total += G.class_size(label);
    }
    CHECK(total == G.order());
    // labels are conjugation invariant and separate classes
    const auto& g0 = els[els.size() / 3];
    std::set<long> orbit;
    for (const auto& h : els) {
      const auto c = G.conjugate(g0, h);
      CHECK(G.classify(c) == G.classify(g0));
      orbit.insert(G.code(c));
    }
    CHECK(static_cast<long>(orbit.size()) == sizes[G.classify(g0)]);
  }
}

TEST_CASE("elliptic eigenvalues form Frobenius pairs") {
  for (long p : {2L, 3L, 5L}) {
    auto T = tower(p);
    MatrixGroup G(T, 2);
    const FiniteField& E = *T->ext(2);
    G.enumerate([&](const FiniteMatrix& g) {
      auto L = G.classify(g);
      if (L.kind != ConjClassLabel::Kind::Elliptic) return;
      const int x = L.data[0];
      const int xq = T->frobenius_q(2, x);
      CHECK(!T->in_base(2, x));
      CHECK(xq != x);
      CHECK(T->restrict(2, E.add(x, xq)) == G.trace(g));
      CHECK(T->restrict(2, E.mul(x, xq)) == g.det);
    });
  }
}

TEST_CASE("GL3 labels by characteristic and minimal polynomial") {
  MatrixGroup G(tower(2), 3);
  std::map<ConjClassLabel, long> sizes;
  G.enumerate([&](const FiniteMatrix& g) { ++sizes[G.classify(g)]; });
  CHECK(sizes.size() == 6);  // GL_3(F_2) has six conjugacy classes
}

TEST_CASE("mirabolic coset representatives") {
  for (auto [p, n, expected] : std::vector<std::tuple<long, int, long>>{{2, 2, 3}, {3, 2, 8}, {5, 1, 4}, {2, 3, 7}}) {
    MatrixGroup G(tower(p), n);
    auto reps = G.mirabolic_coset_reps();
    CHECK(static_cast<long>(reps.size()) == expected);
    std::set<std::vector<int>> rows;
    for (const auto& r : reps) {
      std::vector<int> row;
      for (int j = 0; j < n; ++j) row.push_back(r.at(n - 1, j));
      rows.insert(row);
    }
    CHECK(static_cast<long>(rows.size()) == expected);
  }
  // every element lies in exactly one coset P g, detected by the bottom row
  for (long p : {2L, 3L}) {
    MatrixGroup G(tower(p), 2);
    auto reps = G.mirabolic_coset_reps();
    std::map<long, long> hits;
    G.enumerate([&](const FiniteMatrix& g) {
      int found = 0;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        auto h = G.mul(g, G.inv(reps[i]));
        if (h.at(1, 0) == 0 && h.at(1, 1) == 1) {
          ++found;
          ++hits[static_cast<long>(i)];
        }
      }
      CHECK(found == 1);
    });
    for (const auto& [i, c] : hits) CHECK(c == G.order() / static_cast<long>(reps.size()));
  }
}

TEST_CASE("unipotent and N\\P representatives") {
  MatrixGroup G(tower(3), 2);
  CHECK(G.unipotent_elements().size() == 3);
  CHECK(G.unipotent_mirabolic_reps().size() == 2);
  MatrixGroup H(tower(2), 3);
  CHECK(H.unipotent_elements().size() == 8);
  CHECK(H.unipotent_mirabolic_reps().size() == 3);  // |N_2(F_2)\\GL_2(F_2)|
}
