#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "cusp/cli.hpp"
#include "cusp/cuspidal.hpp"
#include "cusp/lmodular.hpp"
#include "cusp/measure.hpp"
#include "cusp/oracle.hpp"
#include "cusp/rankin_selberg.hpp"

using namespace cusp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;
  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 8) failures.push_back(why);
  }
};

struct Shared {
  int jobs = 1;
  std::vector<VerificationReport> reports;  // criteria 1-3
  SupportCheckCounts support;
  long engine_runs = 0;
};

TypeParams depth_zero(long q, long k, CycNumber A = CycNumber(1), int sign = 1) {
  TypeParams t;
  t.family = Family::DepthZero;
  t.p = q;
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

bool regular(long q, long k) { return mod_floor(k * (q - 1), q * q - 1) != 0; }

std::vector<long> regular_indices(long q) {
  std::vector<long> out;
  for (long k = 1; k < q * q - 1; ++k)
    if (regular(q, k)) out.push_back(k);
  return out;
}

const CycNumber& zeta4() {
  static const CycNumber z = CycNumber::root(CycField::make(4), 1);
  return z;
}

std::string label(const TypeParams& a, const TypeParams& b) {
  std::ostringstream os;
  if (a.family == Family::DepthZero)
    os << "q=" << a.p << " k=" << a.theta_index << "/" << b.theta_index;
  else
    os << "p=" << a.p << " s=" << a.sigma << "/" << b.sigma;
  os << " A2=" << b.A.to_string();
  return os.str();
}

CycRationalFunction expected_integral(const VerificationReport& r, const CycNumber& a1a2) {
  const int step = r.n / r.e;
  const CycNumber scalar(r.mu * Rational(r.q - 1) * (qpow(r.q, step) - 1));
  const CycFieldPtr K = r.I.denominator().coeff(0).field() ? r.I.denominator().coeff(0).field()
                                                            : r.I.numerator().coeff(0).field();
  const CycNumber c = a1a2.field() && K ? a1a2.embed(K) : a1a2;
  return CycRationalFunction(CycPoly::constant(scalar), CycPoly::constant(CycNumber(1)) - CycPoly::monomial(c, step));
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ",") + x;
  return out;
}

/// Runs the full verification for a dual pair and checks the closed form.
void theorem_case(Shared& sh, Outcome& o, const TypeParams& a, const TypeParams& b, double limit,
                  std::set<std::string>& mus, double& worst) {
  VerifyOptions opt;
  opt.engine.jobs = sh.jobs;
  const auto t0 = Clock::now();
  VerificationReport r;
  try {
    r = verify_main_theorem(a, b, opt);
  } catch (const Error& e) {
    o.fail(label(a, b) + ": " + e.what());
    return;
  }
  const double dt = seconds_since(t0);
  worst = std::max(worst, dt);
  ++sh.engine_runs;
  sh.support.checked += r.support.checked;
  sh.support.slice_violations += r.support.slice_violations;
  sh.support.coset_violations += r.support.coset_violations;
  sh.support.mirabolic_violations += r.support.mirabolic_violations;
  const bool mu_ok = r.mu > 0 && is_signed_power_of(r.mu, r.q);
  if (!r.dual_pair) o.fail(label(a, b) + ": not recognized as a dual pair");
  else if (!r.theorem_ok || !mu_ok) o.fail(label(a, b) + ": I = " + to_string(r.I));
  else if (r.I != expected_integral(r, a.A * b.A)) o.fail(label(a, b) + ": I differs from mu (q-1)(q^{n/e}-1) L");
  if (dt > limit) o.fail(label(a, b) + ": " + std::to_string(dt) + " s over the limit");
  mus.insert(r.mu.get_str());
  sh.reports.push_back(std::move(r));
}

Outcome criterion_1(Shared& sh) {
  Outcome o;
  std::set<std::string> mus;
  double worst = 0;
  int cases = 0;
  for (long q : {2L, 3L, 5L})
    for (long k : regular_indices(q))
      for (long k2 : {mod_floor(-k, q * q - 1), mod_floor(-q * k, q * q - 1)}) {
        theorem_case(sh, o, depth_zero(q, k), depth_zero(q, k2, 1, -1), 10.0, mus, worst);
        ++cases;
      }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d pairs over q in {2,3,5}, I = mu(q-1)(q^2-1)/(1-X^2) exactly, mu in {%s}, slowest %.2f s (limit 10 s)",
                cases, join(mus).c_str(), worst);
  o.detail = buf;
  return o;
}

Outcome criterion_2(Shared& sh) {
  Outcome o;
  std::set<std::string> mus;
  double worst = 0;
  int cases = 0;
  for (const CycNumber& c : {CycNumber(-1), zeta4()})
    for (long q : {2L, 3L, 5L})
      for (long k : regular_indices(q))
        for (long k2 : {mod_floor(-k, q * q - 1), mod_floor(-q * k, q * q - 1)}) {
          const TypeParams a = depth_zero(q, k), b = depth_zero(q, k2, c, -1);
          if (!(l_factor(a, b).inverse() == CycPoly({1, 0, -c}))) o.fail(label(a, b) + ": l_factor is not 1/(1 - c X^2)");
          theorem_case(sh, o, a, b, 10.0, mus, worst);
          ++cases;
        }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d pairs with A2 in {-1, zeta4}, denominator 1 - A1A2 X^2 = l_factor, mu in {%s}, slowest %.2f s",
                cases, join(mus).c_str(), worst);
  o.detail = buf;
  return o;
}

Outcome criterion_3(Shared& sh) {
  Outcome o;
  std::set<std::string> mus;
  double worst = 0;
  int cases = 0;
  for (long p : {3L, 5L})
    for (long s = 0; s < p - 1; ++s)
      for (const CycNumber& A2 : {CycNumber(1), zeta4()}) {
        theorem_case(sh, o, ramified(p, s), ramified(p, mod_floor(-s, p - 1), A2, -1), 60.0, mus, worst);
        ++cases;
      }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d pairs over p in {3,5}, I = mu(q-1)^2/(1-A1A2 X) exactly, mu in {%s}, slowest %.2f s (limit 60 s)",
                cases, join(mus).c_str(), worst);
  o.detail = buf;
  return o;
}

Outcome criterion_4(Shared& sh) {
  Outcome o;
  std::vector<std::pair<TypeParams, TypeParams>> pairs;
  for (long q : {2L, 3L})
    for (long k : regular_indices(q))
      for (long k2 : regular_indices(q)) pairs.emplace_back(depth_zero(q, k), depth_zero(q, k2, 1, -1));
  pairs.emplace_back(depth_zero(3, 1), depth_zero(3, 7, zeta4(), -1));
  pairs.emplace_back(depth_zero(2, 1), depth_zero(2, 2, CycNumber(-1), -1));
  for (long s1 : {0L, 1L})
    for (long s2 : {0L, 1L})
      for (const CycNumber& A2 : {CycNumber(1), CycNumber(-1), zeta4()}) pairs.emplace_back(ramified(3, s1), ramified(3, s2, A2, -1));
  long coeffs = 0;
  int nonzero = 0;
  for (const auto& [a, b] : pairs) {
    try {
      const CycFieldPtr K = CycField::make(session_modulus({a, b}));
      EngineOptions eo;
      eo.jobs = sh.jobs;
      const RankinSelbergEngine E(WhittakerEvaluator(SimpleType::make(a, K)), WhittakerEvaluator(SimpleType::make(b, K)), eo);
      const EngineRun run = E.run();
      ++sh.engine_runs;
      sh.support.checked += run.support.checked;
      sh.support.slice_violations += run.support.slice_violations;
      sh.support.coset_violations += run.support.coset_violations;
      sh.support.mirabolic_violations += run.support.mirabolic_violations;
      const CycRationalFunction I = E.rankin_selberg_I(run);
      if (!I.is_zero()) ++nonzero;
      const auto series = I.is_zero() ? std::vector<CycNumber>(7, CycNumber(0)) : I.series_coefficients(0, 6);
      for (int k = 0; k <= 6; ++k) {
        ++coeffs;
        if (c_k_bruteforce(E.W1(), E.W2(), k, E.level(), eo.window) != series[static_cast<std::size_t>(k)])
          o.fail(label(a, b) + ": coefficient " + std::to_string(k));
      }
    } catch (const Error& e) {
      o.fail(label(a, b) + ": " + e.what());
    }
  }
  o.detail = std::to_string(pairs.size()) + " pairs (" + std::to_string(nonzero) + " with I != 0), " + std::to_string(coeffs) +
             " coefficients k in [0,6] equal to the brute-force sum";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  BesselSuiteOptions opt;
  opt.duality_exhaustive_up_to = static_cast<std::size_t>(-1);
  opt.convolution_exhaustive_up_to = 6;
  opt.convolution_samples = 200;
  long types = 0, duality = 0, convolution = 0;
  auto run = [&](const TypeParams& t) {
    try {
      const CycFieldPtr K = CycField::make(session_modulus({t}));
      const auto T = SimpleType::make(t, K);
      const BesselSuiteResult r = bessel_suite(*T, K, opt);
      ++types;
      duality += static_cast<long>(r.duality_checked);
      convolution += static_cast<long>(r.convolution_checked);
      if (!r.duality_exhaustive) o.fail(label(t, t) + ": duality not exhaustive");
      if (t.family == Family::DepthZero && t.p == 2 && !r.convolution_exhaustive) o.fail("q=2 convolution not exhaustive");
      if (!r.pass()) o.fail(label(t, t) + ": unit " + std::to_string(r.unit_ok) + " duality " + std::to_string(r.duality_ok) +
                            " convolution " + std::to_string(r.convolution_ok));
    } catch (const Error& e) {
      o.fail(label(t, t) + ": " + e.what());
    }
  };
  for (long q : {2L, 3L, 5L})
    for (long k : regular_indices(q))
      for (int sign : {1, -1}) run(depth_zero(q, k, 1, sign));
  for (long p : {3L, 5L})
    for (long s = 0; s < p - 1; ++s)
      for (int sign : {1, -1}) run(ramified(p, s, 1, sign));
  o.detail = std::to_string(types) + " types: J(1) = 1; duality on all " + std::to_string(duality) +
             " quotient elements; " + std::to_string(convolution) +
             " convolution pairs (all at q=2, 200 random otherwise; multiplicativity on J mod p^2 when ramified)";
  return o;
}

Outcome criterion_6(const Shared& sh) {
  Outcome o;
  const auto& s = sh.support;
  if (s.checked == 0) o.fail("no cell values were checked");
  if (!s.pass())
    o.fail("violations: slice " + std::to_string(s.slice_violations) + ", coset " + std::to_string(s.coset_violations) +
           ", mirabolic " + std::to_string(s.mirabolic_violations));
  o.detail = std::to_string(s.checked) + " nonzero cell values over " + std::to_string(sh.engine_runs) +
             " engine runs, zero slice/coset/mirabolic violations";
  return o;
}

Outcome criterion_7(const Shared& sh) {
  Outcome o;
  std::map<std::string, std::set<std::string>> lam, mu, u;
  for (const auto& r : sh.reports) {
    const std::string fam = to_string(r.type1.family) + " q=" + std::to_string(r.q);
    if (!r.f_const_ok) o.fail(label(r.type1, r.type2) + ": F_i not constant");
    if (!r.c_shape_ok) o.fail(label(r.type1, r.type2) + ": c_i not mu q^{-in/e}");
    if (!r.volume_ok) o.fail(label(r.type1, r.type2) + ": coset volumes not u (q^{n/e}-1) q^{-in/e}");
    for (const Rational* x : {&r.lambda_vol, &r.mu, &r.u})
      if (!(*x > 0 && is_signed_power_of(*x, r.q))) o.fail(label(r.type1, r.type2) + ": diagnostic not a power of q");
    lam[fam].insert(r.lambda_vol.get_str());
    mu[fam].insert(r.mu.get_str());
    u[fam].insert(r.u.get_str());
  }
  std::string d;
  for (const auto& [fam, v] : lam) {
    d += (d.empty() ? "" : "; ") + fam + ": lambdaVol {" + join(v) + "} mu {" + join(mu[fam]) + "} u {" + join(u[fam]) + "}";
  }
  o.detail = std::to_string(sh.reports.size()) + " runs; " + d;
  return o;
}

Outcome criterion_8() {
  Outcome o;
  int cases = 0;
  for (long q : {2L, 3L, 5L})
    for (int n : {2, 3}) {
      const MeasureContext mc(q, n);
      const PadicMatrix one = PadicMatrix::identity(n);
      const Rational split = mc.volume({Ambient::P, 1, {one}}) * mc.volume({Ambient::Z, 1, {one}}) *
                             mc.volume({Ambient::PKQuotient, 1, {one}});
      if (split != mc.volume({Ambient::G, 1, {one}})) o.fail("q=" + std::to_string(q) + " n=" + std::to_string(n) + ": K^1 splitting");
      long order = 1;
      for (int i = 0; i < n; ++i) order *= ipow(q, n) - ipow(q, i);
      const Rational volK = mc.volume(mc.maximal_compact());
      if (volK != Rational(order)) o.fail("q=" + std::to_string(q) + " n=" + std::to_string(n) + ": vol(K) = " + to_string(volK));
      const Rational prod = mc.volume(mc.mirabolic_compact()) * mc.volume(mc.mirabolic_quotient(1));
      if (prod != volK) o.fail("q=" + std::to_string(q) + " n=" + std::to_string(n) + ": vol(P cap K) vol((P cap K)\\K) != vol(K)");
      if (n == 2)
        for (int m : {1, 2})
          for (auto [v1, v2] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 1}, {0, 2}})
            for (const PadicMatrix& k0 : {PadicMatrix::identity(2), PadicMatrix::from_ints(2, {0, 1, 1, 1})})
              if (mc.split_cell_volume(v1, v2, k0, m) != Rational(q - 1) * mc.unipotent_cell_volume(v1, v2, m))
                o.fail("q=" + std::to_string(q) + ": split cell volume");
      ++cases;
    }
  o.detail = std::to_string(cases) + " (q, n) cases: dg = dp dz dk on K^1, vol(K) = |GL_n(F_q)| = vol(P cap K) vol((P cap K)\\K), "
             "N\\G cell volumes";
  return o;
}

Outcome criterion_9(Shared& sh) {
  Outcome o;
  std::vector<std::tuple<TypeParams, TypeParams, long>> cases;
  for (long k : regular_indices(2)) cases.emplace_back(depth_zero(2, k), depth_zero(2, mod_floor(-k, 3), 1, -1), 5);
  for (long ell : {5L, 7L})
    for (long k : regular_indices(3)) cases.emplace_back(depth_zero(3, k), depth_zero(3, mod_floor(-k, 8), 1, -1), ell);
  for (long s : {0L, 1L}) cases.emplace_back(ramified(3, s), ramified(3, s, 1, -1), 5);
  long cells = 0;
  std::set<std::string> factors;
  for (const auto& [a, b, ell] : cases) {
    try {
      EngineOptions eo;
      eo.jobs = sh.jobs;
      const CorollaryReport r = verify_corollary(a, b, ell, 0, eo);
      cells += r.cells_checked;
      factors.insert(to_string(r.reduced_factor) + " mod " + std::to_string(ell));
      if (!r.pass())
        o.fail(label(a, b) + " ell=" + std::to_string(ell) + ": integral " + std::to_string(r.integral_ok) + " commutes " +
               std::to_string(r.commutes_ok) + " match " + std::to_string(r.match));
    } catch (const Error& e) {
      o.fail(label(a, b) + ": " + e.what());
    }
  }
  RunConfig c;
  c.command = "reduce";
  c.q = 2;
  c.ell = 3;
  std::ostringstream out, err;
  const int rc = run_command(c, out, err);
  if (rc != ExitRefused) o.fail("non-banal q=2 ell=3 exited with " + std::to_string(rc));
  o.detail = std::to_string(cases.size()) + " banal pairs, " + std::to_string(cells) + " cell slices commute with reduction; factors {" +
             join(factors) + "}; q=2 ell=3 refused with exit " + std::to_string(rc);
  return o;
}

Outcome criterion_10() {
  Outcome o;
  long count = 0;
  for (auto [p, f] : std::vector<std::pair<long, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto tower = std::make_shared<const FiniteFieldTower>(p, f, std::vector<int>{2});
    auto G = std::make_shared<const MatrixGroup>(tower, 2);
    const long q = tower->q();
    const CycFieldPtr K = CycField::make(lcm_long(p, q * q - 1));
    for (long k = 0; k < q * q - 1; ++k) {
      const RegularCharacter th(tower, 2, k);
      if (!th.is_regular()) continue;
      const CuspidalCharacter chi(G, th, K);
      ++count;
      if (chi.inner_product(chi) != CycNumber(1)) o.fail("q=" + std::to_string(q) + " k=" + std::to_string(k) + ": <chi,chi> != 1");
      if (!chi.unipotent_sum().is_zero()) o.fail("q=" + std::to_string(q) + " k=" + std::to_string(k) + ": N-sum != 0");
      if (chi.degree() != CycNumber(q - 1)) o.fail("q=" + std::to_string(q) + " k=" + std::to_string(k) + ": degree != q-1");
    }
  }
  o.detail = std::to_string(count) + " cuspidal characters of GL_2(F_q), q in {2,3,4,5}: <chi,chi> = 1, N-sum 0, degree q-1";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria 1-10"};
  Shared sh;
  std::vector<int> only;
  bool verbose = false;
  app.add_option("--jobs", sh.jobs, "engine worker threads")->check(CLI::PositiveNumber);
  app.add_option("--only", only, "run only these criteria (6 and 7 also run 1-4)");
  app.add_flag("--verbose", verbose, "print every recorded failure");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"main theorem, depth zero", [&] { return criterion_1(sh); }},
      {"main theorem, twisted", [&] { return criterion_2(sh); }},
      {"main theorem, ramified", [&] { return criterion_3(sh); }},
      {"oracle equivalence", [&] { return criterion_4(sh); }},
      {"Bessel suite", [] { return criterion_5(); }},
      {"support propositions", [&] { return criterion_6(sh); }},
      {"F_i, c_i and coset-volume diagnostics", [&] { return criterion_7(sh); }},
      {"measure consistency", [] { return criterion_8(); }},
      {"l-modular corollary", [&] { return criterion_9(sh); }},
      {"cuspidal character certification", [] { return criterion_10(); }},
  };
  std::set<int> selected(only.begin(), only.end());
  if (selected.count(6) || selected.count(7))
    for (int i : {1, 2, 3, 4}) selected.insert(i);
  const bool all = selected.empty();

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!all && !selected.count(id)) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    const bool show = all || only.empty() || std::count(only.begin(), only.end(), id);
    if (!o.pass) ++failed;
    if (!show) continue;
    char head[96];
    std::snprintf(head, sizeof head, "%s %2d  %-40s (%6.2f s)", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                  seconds_since(t0));
    std::cout << head << "  " << o.detail << "\n";
    const std::size_t shown = verbose ? o.failures.size() : std::min<std::size_t>(o.failures.size(), 3);
    for (std::size_t f = 0; f < shown; ++f) std::cout << "        - " << o.failures[f] << "\n";
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
