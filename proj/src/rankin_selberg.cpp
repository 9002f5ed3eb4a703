#include "cusp/rankin_selberg.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cusp/error.hpp"
#include "cusp/oracle.hpp"

namespace cusp {

namespace {

int effective_sign(const WhittakerEvaluator& W) { return W.type().params().psi_sign * (W.is_dual() ? -1 : 1); }

bool positive_q_power(const Rational& x, long q) { return x > 0 && is_signed_power_of(x, q); }

CycNumber omega_at_uniformizer(const WhittakerEvaluator& W) {
  const SimpleType& T = W.type();
  CycNumber w = T.central_at_uniformizer();
  if (W.is_dual()) w = w.inverse();
  return w * W.twist().pow(T.n());
}

CycNumber omega_on_unit(const WhittakerEvaluator& W, long u) {
  const CycNumber w = W.type().central_on_unit(u);
  return W.is_dual() ? w.inverse() : w;
}

/// j in J whose product k_i j has bottom row exactly `row`.
std::optional<PadicMatrix> lift_to_k_i_J(const SimpleType& T, int i, const std::vector<Rational>& row) {
  const long p = T.p();
  if (T.family() == Family::DepthZero) return complete_bottom_row(row, p);
  if (i == 0) {
    if (vp(row[1], p) != 0) return std::nullopt;
    return PadicMatrix(2, {row[1], 0, row[0], row[1]});
  }
  if (vp(row[0], p) != 0 || vp(row[1], p) < 1) return std::nullopt;
  return PadicMatrix(2, {row[0], row[1], 0, row[0]});
}

}  // namespace

PadicMatrix k_rep(int i) { return i % 2 == 0 ? PadicMatrix::identity(2) : PadicMatrix::from_ints(2, {0, 1, 1, 0}); }

bool row_in_k_i_J(const SimpleType& T, int i, const std::vector<long>& row, int m) {
  (void)m;
  const long p = T.p();
  if (T.family() == Family::DepthZero) return i == 0 && (row[0] % p != 0 || row[1] % p != 0);
  if (i == 0) return row[1] % p != 0;
  return row[0] % p != 0 && row[1] % p == 0;
}

RankinSelbergEngine::RankinSelbergEngine(WhittakerEvaluator W1, WhittakerEvaluator W2, EngineOptions opt)
    : W1_(std::move(W1)), W2_(std::move(W2)), opt_(opt) {
  const TypeParams& a = W1_.type().params();
  const TypeParams& b = W2_.type().params();
  if (a.family != b.family || a.p != b.p || a.n != b.n)
    throw Error(ErrorCode::FamilyMismatch, "the two types must share family, p and n");
  if (W1_.type().field()->modulus() != W2_.type().field()->modulus())
    throw Error(ErrorCode::FieldMismatch, "the two evaluators live in different fields");
  if (effective_sign(W1_) != -effective_sign(W2_))
    throw Error(ErrorCode::InvalidArgument, "W2 must transform under the inverse character of W1");
  if (opt_.window < 0) throw Error(ErrorCode::InvalidArgument, "window must be nonnegative");
  m_ = opt_.level == 0 ? T().level() : opt_.level;
  if (m_ < T().level()) throw Error(ErrorCode::InvalidArgument, "level below the family level");
  if (opt_.jobs < 1) opt_.jobs = 1;
}

CycNumber RankinSelbergEngine::b_k(int k) const {
  const long p = q();
  const Rational w = qpow(p, -(m_ - 1));
  CycNumber s = CycNumber::zero(T().field());
  for (long u : unit_representatives(p, m_)) {
    const PadicMatrix g = PadicMatrix::diag({qpow(p, k) * u, 1});
    const CycNumber a = W1_(g);
    if (!a.is_zero()) s += CycNumber(w) * a * W2_(g);
  }
  return s;
}

CycRationalFunction RankinSelbergEngine::I0() const {
  const int lo = -e() * opt_.window, hi = e() * opt_.window;
  std::vector<CycNumber> c;
  for (int k = lo; k <= hi; ++k) c.push_back(CycNumber(qpow(q(), k)) * b_k(k));
  return CycRationalFunction::laurent(c, lo);
}

void RankinSelbergEngine::run_cell(KCell& cell, std::size_t index, std::vector<CellTerm>& terms,
                                   SupportCheckCounts& checks) const {
  const long p = q();
  const SimpleType& S = T();
  const int step = n() / e();
  const Rational uw = qpow(p, -(m_ - 1));
  const auto units = unit_representatives(p, m_);
  const int lo = -e() * opt_.window, hi = e() * opt_.window;
  for (int kk = lo; kk <= hi; ++kk) {
    CycNumber slice = CycNumber::zero(S.field());
    for (long u : units) {
      const PadicMatrix a = PadicMatrix::diag({qpow(p, kk) * u, 1});
      const PadicMatrix g = a * cell.k;
      const CycNumber w1 = W1_(g);
      const CycNumber w2 = W2_(g);
      for (const CycNumber* w : {&w1, &w2}) {
        if (w->is_zero()) continue;
        ++checks.checked;
        if (kk < 0 || kk % step != 0 || kk / step >= e()) {
          ++checks.slice_violations;
          continue;
        }
        const int i = kk / step;
        if (!row_in_k_i_J(S, i, cell.row, m_)) {
          ++checks.coset_violations;
          continue;
        }
        auto j = lift_to_k_i_J(S, i, {cell.k.at(1, 0), cell.k.at(1, 1)});
        if (!j) {
          ++checks.coset_violations;
          continue;
        }
        const PadicMatrix mprime = cell.k * (k_rep(i) * *j).inverse();
        const PadicMatrix p_i = S.uniformizer_power(i) * k_rep(i).inverse();
        const PadicMatrix pm = a * mprime * p_i.inverse();
        bool ok = pm.at(1, 0) == 0 && pm.at(1, 1) == 1 && pm.at(0, 0) != 0 && vp(pm.at(0, 0), p) == 0;
        if (ok && S.family() == Family::Ramified) ok = vp(pm.at(0, 0) - 1, p) >= 1;
        if (!ok) ++checks.mirabolic_violations;
      }
      if (w1.is_zero() || w2.is_zero()) continue;
      const CycNumber prod = w1 * w2;
      slice += CycNumber(uw) * prod;
      terms.push_back(CellTerm{index, kk, u, cell.volume * uw * qpow(p, kk), w1, w2});
    }
    if (!slice.is_zero()) cell.slices[kk] = slice;
  }
}

EngineRun RankinSelbergEngine::run() const {
  EngineRun r;
  r.level = m_;
  r.kmin = -e() * opt_.window;
  r.kmax = e() * opt_.window;
  const long p = q();
  const MeasureContext mc(p, n());
  const Rational vol = mc.coset_volume(Ambient::PKQuotient, m_);
  for (const auto& row : primitive_rows(p, n(), m_)) {
    KCell c;
    c.row = row;
    c.k = complete_bottom_row({Rational(row[0]), Rational(row[1])}, p);
    c.volume = vol;
    r.cells.push_back(std::move(c));
  }
  const std::size_t N = r.cells.size();
  std::vector<std::vector<CellTerm>> terms(N);
  std::vector<SupportCheckCounts> checks(N);
  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < N; i += static_cast<std::size_t>(opt_.jobs)) run_cell(r.cells[i], i, terms[i], checks[i]);
  };
  if (opt_.jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < opt_.jobs; ++t) pool.emplace_back(work, static_cast<std::size_t>(t));
    for (auto& th : pool) th.join();
  }
  std::vector<CycNumber> coeffs(static_cast<std::size_t>(r.kmax - r.kmin + 1), CycNumber::zero(T().field()));
  for (std::size_t i = 0; i < N; ++i) {
    for (auto& t : terms[i]) r.terms.push_back(std::move(t));
    r.support.checked += checks[i].checked;
    r.support.slice_violations += checks[i].slice_violations;
    r.support.coset_violations += checks[i].coset_violations;
    r.support.mirabolic_violations += checks[i].mirabolic_violations;
    for (const auto& [kk, s] : r.cells[i].slices)
      coeffs[static_cast<std::size_t>(kk - r.kmin)] += CycNumber(r.cells[i].volume * qpow(p, kk)) * s;
  }
  r.over_K = CycRationalFunction::laurent(coeffs, r.kmin);
  return r;
}

CycNumber RankinSelbergEngine::central_product() const {
  for (long u = 1; u < q(); ++u)
    if (omega_on_unit(W1_, u) * omega_on_unit(W2_, u) != CycNumber(1)) return CycNumber::zero(T().field());
  return omega_at_uniformizer(W1_) * omega_at_uniformizer(W2_);
}

CycRationalFunction RankinSelbergEngine::rankin_selberg_I(const EngineRun& r) const {
  const CycNumber omega = central_product();
  if (omega.is_zero()) return CycRationalFunction();
  return Z_factor(q(), n(), omega) * r.over_K;
}

CycRationalFunction RankinSelbergEngine::rankin_selberg_I() const { return rankin_selberg_I(run()); }

CycRationalFunction Z_factor(long q, int n, const CycNumber& omega, const std::string& phi) {
  if (phi != "1_o^n") throw Error(ErrorCode::UnsupportedPhi, "only the indicator of o^n is supported, got " + phi);
  return CycRationalFunction(CycPoly::constant(CycNumber(Rational(q - 1))),
                             CycPoly::constant(CycNumber(1)) - CycPoly::monomial(omega, n));
}

bool is_dual_pair(const TypeParams& t1, const TypeParams& t2) {
  if (t1.family != t2.family || t1.p != t2.p || t1.n != t2.n)
    throw Error(ErrorCode::FamilyMismatch, "types from different families");
  const long p = t1.p;
  if (t1.family == Family::DepthZero) {
    const long M = p * p - 1;
    return mod_floor(t1.theta_index + t2.theta_index, M) == 0 || mod_floor(p * t1.theta_index + t2.theta_index, M) == 0;
  }
  return mod_floor(t1.sigma + t2.sigma, p - 1) == 0;
}

CycEulerFactor l_factor(const TypeParams& t1, const TypeParams& t2) {
  if (!is_dual_pair(t1, t2)) return CycEulerFactor();
  CycNumber a = t1.A * t2.A;
  return CycEulerFactor::geometric(a, t1.n / t1.e());
}

namespace {

/// vol(J^1) as a union of K^1 cosets.
Rational volume_J1(const SimpleType& T) {
  const long p = T.p();
  Descriptor d{Ambient::G, 1, {}};
  if (T.family() == Family::DepthZero) {
    d.reps.push_back(PadicMatrix::identity(2));
  } else {
    for (long c = 0; c < p; ++c) d.reps.push_back(PadicMatrix::from_ints(2, {1, 0, c, 1}));
  }
  return MeasureContext(p, 2).volume(d);
}

}  // namespace

VerificationReport verify_main_theorem(const TypeParams& t1, const TypeParams& t2, const VerifyOptions& opt) {
  VerificationReport R;
  R.type1 = t1;
  R.type2 = t2;
  const CycFieldPtr K = CycField::make(session_modulus({t1, t2}));
  auto T1 = SimpleType::make(t1, K);
  auto T2 = SimpleType::make(t2, K);
  const long q = T1->p();
  const int n = T1->n(), e = T1->e(), step = n / e;
  R.q = q;
  R.n = n;
  R.e = e;
  R.dual_pair = is_dual_pair(t1, t2);
  TypeParams a = t1, b = t2;
  a.A = T1->A();
  b.A = T2->A();
  R.expected = l_factor(a, b);

  const RankinSelbergEngine engine(WhittakerEvaluator(T1), WhittakerEvaluator(T2), opt.engine);
  const EngineRun run = engine.run();
  R.level = run.level;
  R.over_K = run.over_K;
  R.I = engine.rankin_selberg_I(run);
  R.support = run.support;
  R.support_ok = run.support.pass();
  R.bessel_ok = bessel_suite(*T1, K).pass() && bessel_suite(*T2, K).pass();

  if (!R.dual_pair) {
    R.theorem_ok = R.I.is_zero();
    R.f_const_ok = R.c_shape_ok = R.volume_ok = true;
    R.notes.push_back("L = 1: theorem not applicable, integral must vanish");
  } else {
    const CycNumber tau = T1->A() * T2->A();
    const Rational qe = qpow(q, step) - 1;
    const Rational lambda_scale = volume_J1(*T1);
    std::set<std::string> lambdas;
    bool f_ok = true;
    std::vector<Rational> mus, us;
    bool c_ok = true;
    for (int i = 0; i < e; ++i) {
      const int kk = i * step;
      CycNumber ci = CycNumber::zero(K);
      Rational vi = 0;
      for (const KCell& cell : run.cells) {
        const bool inside = row_in_k_i_J(*T1, i, cell.row, run.level);
        if (inside) vi += cell.volume;
        auto it = cell.slices.find(kk);
        const CycNumber s = it == cell.slices.end() ? CycNumber::zero(K) : it->second;
        ci += CycNumber(cell.volume) * s;
        const CycNumber F = CycNumber(lambda_scale) * s / tau.pow(i);
        if (inside == F.is_zero()) f_ok = false;
        if (!F.is_zero()) {
          if (!F.is_rational() || !positive_q_power(F.rational_value(), q)) f_ok = false;
          else lambdas.insert(F.rational_value().get_str());
        }
      }
      R.c.emplace_back(i, ci, qpow(q, kk));
      const CycNumber mu_i = ci * CycNumber(qpow(q, kk) / qe) / tau.pow(i);
      if (!mu_i.is_rational() || !positive_q_power(mu_i.rational_value(), q)) c_ok = false;
      else mus.push_back(mu_i.rational_value());
      us.push_back(vi / (qe * qpow(q, -kk)));
    }
    if (lambdas.size() != 1) f_ok = false;
    if (f_ok) R.lambda_vol = Rational(*lambdas.begin());
    R.f_const_ok = f_ok;
    const auto& num = run.over_K.numerator();
    for (int d = 0; d <= num.degree(); ++d) {
      const int deg = d + run.over_K.shift();
      if (!num.coeff(d).is_zero() && (deg < 0 || deg % step != 0 || deg / step >= e)) c_ok = false;
    }
    if (run.over_K.denominator().degree() != 0) c_ok = false;
    c_ok = c_ok && mus.size() == static_cast<std::size_t>(e) &&
           std::all_of(mus.begin(), mus.end(), [&](const Rational& m) { return m == mus[0]; });
    R.c_shape_ok = c_ok;
    R.volume_ok = std::all_of(us.begin(), us.end(), [&](const Rational& x) { return x == us[0]; }) &&
                  positive_q_power(us[0], q);
    R.u = us[0];
    try {
      const auto norm = R.I.euler_normalize();
      const CycNumber scale = norm.scalar / CycNumber(Rational(q - 1) * qe);
      const bool mu_ok = scale.is_rational() && positive_q_power(scale.rational_value(), q);
      if (mu_ok) R.mu = scale.rational_value();
      R.theorem_ok = mu_ok && norm.monomial == 0 && norm.factor == R.expected;
      if (c_ok && mu_ok && mus[0] != R.mu) {
        R.c_shape_ok = false;
        R.notes.push_back("mu from c_i differs from mu of the integral");
      }
    } catch (const Error& err) {
      R.theorem_ok = false;
      R.notes.push_back(err.what());
    }
  }

  if (opt.oracle_kmax >= 0) {
    R.oracle_checked = true;
    const auto series = R.I.is_zero() ? std::vector<CycNumber>(static_cast<std::size_t>(opt.oracle_kmax + 1), CycNumber(0))
                                      : R.I.series_coefficients(0, opt.oracle_kmax);
    for (int k = 0; k <= opt.oracle_kmax; ++k) {
      const CycNumber o = c_k_bruteforce(engine.W1(), engine.W2(), k, run.level, opt.engine.window);
      if (o != series[static_cast<std::size_t>(k)]) {
        R.oracle_ok = false;
        R.notes.push_back("oracle mismatch at k = " + std::to_string(k));
      }
    }
  }
  return R;
}

Json to_json(const TypeParams& t) {
  Json j;
  j["family"] = to_string(t.family);
  j["p"] = t.p;
  j["n"] = t.n;
  if (t.family == Family::DepthZero)
    j["theta_index"] = t.theta_index;
  else
    j["sigma"] = t.sigma;
  j["A"] = to_json(t.A);
  j["psi_sign"] = t.psi_sign;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["type1"] = to_json(r.type1);
  j["type2"] = to_json(r.type2);
  j["q"] = r.q;
  j["n"] = r.n;
  j["e"] = r.e;
  j["level"] = r.level;
  j["dual_pair"] = r.dual_pair;
  j["I"] = to_json(r.I);
  j["I_text"] = to_string(r.I);
  j["integral_over_K"] = to_string(r.over_K);
  j["expected_L"] = to_string(CycRationalFunction::from_euler(r.expected));
  j["mu"] = r.mu.get_str();
  j["u"] = r.u.get_str();
  j["lambdaVol"] = r.lambda_vol.get_str();
  Json cs = Json::array();
  for (const auto& [i, c, qp] : r.c) cs.push_back({{"i", i}, {"c_i", to_json(c)}, {"q_pow", qp.get_str()}});
  j["c"] = cs;
  j["support"] = {{"checked", r.support.checked},
                  {"slice_violations", r.support.slice_violations},
                  {"coset_violations", r.support.coset_violations},
                  {"mirabolic_violations", r.support.mirabolic_violations}};
  j["checks"] = {{"bessel", r.bessel_ok},          {"support", r.support_ok},    {"F_constant", r.f_const_ok},
                 {"c_shape", r.c_shape_ok},        {"coset_volume", r.volume_ok}, {"theorem", r.theorem_ok},
                 {"oracle_checked", r.oracle_checked}, {"oracle", r.oracle_ok}};
  j["notes"] = r.notes;
  j["pass"] = r.pass();
  return j;
}

std::string c_table_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "i,c_i,q_pow\n";
  for (const auto& [i, c, qp] : r.c) os << i << ',' << c.to_string() << ',' << qp.get_str() << '\n';
  return os.str();
}

}  // namespace cusp
