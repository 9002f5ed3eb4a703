#include "cusp/lmodular.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "cusp/error.hpp"

namespace cusp {

BanalityVerdict banal_check(const TypeParams& type, long ell) {
  if (!is_prime(ell)) throw Error(ErrorCode::InvalidArgument, "ell must be prime, got " + std::to_string(ell));
  if (ell == type.p) throw Error(ErrorCode::EllEqualsP, "ell equals the residual characteristic " + std::to_string(ell));
  BanalityVerdict v;
  v.ell = ell;
  v.q = type.p;
  v.n = type.n;
  v.e = type.e();
  const long a = mod_floor(type.p - 1, ell);
  long b = 1;
  for (int i = 0; i < v.n / v.e; ++i) b = b * mod_floor(type.p, ell) % ell;
  v.witness = a * mod_floor(b - 1, ell) % ell;
  v.banal = v.witness != 0;
  return v;
}

ResiduePoly reduce_poly(const CycPoly& f, const ResidueFieldPtr& field) {
  std::vector<ResidueScalar> c;
  for (const CycNumber& x : f.coeffs()) c.push_back(reduce_mod_ell(x, field));
  return ResiduePoly(std::move(c));
}

ResidueRationalFunction reduce_rational_function(const CycRationalFunction& f, const ResidueFieldPtr& field) {
  if (f.is_zero()) return ResidueRationalFunction();
  return ResidueRationalFunction(reduce_poly(f.numerator(), field), reduce_poly(f.denominator(), field), f.shift());
}

ResidueEulerFactor reduce_euler_factor(const CycEulerFactor& L, const ResidueFieldPtr& field) {
  return ResidueEulerFactor(reduce_poly(L.inverse(), field));
}

ResidueEulerFactor reduce_euler_factor(const CycEulerFactor& L, long ell, int factor_index) {
  long N = 1;
  for (const CycNumber& x : L.inverse().coeffs()) N = std::lcm(N, x.modulus());
  const CycFieldPtr K = CycField::make(N);
  std::vector<CycNumber> c;
  for (const CycNumber& x : L.inverse().coeffs()) c.push_back(x.field() ? x.embed(K) : x);
  return reduce_euler_factor(CycEulerFactor(CycPoly(std::move(c))), ResidueField::make(N, ell, factor_index));
}

CorollaryReport verify_corollary(const TypeParams& t1, const TypeParams& t2, long ell, int factor_index,
                                 const EngineOptions& opt) {
  CorollaryReport R;
  R.ell = ell;
  R.factor_index = factor_index;
  R.banal1 = banal_check(t1, ell);
  R.banal2 = banal_check(t2, ell);
  if (!R.banal1.banal || !R.banal2.banal)
    throw Error(ErrorCode::NonBanal, "(q-1)(q^{n/e}-1) vanishes mod " + std::to_string(ell));
  if (!is_dual_pair(t1, t2)) throw Error(ErrorCode::InvalidArgument, "the corollary needs a dual pair");

  const CycFieldPtr K = CycField::make(session_modulus({t1, t2}));
  auto T1 = SimpleType::make(t1, K);
  auto T2 = SimpleType::make(t2, K);
  R.residue = ResidueField::make(K->modulus(), ell, factor_index);
  const ResidueFieldPtr& F = R.residue;
  TypeParams a = t1, b = t2;
  a.A = T1->A();
  b.A = T2->A();
  R.L = l_factor(a, b);

  const RankinSelbergEngine engine(WhittakerEvaluator(T1), WhittakerEvaluator(T2), opt);
  const EngineRun run = engine.run();
  R.I = engine.rankin_selberg_I(run);
  const long q = T1->p();

  // (cell, kk) -> sum of reduced terms
  std::map<std::pair<std::size_t, int>, ResidueScalar> cellwise;
  R.integral_ok = true;
  for (const CellTerm& t : run.terms) {
    ++R.terms_checked;
    try {
      const ResidueScalar v = reduce_mod_ell(t.weight, F) * reduce_mod_ell(t.w1, F) * reduce_mod_ell(t.w2, F);
      auto [it, fresh] = cellwise.try_emplace({t.cell, t.kk}, v);
      if (!fresh) it->second += v;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotIntegralAtEll) throw;
      R.integral_ok = false;
      R.notes.push_back(e.what());
    }
  }
  if (!R.integral_ok) return R;

  R.commutes_ok = true;
  std::vector<ResidueScalar> reduced(static_cast<std::size_t>(run.kmax - run.kmin + 1), ResidueScalar(F, FpPoly{}));
  for (std::size_t i = 0; i < run.cells.size(); ++i) {
    const KCell& c = run.cells[i];
    for (const auto& [kk, s] : c.slices) {
      ++R.cells_checked;
      const ResidueScalar whole = reduce_mod_ell(CycNumber(c.volume * qpow(q, kk)) * s, F);
      auto it = cellwise.find({i, kk});
      const ResidueScalar parts = it == cellwise.end() ? ResidueScalar(F, FpPoly{}) : it->second;
      if (whole != parts) {
        R.commutes_ok = false;
        R.notes.push_back("cell " + std::to_string(i) + " slice " + std::to_string(kk) + ": reduction does not commute");
      }
      reduced[static_cast<std::size_t>(kk - run.kmin)] += parts;
    }
  }
  const ResidueRationalFunction reduced_over_K = ResidueRationalFunction::laurent(reduced, run.kmin);
  const CycNumber omega = engine.central_product();
  R.reduced_I = omega.is_zero() ? ResidueRationalFunction()
                                : reduce_rational_function(Z_factor(q, T1->n(), omega), F) * reduced_over_K;
  if (R.reduced_I != reduce_rational_function(R.I, F)) {
    R.commutes_ok = false;
    R.notes.push_back("reduced integral differs from the reduction of the integral");
  }

  R.reduced_L = reduce_euler_factor(R.L, F);
  if (R.I.is_zero() || R.reduced_I.is_zero()) {
    R.notes.push_back("integral vanishes");
    return R;
  }
  const auto norm = R.I.euler_normalize();
  const auto rnorm = R.reduced_I.euler_normalize();
  R.reduced_factor = rnorm.factor;
  R.reduced_scalar = rnorm.scalar;
  const Rational scale = Rational(q - 1) * (qpow(q, T1->n() / T1->e()) - 1);
  const bool mu_ok = norm.scalar.is_rational() && is_signed_power_of(norm.scalar.rational_value() / scale, q);
  if (!mu_ok) R.notes.push_back("scalar is not mu (q-1)(q^{n/e}-1) with mu a power of q");
  R.match = mu_ok && rnorm.monomial == 0 && !rnorm.scalar.is_zero() && rnorm.scalar == reduce_mod_ell(norm.scalar, F) &&
            rnorm.factor == R.reduced_L;
  return R;
}

std::string to_string(const ResiduePoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= f.degree(); ++i) {
    const ResidueScalar& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    bool neg = false;
    std::string s = c.to_string();
    const bool in_prime_field = c.field() && c.coeffs().size() == 1;
    if (in_prime_field && 2 * c.coeffs()[0] > c.field()->ell()) {
      neg = true;
      s = std::to_string(c.field()->ell() - c.coeffs()[0]);
    }
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << (in_prime_field || !c.field() ? s : "(" + s + ")");
      continue;
    }
    if (s != "1") os << (in_prime_field || !c.field() ? s : "(" + s + ")") << "*";
    os << "X" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

std::string to_string(const ResidueEulerFactor& L) { return "1/(" + to_string(L.inverse()) + ")"; }

Json to_json(const BanalityVerdict& v) {
  return Json{{"ell", v.ell}, {"q", v.q}, {"n", v.n}, {"e", v.e}, {"banal", v.banal}, {"witness", v.witness}};
}

Json to_json(const CorollaryReport& r) {
  Json j;
  j["ell"] = r.ell;
  j["banal"] = r.banal1.banal && r.banal2.banal;
  j["reduced_factor"] = to_string(r.reduced_factor);
  j["match"] = r.match;
  j["factor_index"] = r.factor_index;
  if (r.residue) j["residue_field"] = Json{{"N", r.residue->cyclotomic_modulus()}, {"degree", r.residue->degree()}};
  j["witness"] = Json::array({to_json(r.banal1), to_json(r.banal2)});
  j["integral"] = to_string(r.I);
  j["L"] = to_string(r.reduced_L);
  j["reduced_scalar"] = r.reduced_scalar.to_string();
  j["terms_checked"] = r.terms_checked;
  j["cells_checked"] = r.cells_checked;
  j["checks"] = Json{{"integral", r.integral_ok}, {"commutes", r.commutes_ok}, {"match", r.match}};
  j["notes"] = r.notes;
  j["pass"] = r.pass();
  return j;
}

}  // namespace cusp
