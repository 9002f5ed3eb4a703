#include "cusp/cli.hpp"

#include <fstream>
#include <sstream>

#include "cusp/lmodular.hpp"
#include "cusp/oracle.hpp"
#include "cusp/rankin_selberg.hpp"

namespace cusp {

namespace {

EngineOptions engine_options(const RunConfig& c) {
  EngineOptions o;
  o.window = c.window;
  o.jobs = c.jobs;
  return o;
}

Json bessel_json(const BesselSuiteResult& r) {
  return Json{{"unit", r.unit_ok},
              {"duality", r.duality_ok},
              {"duality_checked", r.duality_checked},
              {"duality_exhaustive", r.duality_exhaustive},
              {"convolution", r.convolution_ok},
              {"convolution_checked", r.convolution_checked},
              {"convolution_exhaustive", r.convolution_exhaustive},
              {"pass", r.pass()}};
}

std::string matrix_cells(const PadicMatrix& m, const char* sep) {
  std::ostringstream os;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) os << (i + j ? sep : "") << to_string(m.at(i, j));
  return os.str();
}

}  // namespace

int exit_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonBanal:
      return ExitRefused;
    case ErrorCode::NotMonomialMultiple:
    case ErrorCode::NotExpandable:
    case ErrorCode::NotIntegralAtEll:
    case ErrorCode::TooLarge:
    case ErrorCode::NondegeneracyFailure:
    case ErrorCode::DepthExceeded:
    case ErrorCode::NotInU:
    case ErrorCode::NotInJ:
    case ErrorCode::WindowExceeded:
    case ErrorCode::DivisionByZero:
      return ExitFail;
    default:
      return ExitConfig;
  }
}

CommandResult cmd_bessel_table(const RunConfig& c) {
  CommandResult res;
  bool& pass = res.pass;
  const TypeParams t = first_type(c);
  const CycFieldPtr K = CycField::make(session_modulus({t}));
  const auto T = SimpleType::make(t, K);
  const auto Q = T->finite_quotient();
  const BesselSuiteResult checks = bessel_suite(*T, K);
  pass = checks.pass();
  if (!checks.unit_ok) res.failed.push_back("unit");
  if (!checks.duality_ok) res.failed.push_back("duality");
  if (!checks.convolution_ok) res.failed.push_back("convolution");
  if (c.format == "csv") {
    std::ostringstream os;
    os << "a,b,c,d,value\n";
    for (const PadicMatrix& j : Q) os << matrix_cells(j, ",") << "," << T->bessel(0, j).to_string() << "\n";
    res.report = os.str();
    return res;
  }
  Json rows = Json::array();
  for (const PadicMatrix& j : Q) {
    Json m = Json::array();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) m.push_back(to_string(j.at(a, b)));
    const CycNumber v = T->bessel(0, j);
    rows.push_back(Json{{"j", m}, {"value", v.to_string()}, {"exact", to_json(v)}});
  }
  Json out;
  out["config"] = emit(c);
  out["type"] = to_json(t);
  out["level"] = T->level();
  out["rows"] = rows;
  out["checks"] = bessel_json(checks);
  out["pass"] = pass;
  res.report = out.dump(2) + "\n";
  return res;
}

CommandResult cmd_verify(const RunConfig& c) {
  CommandResult res;
  bool& pass = res.pass;
  VerifyOptions o;
  o.engine = engine_options(c);
  o.oracle_kmax = c.oracle_kmax;
  const VerificationReport r = verify_main_theorem(first_type(c), second_type(c), o);
  pass = r.pass();
  const std::pair<bool, const char*> flags[] = {{r.bessel_ok, "bessel"},     {r.support_ok, "support"},
                                                {r.f_const_ok, "f_const"},   {r.c_shape_ok, "c_shape"},
                                                {r.volume_ok, "volume"},     {r.theorem_ok, "theorem"},
                                                {r.oracle_ok, "oracle"}};
  for (const auto& [ok, name] : flags)
    if (!ok) res.failed.push_back(name);
  if (c.format == "csv") {
    res.report = c_table_csv(r);
    return res;
  }
  Json j = to_json(r);
  j["config"] = emit(c);
  res.report = j.dump(2) + "\n";
  return res;
}

CommandResult cmd_reduce(const RunConfig& c) {
  CommandResult res;
  bool& pass = res.pass;
  const CorollaryReport r = verify_corollary(first_type(c), second_type(c), c.ell, c.ideal, engine_options(c));
  pass = r.pass();
  if (!r.integral_ok) res.failed.push_back("integral");
  if (!r.commutes_ok) res.failed.push_back("commutes");
  if (!r.match) res.failed.push_back("match");
  if (c.format == "csv") {
    std::ostringstream os;
    os << "ell,banal,reduced_factor,match\n"
       << r.ell << "," << (r.banal1.banal && r.banal2.banal) << "," << to_string(r.reduced_factor) << "," << r.match
       << "\n";
    res.report = os.str();
    return res;
  }
  Json j = to_json(r);
  j["config"] = emit(c);
  res.report = j.dump(2) + "\n";
  return res;
}

CommandResult cmd_oracle_check(const RunConfig& c) {
  CommandResult res;
  bool& pass = res.pass;
  const TypeParams t1 = first_type(c), t2 = second_type(c);
  const CycFieldPtr K = CycField::make(session_modulus({t1, t2}));
  const RankinSelbergEngine E(WhittakerEvaluator(SimpleType::make(t1, K)), WhittakerEvaluator(SimpleType::make(t2, K)),
                              engine_options(c));
  const CycRationalFunction I = E.rankin_selberg_I();
  const int kmax = std::max(c.oracle_kmax, 0);
  const auto series = I.is_zero() ? std::vector<CycNumber>(static_cast<std::size_t>(kmax) + 1, CycNumber(0))
                                  : I.series_coefficients(0, kmax);
  pass = true;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "k,engine,oracle,match\n";
  for (int k = 0; k <= kmax; ++k) {
    const CycNumber a = series[static_cast<std::size_t>(k)];
    const CycNumber b = c_k_bruteforce(E.W1(), E.W2(), k, E.level(), c.window);
    const bool ok = a == b;
    pass = pass && ok;
    if (!ok) res.failed.push_back("k=" + std::to_string(k));
    rows.push_back(Json{{"k", k}, {"engine", a.to_string()}, {"oracle", b.to_string()}, {"match", ok}});
    csv << k << "," << a.to_string() << "," << b.to_string() << "," << ok << "\n";
  }
  if (c.format == "csv") {
    res.report = csv.str();
    return res;
  }
  Json out;
  out["config"] = emit(c);
  out["I"] = to_string(I);
  out["coefficients"] = rows;
  out["pass"] = pass;
  res.report = out.dump(2) + "\n";
  return res;
}

int run_command(const RunConfig& c, std::ostream& out, std::ostream& err) {
  CommandResult r;
  try {
    validate(c);
    if (c.command == "bessel-table") r = cmd_bessel_table(c);
    else if (c.command == "verify") r = cmd_verify(c);
    else if (c.command == "reduce") r = cmd_reduce(c);
    else r = cmd_oracle_check(c);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_status_for(e.code());
  }
  if (c.out.empty()) {
    out << r.report;
  } else {
    std::ofstream f(c.out);
    if (!f) {
      err << "ConfigError: cannot write " << c.out << "\n";
      return ExitConfig;
    }
    f << r.report;
  }
  if (r.pass) return ExitPass;
  err << c.command << ": verification failed:";
  for (const auto& name : r.failed) err << " " << name;
  err << "\n";
  return ExitFail;
}

}  // namespace cusp
