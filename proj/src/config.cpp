#include "cusp/config.hpp"

#include <cctype>
#include <numeric>
#include <set>

#include "cusp/error.hpp"

namespace cusp {

namespace {

[[noreturn]] void bad_scalar(const std::string& s, const std::string& why) {
  throw Error(ErrorCode::ConfigError, "cannot parse scalar '" + s + "': " + why);
}

std::string strip(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

long parse_long(const std::string& whole, const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    bad_scalar(whole, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) bad_scalar(whole, "expected an integer, got '" + s + "'");
  return v;
}

CycNumber parse_factor(const std::string& whole, std::string f) {
  f = strip(f);
  bool neg = false;
  while (!f.empty() && f[0] == '-') {
    neg = !neg;
    f = strip(f.substr(1));
  }
  if (f.empty()) bad_scalar(whole, "empty factor");
  CycNumber v;
  if (f.rfind("zeta(", 0) == 0) {
    const auto close = f.find(')');
    if (close == std::string::npos) bad_scalar(whole, "missing ')'");
    const long N = parse_long(whole, strip(f.substr(5, close - 5)));
    if (N < 1) bad_scalar(whole, "zeta(N) needs N >= 1");
    long k = 1;
    const std::string rest = strip(f.substr(close + 1));
    if (!rest.empty()) {
      if (rest[0] != '^') bad_scalar(whole, "expected '^' after zeta(N)");
      k = parse_long(whole, strip(rest.substr(1)));
    }
    v = CycNumber::root(CycField::make(N), k);
  } else {
    for (char ch : f)
      if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/') bad_scalar(whole, "unexpected '" + f + "'");
    Rational r;
    try {
      r = Rational(f);
    } catch (const std::exception&) {
      bad_scalar(whole, "bad rational '" + f + "'");
    }
    if (r.get_den() == 0) bad_scalar(whole, "zero denominator");
    r.canonicalize();
    v = CycNumber(r);
  }
  return neg ? -v : v;
}

CycNumber times(const CycNumber& a, const CycNumber& b) {
  if (!a.field() || !b.field()) return a * b;
  const CycFieldPtr K = CycField::make(std::lcm(a.modulus(), b.modulus()));
  return a.embed(K) * b.embed(K);
}

const std::set<std::string> kCommands = {"bessel-table", "verify", "reduce", "oracle-check"};

}  // namespace

CycNumber parse_scalar(const std::string& s) {
  if (strip(s).empty()) bad_scalar(s, "empty");
  CycNumber acc(1);
  std::size_t start = 0;
  while (true) {
    const auto star = s.find('*', start);
    acc = times(acc, parse_factor(s, s.substr(start, star == std::string::npos ? std::string::npos : star - start)));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return acc;
}

Json emit(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["family"] = c.family;
  j["q"] = c.q;
  j["n"] = c.n;
  j["theta"] = c.theta;
  j["sigma"] = c.sigma;
  if (c.theta2) j["theta2"] = *c.theta2;
  if (c.sigma2) j["sigma2"] = *c.sigma2;
  j["A"] = c.A;
  j["twist"] = c.twist;
  j["ell"] = c.ell;
  j["ideal"] = c.ideal;
  j["window"] = c.window;
  j["jobs"] = c.jobs;
  j["oracle_kmax"] = c.oracle_kmax;
  j["out"] = c.out;
  j["format"] = c.format;
  return j;
}

RunConfig parse_run_config(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ConfigError, "configuration must be a JSON object");
  RunConfig c;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "command") c.command = v.get<std::string>();
      else if (key == "family") c.family = v.get<std::string>();
      else if (key == "q") c.q = v.get<long>();
      else if (key == "n") c.n = v.get<int>();
      else if (key == "theta") c.theta = v.get<long>();
      else if (key == "sigma") c.sigma = v.get<long>();
      else if (key == "theta2") c.theta2 = v.get<long>();
      else if (key == "sigma2") c.sigma2 = v.get<long>();
      else if (key == "A") c.A = v.get<std::string>();
      else if (key == "twist") c.twist = v.get<std::string>();
      else if (key == "ell") c.ell = v.get<long>();
      else if (key == "ideal") c.ideal = v.get<int>();
      else if (key == "window") c.window = v.get<int>();
      else if (key == "jobs") c.jobs = v.get<int>();
      else if (key == "oracle_kmax") c.oracle_kmax = v.get<int>();
      else if (key == "out") c.out = v.get<std::string>();
      else if (key == "format") c.format = v.get<std::string>();
      else throw Error(ErrorCode::ConfigError, "unknown key '" + key + "'");
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ConfigError, e.what());
  }
  return c;
}

void validate(const RunConfig& c) {
  if (!kCommands.count(c.command)) throw Error(ErrorCode::ConfigError, "unknown command '" + c.command + "'");
  (void)family_from_string(c.family);
  if (c.format != "json" && c.format != "csv") throw Error(ErrorCode::ConfigError, "format must be json or csv");
  if (c.q < 2) throw Error(ErrorCode::ConfigError, "q must be at least 2");
  if (c.n < 1) throw Error(ErrorCode::ConfigError, "n must be positive");
  if (c.window < 0) throw Error(ErrorCode::ConfigError, "window must be non-negative");
  if (c.jobs < 1) throw Error(ErrorCode::ConfigError, "jobs must be positive");
  if (c.ideal < 0) throw Error(ErrorCode::ConfigError, "ideal index must be non-negative");
  if (c.command == "reduce" && c.ell < 2) throw Error(ErrorCode::ConfigError, "reduce needs --ell");
  (void)parse_scalar(c.A);
  (void)parse_scalar(c.twist);
}

TypeParams first_type(const RunConfig& c) {
  TypeParams t;
  t.family = family_from_string(c.family);
  t.p = c.q;
  t.n = c.n;
  t.theta_index = c.theta;
  t.sigma = c.sigma;
  t.A = parse_scalar(c.A);
  t.psi_sign = 1;
  return t;
}

TypeParams second_type(const RunConfig& c) {
  const TypeParams t = first_type(c);
  TypeParams d = t.dual();
  if (c.theta2) d.theta_index = *c.theta2;
  if (c.sigma2) d.sigma = *c.sigma2;
  const CycNumber chi = parse_scalar(c.twist);
  if (d.A.field() && chi.field() && d.A.modulus() != chi.modulus()) {
    const CycFieldPtr K = CycField::make(std::lcm(d.A.modulus(), chi.modulus()));
    d.A = d.A.embed(K);
    return d.twisted(chi.embed(K));
  }
  return d.twisted(chi);
}

}  // namespace cusp
