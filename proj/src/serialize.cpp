#include "cusp/serialize.hpp"

#include <map>
#include <sstream>

#include "cusp/error.hpp"

namespace cusp {

namespace {

std::vector<Rational> coords(const CycNumber& x, const CycFieldPtr& K) {
  if (!K) return {x.rational_value()};
  if (!x.field()) return CycNumber::rational(K, x.rational_value()).coeffs();
  return x.coeffs();
}

Json coeff_array(const CycNumber& x, const CycFieldPtr& K) {
  Json a = Json::array();
  for (const auto& r : coords(x, K)) a.push_back(to_string(r));
  return a;
}

CycNumber parse_coeffs(const Json& a, const CycFieldPtr& K) {
  std::vector<Rational> c;
  for (const auto& s : a) c.push_back(parse_rational(s.get<std::string>()));
  if (!K) {
    if (c.size() != 1) throw Error(ErrorCode::ConfigError, "rational coefficient must have length 1");
    return CycNumber(c[0]);
  }
  if (static_cast<int>(c.size()) != K->degree()) throw Error(ErrorCode::ConfigError, "coefficient vector has wrong length");
  return CycNumber(K, c);
}

CycFieldPtr field_of(const CycRationalFunction& f) {
  for (const auto* p : {&f.numerator(), &f.denominator()})
    for (const auto& c : p->coeffs())
      if (c.field()) return c.field();
  return nullptr;
}

Json poly_terms(const Poly<CycNumber>& p, int shift, const CycFieldPtr& K) {
  Json out = Json::array();
  for (int d = 0; d <= p.degree(); ++d) {
    const CycNumber c = p.coeff(d);
    if (c.is_zero()) continue;
    out.push_back(Json::array({d + shift, coeff_array(c, K)}));
  }
  return out;
}

}  // namespace

Json to_json(const CycNumber& x) {
  Json j;
  j["N"] = x.modulus();
  j["coeffs"] = coeff_array(x, x.field());
  return j;
}

CycNumber cyc_from_json(const Json& j) {
  const long N = j.at("N").get<long>();
  return parse_coeffs(j.at("coeffs"), N > 1 ? CycField::make(N) : nullptr);
}

Json to_json(const CycRationalFunction& f) {
  const CycFieldPtr K = field_of(f);
  Json j;
  j["N"] = K ? K->modulus() : 1;
  j["num"] = poly_terms(f.numerator(), f.shift(), K);
  j["den"] = poly_terms(f.denominator(), 0, K);
  return j;
}

CycRationalFunction rational_function_from_json(const Json& j) {
  const long N = j.at("N").get<long>();
  const CycFieldPtr K = N > 1 ? CycField::make(N) : nullptr;
  auto read = [&](const Json& terms, int& low) {
    std::map<int, CycNumber> m;
    low = 0;
    bool first = true;
    for (const auto& t : terms) {
      const int d = t.at(0).get<int>();
      m[d] = parse_coeffs(t.at(1), K);
      if (first || d < low) low = d;
      first = false;
    }
    std::vector<CycNumber> v;
    for (const auto& [d, c] : m) {
      v.resize(static_cast<std::size_t>(d - low) + 1, CycNumber(0));
      v[static_cast<std::size_t>(d - low)] = c;
    }
    return Poly<CycNumber>(v);
  };
  int nlow = 0, dlow = 0;
  Poly<CycNumber> num = read(j.at("num"), nlow);
  Poly<CycNumber> den = read(j.at("den"), dlow);
  if (den.is_zero()) throw Error(ErrorCode::ConfigError, "empty denominator");
  return CycRationalFunction(num, den, nlow - dlow);
}

std::string to_string(const CycRationalFunction& f) {
  auto poly_str = [](const Poly<CycNumber>& p, int shift, int* terms) {
    std::ostringstream os;
    *terms = 0;
    for (int d = 0; d <= p.degree(); ++d) {
      CycNumber c = p.coeff(d);
      if (c.is_zero()) continue;
      const bool negative = c.is_rational() && c.rational_value() < 0;
      if (*terms > 0) os << (negative ? " - " : " + ");
      else if (negative) os << "-";
      if (negative) c = -c;
      ++*terms;
      const int e = d + shift;
      const bool bare = (e != 0 && c == CycNumber(1));
      if (!bare) os << (c.is_rational() ? c.to_string() : "(" + c.to_string() + ")");
      if (e != 0) os << (bare ? "" : "*") << "X" << (e != 1 ? "^" + std::to_string(e) : "");
    }
    return *terms == 0 ? std::string("0") : os.str();
  };
  if (f.is_zero()) return "0";
  int nt = 0, dt = 0;
  const std::string n = poly_str(f.numerator(), f.shift(), &nt);
  const std::string d = poly_str(f.denominator(), 0, &dt);
  if (f.denominator().degree() == 0) return n;
  return (nt > 1 ? "(" + n + ")" : n) + "/(" + d + ")";
}

}  // namespace cusp
