#include "cusp/rational.hpp"

#include "cusp/error.hpp"

namespace cusp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotMonomialMultiple: return "NotMonomialMultiple";
    case ErrorCode::NotExpandable: return "NotExpandable";
    case ErrorCode::NotIntegralAtEll: return "NotIntegralAtEll";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::EvenResidualCharacteristic: return "EvenResidualCharacteristic";
    case ErrorCode::NondegeneracyFailure: return "NondegeneracyFailure";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::UnsupportedDescriptor: return "UnsupportedDescriptor";
    case ErrorCode::NotInU: return "NotInU";
    case ErrorCode::NotInJ: return "NotInJ";
    case ErrorCode::WindowExceeded: return "WindowExceeded";
    case ErrorCode::UnsupportedPhi: return "UnsupportedPhi";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::EllEqualsP: return "EllEqualsP";
    case ErrorCode::NonBanal: return "NonBanal";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

int valuation(const Integer& x, long p) {
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  Integer t = abs(x);
  int v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

int valuation(const Rational& x, long p) {
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error(ErrorCode::InvalidArgument, "bad rational '" + s + "'");
  r.canonicalize();
  if (r.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  return r;
}

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long residue_mod(const Rational& x, long m) {
  if (mpz_cmp_ui(x.get_den_mpz_t(), 1) == 0 && mpz_fits_slong_p(x.get_num_mpz_t())) {
    const long r = mpz_get_si(x.get_num_mpz_t()) % m;
    return r < 0 ? r + m : r;
  }
  Integer mm(m);
  Integer num = x.get_num() % mm;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), Integer(x.get_den()).get_mpz_t(), mm.get_mpz_t()) == 0) {
    throw Error(ErrorCode::NotIntegralAtEll, "denominator not invertible modulo " + std::to_string(m));
  }
  Integer r = (num * inv) % mm;
  if (r < 0) r += mm;
  return r.get_si();
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Rational qpow(long base, int exp) {
  Integer b(base), r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp < 0 ? -exp : exp));
  return exp < 0 ? Rational(Integer(1), r) : Rational(r);
}

bool is_signed_power_of(const Rational& x, long q, int* exponent) {
  if (x == 0) return false;
  Integer num = abs(x.get_num());
  Integer den = x.get_den();
  int vn = 0, vd = 0;
  while (num > 1) {
    if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(q))) return false;
    num /= q;
    ++vn;
  }
  while (den > 1) {
    if (!mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(q))) return false;
    den /= q;
    ++vd;
  }
  if (exponent) *exponent = vn - vd;
  return true;
}

}  // namespace cusp
