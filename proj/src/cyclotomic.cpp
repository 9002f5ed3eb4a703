#include "cusp/cyclotomic.hpp"

#include <numeric>
#include <sstream>

#include "cusp/error.hpp"

namespace cusp {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using IPoly = std::vector<long>;

// Exact division of integer polynomials, divisor monic.
IPoly divide_exact(IPoly num, const IPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// r = a mod b over Q, b nonzero; q returned through quot.
QPoly poly_divmod(QPoly a, const QPoly& b, QPoly& quot) {
  trim(a);
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  return a;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

std::vector<long> cyclotomic_poly(long n) {
  // x^n - 1 divided by Phi_d for all proper divisors d.
  IPoly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = divide_exact(num, cyclotomic_poly(d));
  }
  return num;
}

std::shared_ptr<const CycField> CycField::make(long N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic modulus must be positive");
  return std::shared_ptr<const CycField>(new CycField(N));
}

CycField::CycField(long N) : N_(N), phi_(static_cast<int>(euler_phi(N))), phi_poly_(cyclotomic_poly(N)) {
  powers_.resize(static_cast<std::size_t>(N));
  std::vector<long> cur(static_cast<std::size_t>(phi_), 0);
  cur[0] = 1;
  for (long j = 0; j < N; ++j) {
    auto& sparse = powers_[static_cast<std::size_t>(j)];
    for (int i = 0; i < phi_; ++i)
      if (cur[static_cast<std::size_t>(i)] != 0) sparse.emplace_back(i, cur[static_cast<std::size_t>(i)]);
    // multiply by x and reduce modulo Phi_N
    long top = cur[static_cast<std::size_t>(phi_ - 1)];
    for (int i = phi_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi_; ++i) cur[static_cast<std::size_t>(i)] -= top * phi_poly_[static_cast<std::size_t>(i)];
  }
}

const std::vector<std::pair<int, long>>& CycField::power(long j) const {
  return powers_[static_cast<std::size_t>(mod_floor(j, N_))];
}

// ---------------------------------------------------------------------------

CycNumber::CycNumber(const Rational& r) : r_(r) {}

CycNumber::CycNumber(CycFieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != field_->degree())
    throw Error(ErrorCode::InvalidArgument, "coefficient vector length must equal phi(N)");
}

CycNumber CycNumber::zero(const CycFieldPtr& field) {
  return CycNumber(field, std::vector<Rational>(static_cast<std::size_t>(field->degree()), Rational(0)));
}

CycNumber CycNumber::one(const CycFieldPtr& field) { return rational(field, 1); }

CycNumber CycNumber::rational(const CycFieldPtr& field, const Rational& r) {
  CycNumber x = zero(field);
  x.c_[0] = r;
  return x;
}

CycNumber CycNumber::root(const CycFieldPtr& field, long k) {
  CycNumber x = zero(field);
  x.add_root(k);
  return x;
}

void CycNumber::adopt(const CycFieldPtr& f) {
  if (field_ || !f) return;
  field_ = f;
  c_.assign(static_cast<std::size_t>(f->degree()), Rational(0));
  c_[0] = r_;
  r_ = 0;
}

void CycNumber::check_compatible(const CycNumber& o) const {
  if (field_ && o.field_ && field_->modulus() != o.field_->modulus())
    throw Error(ErrorCode::FieldMismatch,
                "Q(zeta_" + std::to_string(field_->modulus()) + ") vs Q(zeta_" + std::to_string(o.field_->modulus()) + ")");
}

bool CycNumber::is_zero() const {
  if (!field_) return r_ == 0;
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  if (!field_) return true;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycNumber::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "not a rational: " + to_string());
  return field_ ? c_[0] : r_;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  check_compatible(o);
  adopt(o.field_);
  if (!field_) {
    r_ += o.r_;
  } else if (!o.field_) {
    c_[0] += o.r_;
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (o.c_[i] != 0) c_[i] += o.c_[i];
  }
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

void CycNumber::add_root(long k, const Rational& factor) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "add_root needs a field");
  for (const auto& [i, c] : field_->power(k)) c_[static_cast<std::size_t>(i)] += factor * c;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  check_compatible(o);
  if (!o.field_) {
    if (!field_) {
      r_ *= o.r_;
    } else {
      for (auto& c : c_) c *= o.r_;
    }
    return *this;
  }
  if (!field_) {
    Rational s = r_;
    *this = o;
    for (auto& c : c_) c *= s;
    return *this;
  }
  const int phi = field_->degree();
  std::vector<int> nza, nzb;
  for (int i = 0; i < phi; ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) nza.push_back(i);
    if (o.c_[static_cast<std::size_t>(i)] != 0) nzb.push_back(i);
  }
  std::vector<Rational> prod(static_cast<std::size_t>(2 * phi), Rational(0));
  for (int i : nza)
    for (int j : nzb) prod[static_cast<std::size_t>(i + j)] += c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
  std::vector<Rational> out(static_cast<std::size_t>(phi), Rational(0));
  for (int k = 0; k < 2 * phi; ++k) {
    const Rational& v = prod[static_cast<std::size_t>(k)];
    if (v == 0) continue;
    if (k < phi) {
      out[static_cast<std::size_t>(k)] += v;
    } else {
      for (const auto& [i, c] : field_->power(k)) out[static_cast<std::size_t>(i)] += v * c;
    }
  }
  c_ = std::move(out);
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(zeta_N)");
  if (!field_) return CycNumber(Rational(1) / r_);
  // Extended Euclid: s*a + t*Phi = 1, keep only s.
  QPoly a(c_.begin(), c_.end());
  trim(a);
  QPoly m;
  for (long c : field_->cyclotomic_polynomial()) m.emplace_back(c);
  QPoly r0 = m, r1 = a;
  QPoly s0 = {}, s1 = {Rational(1)};
  while (!r1.empty() && !(r1.size() == 1)) {
    QPoly q;
    QPoly r2 = poly_divmod(r0, r1, q);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Phi_N is irreducible
  Rational inv_c = Rational(1) / r1[0];
  QPoly quot;
  QPoly s = poly_divmod(s1, m, quot);
  std::vector<Rational> out(static_cast<std::size_t>(field_->degree()), Rational(0));
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] * inv_c;
  return CycNumber(field_, std::move(out));
}

CycNumber& CycNumber::operator/=(const CycNumber& o) { return *this *= o.inverse(); }

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  if (!r.field_) {
    r.r_ = -r.r_;
  } else {
    for (auto& c : r.c_) c = -c;
  }
  return r;
}

CycNumber CycNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNumber result = field_ ? one(field_) : CycNumber(1);
  CycNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycNumber CycNumber::galois(long a) const {
  if (!field_) return *this;
  const long N = field_->modulus();
  if (gcd_long(mod_floor(a, N), N) != 1 && N > 1)
    throw Error(ErrorCode::InvalidArgument, "Galois exponent not coprime to N");
  CycNumber r = zero(field_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) r.add_root(a * static_cast<long>(i), c_[i]);
  return r;
}

CycNumber CycNumber::embed(const CycFieldPtr& target) const {
  if (!field_) return CycNumber::rational(target, r_);
  const long N = field_->modulus();
  const long M = target->modulus();
  if (M % N != 0)
    throw Error(ErrorCode::FieldMismatch, "cannot embed Q(zeta_" + std::to_string(N) + ") into Q(zeta_" + std::to_string(M) + ")");
  CycNumber r = zero(target);
  const long step = M / N;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) r.add_root(step * static_cast<long>(i), c_[i]);
  return r;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  a.check_compatible(b);
  if (!a.field_ && !b.field_) return a.r_ == b.r_;
  if (!a.field_ || !b.field_) {
    const CycNumber& f = a.field_ ? a : b;
    const CycNumber& r = a.field_ ? b : a;
    return f.is_rational() && f.c_[0] == r.r_;
  }
  return a.c_ == b.c_;
}

std::string CycNumber::to_string() const {
  if (!field_) return cusp::to_string(r_);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << cusp::to_string(mag);
    } else {
      if (mag != 1) os << cusp::to_string(mag) << "*";
      os << "z" << field_->modulus();
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace cusp
