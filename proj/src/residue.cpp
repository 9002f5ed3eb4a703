#include "cusp/residue.hpp"

#include <algorithm>
#include <sstream>

#include "cusp/error.hpp"

namespace cusp {

namespace fp {

FpPoly trim(FpPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

long inv(long a, long ell) {
  long t = 0, nt = 1, r = ell, nr = mod_floor(a, ell);
  while (nr != 0) {
    long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw Error(ErrorCode::DivisionByZero, "not invertible mod " + std::to_string(ell));
  return mod_floor(t, ell);
}

FpPoly mul(const FpPoly& a, const FpPoly& b, long ell) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % ell;
  }
  return trim(r);
}

FpPoly mod(FpPoly a, const FpPoly& f, long ell) {
  a = trim(std::move(a));
  const std::size_t df = f.size() - 1;
  const long il = inv(f.back(), ell);
  while (a.size() > df) {
    long c = a.back() * il % ell;
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) a[shift + j] = mod_floor(a[shift + j] - c * f[j], ell);
    a = trim(std::move(a));
  }
  return a;
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, long ell) { return mod(mul(a, b, ell), f, ell); }

FpPoly powmod(FpPoly a, unsigned long long e, const FpPoly& f, long ell) {
  FpPoly r = {1};
  a = mod(std::move(a), f, ell);
  while (e > 0) {
    if (e & 1ULL) r = mulmod(r, a, f, ell);
    e >>= 1;
    if (e) a = mulmod(a, a, f, ell);
  }
  return mod(r, f, ell);
}

FpPoly gcd(FpPoly a, FpPoly b, long ell) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    FpPoly r = mod(a, b, ell);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long il = inv(a.back(), ell);
    for (auto& c : a) c = c * il % ell;
  }
  return a;
}

namespace {
std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned long long upow(long b, int e) {
  unsigned long long r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<unsigned long long>(b);
  return r;
}

FpPoly x_minus(const FpPoly& a, long ell) {
  FpPoly r = a;
  if (r.size() < 2) r.resize(2, 0);
  r[1] = mod_floor(r[1] - 1, ell);
  return trim(r);
}
}  // namespace

bool is_irreducible(const FpPoly& f, long ell) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  const FpPoly x = {0, 1};
  for (long r : prime_factors(d)) {
    FpPoly h = powmod(x, upow(ell, d / static_cast<int>(r)), f, ell);
    FpPoly g = gcd(f, x_minus(h, ell), ell);
    if (g.size() != 1) return false;
  }
  FpPoly h = powmod(x, upow(ell, d), f, ell);
  return trim(x_minus(h, ell)).empty();
}

FpPoly least_irreducible(int d, long ell) {
  const unsigned long long total = upow(ell, d);
  for (unsigned long long idx = 0; idx < total; ++idx) {
    // c_0 is the most significant digit of idx
    FpPoly f(static_cast<std::size_t>(d) + 1, 0);
    unsigned long long t = idx;
    for (int i = d - 1; i >= 0; --i) {
      f[static_cast<std::size_t>(i)] = static_cast<long>(t % static_cast<unsigned long long>(ell));
      t /= static_cast<unsigned long long>(ell);
    }
    f[static_cast<std::size_t>(d)] = 1;
    if (is_irreducible(f, ell)) return f;
  }
  throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

}  // namespace fp

long multiplicative_order(long a, long m) {
  if (m == 1) return 1;
  long x = mod_floor(a, m);
  long k = 1;
  long cur = x;
  while (cur != 1) {
    cur = cur * x % m;
    ++k;
    if (k > m) throw Error(ErrorCode::InvalidArgument, "element not invertible");
  }
  return k;
}

std::vector<FpPoly> cyclotomic_factors_mod(long N, long ell) {
  long Np = N;
  while (Np % ell == 0) Np /= ell;
  const int d = static_cast<int>(multiplicative_order(ell, Np));
  // GF(ell^d) = F_ell[y]/(g)
  const FpPoly g = fp::least_irreducible(d, ell);
  unsigned long long size = 1;
  for (int i = 0; i < d; ++i) size *= static_cast<unsigned long long>(ell);
  const unsigned long long cofactor = (size - 1) / static_cast<unsigned long long>(Np);
  std::vector<long> primes;
  {
    long n = Np;
    for (long p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        primes.push_back(p);
        while (n % p == 0) n /= p;
      }
    if (n > 1) primes.push_back(n);
  }
  FpPoly omega;
  for (unsigned long long idx = 1; idx < size && omega.empty(); ++idx) {
    FpPoly x(static_cast<std::size_t>(d), 0);
    unsigned long long t = idx;
    for (int i = d - 1; i >= 0; --i) {
      x[static_cast<std::size_t>(i)] = static_cast<long>(t % static_cast<unsigned long long>(ell));
      t /= static_cast<unsigned long long>(ell);
    }
    FpPoly y = fp::powmod(fp::trim(x), cofactor, g, ell);
    bool primitive = true;
    for (long r : primes) {
      FpPoly z = fp::powmod(y, static_cast<unsigned long long>(Np / r), g, ell);
      if (z == FpPoly{1}) primitive = false;
    }
    if (primitive) omega = y;
  }
  if (omega.empty()) omega = {1};  // Np == 1

  std::vector<FpPoly> factors;
  std::vector<bool> seen(static_cast<std::size_t>(Np), false);
  for (long k = 0; k < Np; ++k) {
    if (gcd_long(k, Np) != 1 || seen[static_cast<std::size_t>(k)]) continue;
    if (Np == 1 && k != 0) continue;
    // product over the Frobenius orbit of k, coefficients in GF(ell^d)
    std::vector<FpPoly> prod = {FpPoly{1}};
    long e = k;
    do {
      seen[static_cast<std::size_t>(e)] = true;
      FpPoly root = fp::powmod(omega, static_cast<unsigned long long>(e), g, ell);
      FpPoly neg_root;
      for (long c : root) neg_root.push_back(mod_floor(-c, ell));
      std::vector<FpPoly> next(prod.size() + 1);
      for (std::size_t i = 0; i < prod.size(); ++i) {
        next[i + 1] = fp::trim(next[i + 1]);
        // next[i+1] += prod[i]
        FpPoly s = next[i + 1];
        if (s.size() < prod[i].size()) s.resize(prod[i].size(), 0);
        for (std::size_t j = 0; j < prod[i].size(); ++j) s[j] = (s[j] + prod[i][j]) % ell;
        next[i + 1] = fp::trim(s);
        // next[i] += -root * prod[i]
        FpPoly m = fp::mulmod(neg_root, prod[i], g, ell);
        FpPoly t = next[i];
        if (t.size() < m.size()) t.resize(m.size(), 0);
        for (std::size_t j = 0; j < m.size(); ++j) t[j] = (t[j] + m[j]) % ell;
        next[i] = fp::trim(t);
      }
      prod = std::move(next);
      e = e * ell % Np;
    } while (e != k);
    FpPoly f;
    for (const auto& c : prod) {
      if (c.size() > 1) throw Error(ErrorCode::InvalidArgument, "minimal polynomial not over F_ell");
      f.push_back(c.empty() ? 0 : c[0]);
    }
    factors.push_back(f);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const ResidueField> ResidueField::make(long N, long ell, int factor_index) {
  auto factors = cyclotomic_factors_mod(N, ell);
  if (factor_index < 0 || factor_index >= static_cast<int>(factors.size()))
    throw Error(ErrorCode::InvalidArgument, "factor index out of range (" + std::to_string(factors.size()) + " factors)");
  return std::shared_ptr<const ResidueField>(new ResidueField(N, ell, factor_index, factors[static_cast<std::size_t>(factor_index)]));
}

ResidueField::ResidueField(long N, long ell, int index, FpPoly f) : N_(N), ell_(ell), index_(index), f_(std::move(f)) {
  powers_.reserve(static_cast<std::size_t>(N));
  FpPoly cur = fp::mod({1}, f_, ell_);
  for (long j = 0; j < N; ++j) {
    powers_.push_back(cur);
    cur = fp::mulmod(cur, {0, 1}, f_, ell_);
  }
}

const FpPoly& ResidueField::power(long j) const { return powers_[static_cast<std::size_t>(mod_floor(j, N_))]; }

ResidueScalar::ResidueScalar(ResidueFieldPtr field, FpPoly coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_) c = mod_floor(c, field_->ell());
  c_ = fp::mod(std::move(c_), field_->modulus_poly(), field_->ell());
}

void ResidueScalar::adopt(const ResidueFieldPtr& f) {
  if (field_ || !f) return;
  field_ = f;
  c_ = fp::trim({mod_floor(int_, f->ell())});
  int_ = 0;
}

bool ResidueScalar::is_zero() const { return field_ ? c_.empty() : int_ == 0; }

ResidueScalar& ResidueScalar::operator+=(const ResidueScalar& o) {
  if (field_ && o.field_ && field_ != o.field_ && field_->modulus_poly() != o.field_->modulus_poly())
    throw Error(ErrorCode::FieldMismatch, "different residue fields");
  adopt(o.field_);
  if (!field_) {
    int_ += o.int_;
    return *this;
  }
  ResidueScalar other = o;
  other.adopt(field_);
  const long ell = field_->ell();
  if (c_.size() < other.c_.size()) c_.resize(other.c_.size(), 0);
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] = (c_[i] + other.c_[i]) % ell;
  c_ = fp::trim(std::move(c_));
  return *this;
}

ResidueScalar ResidueScalar::operator-() const {
  ResidueScalar r = *this;
  if (!r.field_) {
    r.int_ = -r.int_;
  } else {
    for (auto& c : r.c_) c = mod_floor(-c, field_->ell());
  }
  return r;
}

ResidueScalar& ResidueScalar::operator-=(const ResidueScalar& o) { return *this += -o; }

ResidueScalar& ResidueScalar::operator*=(const ResidueScalar& o) {
  adopt(o.field_);
  if (!field_) {
    int_ *= o.int_;
    return *this;
  }
  ResidueScalar other = o;
  other.adopt(field_);
  c_ = fp::mulmod(c_, other.c_, field_->modulus_poly(), field_->ell());
  return *this;
}

ResidueScalar ResidueScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero residue");
  if (!field_) {
    if (int_ == 1 || int_ == -1) return *this;
    throw Error(ErrorCode::InvalidArgument, "field-less residue has no inverse");
  }
  unsigned long long size = 1;
  for (int i = 0; i < field_->degree(); ++i) size *= static_cast<unsigned long long>(field_->ell());
  return ResidueScalar(field_, fp::powmod(c_, size - 2, field_->modulus_poly(), field_->ell()));
}

ResidueScalar& ResidueScalar::operator/=(const ResidueScalar& o) {
  ResidueScalar other = o;
  other.adopt(field_);
  adopt(other.field_);
  return *this *= other.inverse();
}

bool operator==(const ResidueScalar& a, const ResidueScalar& b) {
  ResidueScalar x = a, y = b;
  x.adopt(y.field_);
  y.adopt(x.field_);
  if (!x.field_) return x.int_ == y.int_;
  return x.c_ == y.c_;
}

std::string ResidueScalar::to_string() const {
  if (!field_) return std::to_string(int_);
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) os << (c_[i] != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

ResidueScalar reduce_mod_ell(const Rational& x, const ResidueFieldPtr& field) {
  const long ell = field->ell();
  if (mpz_divisible_ui_p(Integer(x.get_den()).get_mpz_t(), static_cast<unsigned long>(ell)))
    throw Error(ErrorCode::NotIntegralAtEll, to_string(x) + " is not integral at " + std::to_string(ell));
  return ResidueScalar(field, FpPoly{residue_mod(x, ell)});
}

ResidueScalar reduce_mod_ell(const CycNumber& x, const ResidueFieldPtr& field) {
  if (!x.field()) return reduce_mod_ell(x.rational_value(), field);
  if (x.modulus() != field->cyclotomic_modulus())
    throw Error(ErrorCode::FieldMismatch, "residue field built for a different cyclotomic modulus");
  const long ell = field->ell();
  FpPoly acc;
  const auto& cs = x.coeffs();
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j] == 0) continue;
    if (mpz_divisible_ui_p(Integer(cs[j].get_den()).get_mpz_t(), static_cast<unsigned long>(ell)))
      throw Error(ErrorCode::NotIntegralAtEll, x.to_string() + " is not integral at " + std::to_string(ell));
    const long r = residue_mod(cs[j], ell);
    const FpPoly& pw = field->power(static_cast<long>(j));
    if (acc.size() < pw.size()) acc.resize(pw.size(), 0);
    for (std::size_t i = 0; i < pw.size(); ++i) acc[i] = (acc[i] + r * pw[i]) % ell;
  }
  return ResidueScalar(field, fp::trim(acc));
}

}  // namespace cusp
