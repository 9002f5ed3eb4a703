#include "cusp/finite_field.hpp"

#include <string>

#include "cusp/error.hpp"
#include "cusp/rational.hpp"
#include "cusp/residue.hpp"

namespace cusp {

std::shared_ptr<const FiniteField> FiniteField::make(long p, int d) {
  return std::shared_ptr<const FiniteField>(new FiniteField(p, d));
}

FiniteField::FiniteField(long p, int d) : p_(p), d_(d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "field degree must be positive");
  const long size = ipow(p, d);
  if (size > (1L << 22)) throw Error(ErrorCode::TooLarge, "finite field too large for tables");
  size_ = static_cast<int>(size);
  f_ = fp::least_irreducible(d, p);

  const long n = size_ - 1;
  std::vector<long> primes;
  {
    long m = n;
    for (long r = 2; r * r <= m; ++r)
      if (m % r == 0) {
        primes.push_back(r);
        while (m % r == 0) m /= r;
      }
    if (m > 1) primes.push_back(m);
  }
  auto slow_pow = [&](Elem a, long e) {
    Elem r = 1;
    while (e > 0) {
      if (e & 1) r = mul_poly(r, a);
      a = mul_poly(a, a);
      e >>= 1;
    }
    return r;
  };
  for (Elem a = 1; a < size_; ++a) {
    bool ok = true;
    for (long r : primes)
      if (slow_pow(a, n / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen_ = a;
      break;
    }
  }
  exp_.resize(static_cast<std::size_t>(n));
  log_.assign(static_cast<std::size_t>(size_), -1);
  Elem cur = 1;
  for (long k = 0; k < n; ++k) {
    exp_[static_cast<std::size_t>(k)] = cur;
    log_[static_cast<std::size_t>(cur)] = static_cast<int>(k);
    cur = mul_poly(cur, gen_);
  }
}

FiniteField::Elem FiniteField::mul_poly(Elem a, Elem b) const {
  FpPoly x, y;
  for (int i = 0; i < d_; ++i) {
    x.push_back(a % p_);
    a /= static_cast<Elem>(p_);
    y.push_back(b % p_);
    b /= static_cast<Elem>(p_);
  }
  FpPoly r = fp::mulmod(fp::trim(x), fp::trim(y), f_, p_);
  Elem out = 0;
  for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) out = out * static_cast<Elem>(p_) + static_cast<Elem>(r[static_cast<std::size_t>(i)]);
  return out;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (d_ == 1) return static_cast<Elem>((a + b) % p_);
  Elem r = 0, scale = 1;
  for (int i = 0; i < d_; ++i) {
    r += static_cast<Elem>(((a % p_) + (b % p_)) % p_) * scale;
    a /= static_cast<Elem>(p_);
    b /= static_cast<Elem>(p_);
    scale *= static_cast<Elem>(p_);
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  Elem r = 0, scale = 1;
  for (int i = 0; i < d_; ++i) {
    r += static_cast<Elem>((p_ - a % p_) % p_) * scale;
    a /= static_cast<Elem>(p_);
    scale *= static_cast<Elem>(p_);
  }
  return r;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const long n = size_ - 1;
  return exp_[static_cast<std::size_t>((log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)]) % n)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in finite field");
  const long n = size_ - 1;
  return exp_[static_cast<std::size_t>((n - log_[static_cast<std::size_t>(a)]) % n)];
}

FiniteField::Elem FiniteField::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const long long n = size_ - 1;
  long long k = (static_cast<long long>(log_[static_cast<std::size_t>(a)]) * (e % n)) % n;
  if (k < 0) k += n;
  return exp_[static_cast<std::size_t>(k)];
}

FiniteField::Elem FiniteField::exp(long long k) const {
  const long long n = size_ - 1;
  k %= n;
  if (k < 0) k += n;
  return exp_[static_cast<std::size_t>(k)];
}

long FiniteField::log(Elem a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "log of zero");
  return log_[static_cast<std::size_t>(a)];
}

long FiniteField::order(Elem a) const {
  const long n = size_ - 1;
  return n / gcd_long(log(a), n);
}

long FiniteField::trace_to_prime(Elem a) const {
  Elem t = 0, x = a;
  for (int i = 0; i < d_; ++i) {
    t = add(t, x);
    x = frobenius(x);
  }
  return t;  // lies in the prime field, coded as an integer < p
}

FiniteField::Elem FiniteField::from_int(long k) const { return static_cast<Elem>(mod_floor(k, p_)); }

// ---------------------------------------------------------------------------

FiniteFieldTower::FiniteFieldTower(long p, int f, const std::vector<int>& extension_degrees)
    : p_(p), f_(f), base_(FiniteField::make(p, f)) {
  build_ext(1);
  for (int n : extension_degrees) build_ext(n);
}

const FiniteFieldTower::Ext& FiniteFieldTower::ext_data(int n) const {
  auto it = exts_.find(n);
  if (it == exts_.end()) throw Error(ErrorCode::InvalidArgument, "extension degree " + std::to_string(n) + " not configured");
  return it->second;
}

void FiniteFieldTower::build_ext(int n) {
  if (exts_.count(n)) return;
  Ext e;
  e.field = (n == 1) ? base_ : FiniteField::make(p_, f_ * n);
  const FiniteField& E = *e.field;
  // least root of the base defining polynomial in E
  const auto& fb = base_->modulus_poly();
  FiniteField::Elem root = -1;
  for (FiniteField::Elem r = 0; r < E.size() && root < 0; ++r) {
    FiniteField::Elem v = 0;
    for (int i = static_cast<int>(fb.size()) - 1; i >= 0; --i) v = E.add(E.mul(v, r), E.from_int(fb[static_cast<std::size_t>(i)]));
    if (v == 0) root = r;
  }
  if (root < 0) throw Error(ErrorCode::InvalidArgument, "no embedding of base field");
  e.embed.resize(static_cast<std::size_t>(base_->size()));
  for (FiniteField::Elem a = 0; a < base_->size(); ++a) {
    FiniteField::Elem v = 0, t = a, rp = 1;
    for (int i = 0; i < f_; ++i) {
      v = E.add(v, E.mul(E.from_int(t % p_), rp));
      t /= static_cast<FiniteField::Elem>(p_);
      rp = E.mul(rp, root);
    }
    e.embed[static_cast<std::size_t>(a)] = v;
    e.restrict[v] = a;
  }
  exts_.emplace(n, std::move(e));
}

const FiniteFieldPtr& FiniteFieldTower::ext(int n) const { return ext_data(n).field; }

FiniteField::Elem FiniteFieldTower::embed(int n, FiniteField::Elem a) const { return ext_data(n).embed[static_cast<std::size_t>(a)]; }

bool FiniteFieldTower::in_base(int n, FiniteField::Elem x) const { return ext_data(n).restrict.count(x) > 0; }

FiniteField::Elem FiniteFieldTower::restrict(int n, FiniteField::Elem x) const {
  const auto& r = ext_data(n).restrict;
  auto it = r.find(x);
  if (it == r.end()) throw Error(ErrorCode::InvalidArgument, "element not in the base field");
  return it->second;
}

FiniteField::Elem FiniteFieldTower::frobenius_q(int n, FiniteField::Elem x) const { return ext(n)->pow(x, q()); }

FiniteField::Elem FiniteFieldTower::norm(int n, FiniteField::Elem x) const {
  const FiniteField& E = *ext(n);
  FiniteField::Elem r = 1, y = x;
  for (int i = 0; i < n; ++i) {
    r = E.mul(r, y);
    y = frobenius_q(n, y);
  }
  return restrict(n, r);
}

FiniteField::Elem FiniteFieldTower::trace(int n, FiniteField::Elem x) const {
  const FiniteField& E = *ext(n);
  FiniteField::Elem r = 0, y = x;
  for (int i = 0; i < n; ++i) {
    r = E.add(r, y);
    y = frobenius_q(n, y);
  }
  return restrict(n, r);
}

}  // namespace cusp
