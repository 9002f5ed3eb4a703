#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cusp/error.hpp"

namespace cusp {

namespace detail {
template <class K>
bool scalar_is_zero(const K& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial in X over a field K, coefficients low to high,
/// never carrying trailing zeros. K needs K(long), ring ops, division and a
/// free is_zero(const K&).
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const K& c) { return Poly(std::vector<K>{c}); }
  /// c * X^k
  static Poly monomial(const K& c, int k) {
    std::vector<K> v(static_cast<std::size_t>(k) + 1, K(0));
    v.back() = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : K(0); }
  const K& lead() const { return c_.back(); }
  /// Largest k with X^k | this (0 for the zero polynomial).
  int low_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!cusp_is_zero(c_[i])) return static_cast<int>(i);
    return 0;
  }
  Poly shift_down(int k) const {
    if (k <= 0) return *this;
    return Poly(std::vector<K>(c_.begin() + std::min<std::ptrdiff_t>(k, static_cast<std::ptrdiff_t>(c_.size())), c_.end()));
  }
  Poly shift_up(int k) const {
    if (k <= 0 || is_zero()) return *this;
    std::vector<K> v(static_cast<std::size_t>(k), K(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (cusp_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!cusp_is_zero(b.c_[j])) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const K& s, const Poly& a) {
    std::vector<K> r = a.c_;
    for (auto& c : r) c *= s;
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<K> r = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<K> q(static_cast<std::size_t>(a.degree() - db + 1), K(0));
    const K inv_lead = K(1) / b.lead();
    for (int i = a.degree(); i >= db; --i) {
      K c = r[static_cast<std::size_t>(i)] * inv_lead;
      q[static_cast<std::size_t>(i - db)] = c;
      if (cusp_is_zero(c)) continue;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.c_[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return (K(1) / lead()) * *this;
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  static bool cusp_is_zero(const K& x) { return detail::scalar_is_zero(x); }
  void trim() {
    while (!c_.empty() && cusp_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

/// 1/Q(X) with Q(0) = 1.
template <class K>
class EulerFactor {
 public:
  EulerFactor() : inverse_(Poly<K>::constant(K(1))) {}
  explicit EulerFactor(Poly<K> inverse) : inverse_(std::move(inverse)) {
    if (inverse_.is_zero() || !(inverse_.coeff(0) == K(1)))
      throw Error(ErrorCode::InvalidArgument, "Euler factor inverse must have constant term 1");
  }
  /// 1 / (1 - a X^k)
  static EulerFactor geometric(const K& a, int k) {
    return EulerFactor(Poly<K>::constant(K(1)) - Poly<K>::monomial(a, k));
  }
  const Poly<K>& inverse() const { return inverse_; }
  bool is_trivial() const { return inverse_.degree() == 0; }
  friend bool operator==(const EulerFactor& a, const EulerFactor& b) { return a.inverse_ == b.inverse_; }

 private:
  Poly<K> inverse_;
};

/// X^shift * A(X) / B(X) with A(0) != 0, B(0) = 1 and gcd(A, B) = 1.
/// The zero function has A = 0, B = 1, shift = 0.
template <class K>
class RationalFunction {
 public:
  RationalFunction() : den_(Poly<K>::constant(K(1))) {}
  RationalFunction(const Poly<K>& num, const Poly<K>& den, int shift = 0) { assign(num, den, shift); }
  static RationalFunction constant(const K& c) { return RationalFunction(Poly<K>::constant(c), Poly<K>::constant(K(1))); }
  /// Laurent polynomial sum_i coeffs[i] X^{low + i}
  static RationalFunction laurent(const std::vector<K>& coeffs, int low) {
    return RationalFunction(Poly<K>(coeffs), Poly<K>::constant(K(1)), low);
  }

  const Poly<K>& numerator() const { return num_; }
  const Poly<K>& denominator() const { return den_; }
  int shift() const { return shift_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const int lo = std::min(f.shift_, g.shift_);
    Poly<K> n = f.num_.shift_up(f.shift_ - lo) * g.den_ + g.num_.shift_up(g.shift_ - lo) * f.den_;
    return RationalFunction(n, f.den_ * g.den_, lo);
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) { return f + (-g); }
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
    if (f.is_zero() || g.is_zero()) return RationalFunction();
    return RationalFunction(f.num_ * g.num_, f.den_ * g.den_, f.shift_ + g.shift_);
  }
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
    if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function division by zero");
    if (f.is_zero()) return RationalFunction();
    return RationalFunction(f.num_ * g.den_, f.den_ * g.num_, f.shift_ - g.shift_);
  }
  friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
    return f.shift_ == g.shift_ && f.num_ == g.num_ && f.den_ == g.den_;
  }
  friend bool operator!=(const RationalFunction& f, const RationalFunction& g) { return !(f == g); }

  /// Laurent coefficients for degrees kmin..kmax of the expansion at X = 0.
  std::vector<K> series_coefficients(int kmin, int kmax) const {
    std::vector<K> out;
    if (kmax < kmin) return out;
    const int upto = kmax - shift_;
    std::vector<K> s;  // power series of A/B
    for (int j = 0; j <= upto; ++j) {
      K c = num_.coeff(j);
      for (int i = 1; i <= std::min(j, den_.degree()); ++i) c -= den_.coeff(i) * s[static_cast<std::size_t>(j - i)];
      s.push_back(c);
    }
    for (int k = kmin; k <= kmax; ++k) {
      const int j = k - shift_;
      out.push_back(j >= 0 ? s[static_cast<std::size_t>(j)] : K(0));
    }
    return out;
  }

  struct Normalized {
    EulerFactor<K> factor;
    K scalar;
    int monomial;
  };

  /// f = scalar * X^monomial / Q(X), Q(0) = 1.
  Normalized euler_normalize() const {
    if (is_zero() || num_.degree() != 0)
      throw Error(ErrorCode::NotMonomialMultiple, "numerator is not a unit times a monomial");
    return Normalized{EulerFactor<K>(den_), num_.coeff(0), shift_};
  }

  static RationalFunction from_euler(const EulerFactor<K>& L) {
    return RationalFunction(Poly<K>::constant(K(1)), L.inverse());
  }

 private:
  void assign(Poly<K> num, Poly<K> den, int shift) {
    if (den.is_zero()) throw Error(ErrorCode::NotExpandable, "zero denominator");
    if (num.is_zero()) {
      num_ = Poly<K>();
      den_ = Poly<K>::constant(K(1));
      shift_ = 0;
      return;
    }
    const int ln = num.low_order();
    const int ld = den.low_order();
    num = num.shift_down(ln);
    den = den.shift_down(ld);
    shift += ln - ld;
    Poly<K> g = Poly<K>::gcd(num, den);
    if (g.degree() > 0) {
      num = Poly<K>::divmod(num, g).first;
      den = Poly<K>::divmod(den, g).first;
    }
    const K inv0 = K(1) / den.coeff(0);
    num_ = inv0 * num;
    den_ = inv0 * den;
    shift_ = shift;
  }

  Poly<K> num_;
  Poly<K> den_;
  int shift_ = 0;
};

}  // namespace cusp
