#include "cusp/padic.hpp"

#include <sstream>

#include "cusp/error.hpp"

namespace cusp {

int vp(const PadicScalar& x, long p) { return x == 0 ? INT_MAX : valuation(x, p); }

Rational padic_abs(const PadicScalar& x, long p) { return x == 0 ? Rational(0) : qpow(p, -valuation(x, p)); }

long residue_mod_power(const PadicScalar& x, long p, int m) {
  const long pm = ipow(p, m);
  if (mpz_cmp_ui(x.get_den_mpz_t(), 1) != 0 && valuation(x, p) < 0) throw Error(ErrorCode::InvalidArgument, "residue of a non-integral p-adic number");
  return residue_mod(x, pm);
}

CycNumber theta_eval(const PadicScalar& x, long p, int cap, const CycFieldPtr& K) {
  if (x == 0) return CycNumber(1);
  const int v = valuation(x, p);
  if (v >= 1) return CycNumber(1);
  const int m = -v < 0 ? 0 : -v;
  if (m > cap) throw Error(ErrorCode::DepthExceeded, "theta argument " + to_string(x) + " beyond depth " + std::to_string(cap));
  const long mod = ipow(p, m + 1);
  if (!K || K->modulus() % mod != 0) throw Error(ErrorCode::FieldMismatch, "theta needs zeta_" + std::to_string(mod));
  const long r = residue_mod(x * Rational(ipow(p, m)), mod);
  return CycNumber::root(K, r * (K->modulus() / mod));
}

// ---------------------------------------------------------------------------

PadicMatrix::PadicMatrix(int n, std::vector<Rational> entries) : n_(n), e_(std::move(entries)) {
  if (static_cast<int>(e_.size()) != n * n) throw Error(ErrorCode::InvalidArgument, "wrong number of matrix entries");
}

PadicMatrix PadicMatrix::identity(int n) {
  std::vector<Rational> e(static_cast<std::size_t>(n * n), Rational(0));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i * n + i)] = 1;
  return PadicMatrix(n, e);
}

PadicMatrix PadicMatrix::diag(const std::vector<Rational>& d) {
  const int n = static_cast<int>(d.size());
  PadicMatrix m = identity(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

PadicMatrix PadicMatrix::from_ints(int n, const std::vector<long>& entries) {
  std::vector<Rational> e;
  e.reserve(entries.size());
  for (long x : entries) e.emplace_back(x);
  return PadicMatrix(n, std::move(e));
}

Rational PadicMatrix::det() const {
  if (n_ == 1) return e_[0];
  if (n_ == 2) return e_[0] * e_[3] - e_[1] * e_[2];
  // Gaussian elimination
  std::vector<Rational> a = e_;
  Rational d = 1;
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r)
      if (a[static_cast<std::size_t>(r * n_ + c)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n_; ++j) std::swap(a[static_cast<std::size_t>(piv * n_ + j)], a[static_cast<std::size_t>(c * n_ + j)]);
      d = -d;
    }
    const Rational pv = a[static_cast<std::size_t>(c * n_ + c)];
    d *= pv;
    for (int r = c + 1; r < n_; ++r) {
      const Rational f = a[static_cast<std::size_t>(r * n_ + c)] / pv;
      if (f == 0) continue;
      for (int j = c; j < n_; ++j) a[static_cast<std::size_t>(r * n_ + j)] -= f * a[static_cast<std::size_t>(c * n_ + j)];
    }
  }
  return d;
}

PadicMatrix PadicMatrix::inverse() const {
  if (n_ == 2) {
    const Rational d = det();
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "singular matrix");
    return PadicMatrix(2, {e_[3] / d, -e_[1] / d, -e_[2] / d, e_[0] / d});
  }
  std::vector<Rational> a = e_;
  PadicMatrix inv = identity(n_);
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r)
      if (a[static_cast<std::size_t>(r * n_ + c)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error(ErrorCode::DivisionByZero, "singular matrix");
    for (int j = 0; j < n_; ++j) {
      std::swap(a[static_cast<std::size_t>(piv * n_ + j)], a[static_cast<std::size_t>(c * n_ + j)]);
      std::swap(inv.at(piv, j), inv.at(c, j));
    }
    const Rational pv = a[static_cast<std::size_t>(c * n_ + c)];
    for (int j = 0; j < n_; ++j) {
      a[static_cast<std::size_t>(c * n_ + j)] /= pv;
      inv.at(c, j) /= pv;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == c) continue;
      const Rational f = a[static_cast<std::size_t>(r * n_ + c)];
      if (f == 0) continue;
      for (int j = 0; j < n_; ++j) {
        a[static_cast<std::size_t>(r * n_ + j)] -= f * a[static_cast<std::size_t>(c * n_ + j)];
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

PadicMatrix PadicMatrix::transpose() const {
  PadicMatrix t = *this;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.at(i, j) = at(j, i);
  return t;
}

int PadicMatrix::row_min_val(int i, long p) const {
  int m = INT_MAX;
  for (int j = 0; j < n_; ++j) m = std::min(m, vp(at(i, j), p));
  return m;
}

int PadicMatrix::min_val(long p) const {
  int m = INT_MAX;
  for (const auto& x : e_) m = std::min(m, vp(x, p));
  return m;
}

bool PadicMatrix::in_K(long p) const { return is_integral(p) && vp(det(), p) == 0; }

bool PadicMatrix::is_upper_unipotent() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j <= i; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool PadicMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

std::vector<long> PadicMatrix::reduce(long p, int m) const {
  std::vector<long> r;
  for (const auto& x : e_) r.push_back(residue_mod_power(x, p, m));
  return r;
}

PadicMatrix operator*(const PadicMatrix& a, const PadicMatrix& b) {
  const int n = a.n_;
  std::vector<Rational> r(static_cast<std::size_t>(n * n), Rational(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rational& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(i * n + j)] += x * b.at(k, j);
    }
  return PadicMatrix(n, std::move(r));
}

std::string PadicMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << cusp::to_string(at(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<int> NAK::valuations() const {
  std::vector<int> v;
  for (int i = 0; i < a.n(); ++i) v.push_back(valuation(a.at(i, i), prime));
  return v;
}

NAK iwasawa_NAK(const PadicMatrix& g, long p) {
  const int n = g.n();
  if (g.det() == 0) throw Error(ErrorCode::DivisionByZero, "singular matrix");
  PadicMatrix b = g;
  PadicMatrix kinv = PadicMatrix::identity(n);  // b = g * kinv throughout
  for (int row = n - 1; row >= 0; --row) {
    // choose the column among 0..row of minimal valuation, move it to position row
    int best = 0, bv = INT_MAX;
    for (int j = 0; j <= row; ++j) {
      const int v = vp(b.at(row, j), p);
      if (v < bv || (v == bv && j > best && v != INT_MAX)) {
        bv = v;
        best = j;
      }
    }
    if (best != row)
      for (int i = 0; i < n; ++i) {
        std::swap(b.at(i, best), b.at(i, row));
        std::swap(kinv.at(i, best), kinv.at(i, row));
      }
    const Rational piv = b.at(row, row);
    for (int j = 0; j < row; ++j) {
      const Rational f = b.at(row, j) / piv;  // integral by minimality
      if (f == 0) continue;
      for (int i = 0; i < n; ++i) {
        b.at(i, j) -= f * b.at(i, row);
        kinv.at(i, j) -= f * kinv.at(i, row);
      }
    }
  }
  // b upper triangular: b = n * d with d diagonal, then d = p^v * unit
  NAK r;
  r.prime = p;
  std::vector<Rational> pw, units;
  for (int i = 0; i < n; ++i) {
    const Rational& d = b.at(i, i);
    const int v = valuation(d, p);
    pw.push_back(qpow(p, v));
    units.push_back(d / qpow(p, v));
  }
  const PadicMatrix D = PadicMatrix::diag(pw);
  const PadicMatrix U = PadicMatrix::diag(units);
  r.a = D;
  r.n = b * (D * U).inverse();
  r.k = U * kinv.inverse();
  return r;
}

PadicMatrix complete_bottom_row(const std::vector<Rational>& row, long p) {
  const int n = static_cast<int>(row.size());
  int pivot = -1;
  for (int j = n - 1; j >= 0; --j)
    if (row[static_cast<std::size_t>(j)] != 0 && valuation(row[static_cast<std::size_t>(j)], p) == 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) throw Error(ErrorCode::InvalidArgument, "row is not primitive");
  PadicMatrix k(n, std::vector<Rational>(static_cast<std::size_t>(n * n), Rational(0)));
  int r = 0;
  for (int i = 0; i < n; ++i) {
    if (i == pivot) continue;
    k.at(r, i) = 1;
    ++r;
  }
  for (int j = 0; j < n; ++j) k.at(n - 1, j) = row[static_cast<std::size_t>(j)];
  return k;
}

std::optional<PZK> iwasawa_PZK(const PadicMatrix& g, long p) {
  const int n = g.n();
  if (g.det() == 0) throw Error(ErrorCode::DivisionByZero, "singular matrix");
  PZK r;
  r.l = g.row_min_val(n - 1, p);
  const Rational s = qpow(p, r.l);
  std::vector<Rational> row;
  for (int j = 0; j < n; ++j) row.push_back(g.at(n - 1, j) / s);
  r.k = complete_bottom_row(row, p);
  r.z = PadicMatrix::diag(std::vector<Rational>(static_cast<std::size_t>(n), s));
  r.p = g * r.k.inverse() * r.z.inverse();
  return r;
}

// ---------------------------------------------------------------------------

LatticeChain::LatticeChain(long p, int n, int e, std::vector<std::vector<int>> period, PadicMatrix uniformizer)
    : p_(p), n_(n), e_(e), period_(std::move(period)), w_(std::move(uniformizer)) {}

LatticeChain LatticeChain::depth_zero(long p, int n) {
  return LatticeChain(p, n, 1, {std::vector<int>(static_cast<std::size_t>(n), 0)},
                      PadicMatrix::diag(std::vector<Rational>(static_cast<std::size_t>(n), Rational(p))));
}

LatticeChain LatticeChain::ramified_gl2(long p) {
  return LatticeChain(p, 2, 2, {{-1, 0}, {0, 0}}, PadicMatrix::from_ints(2, {0, p, 1, 0}));
}

int LatticeChain::a(int i, int k) const {
  const int r = static_cast<int>(mod_floor(k, e_));
  const int shift = (k - r) / e_;
  return period_[static_cast<std::size_t>(r)][static_cast<std::size_t>(i - 1)] + shift;
}

bool LatticeChain::in_order(const PadicMatrix& X) const {
  // (p^{a_i(k)} e_i) X must have j-th entry of valuation >= a_j(k)
  for (int k = 0; k < e_; ++k)
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        const Rational& x = X.at(i - 1, j - 1);
        if (x != 0 && a(i, k) + valuation(x, p_) < a(j, k)) return false;
      }
  return true;
}

bool LatticeChain::check_invariants(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  for (int k = -2 * e_; k <= 2 * e_; ++k)
    for (int i = 1; i <= n_; ++i)
      if (a(i, k + e_) != a(i, k) + 1) return fail("periodicity");
  if (a(n_, 0) != 0 || a(n_, -1) != -1) return fail("normalization a_n(0) = 0, a_n(-1) = -1");
  // uniformizer maps L_k onto L_{k+1}: images of the basis of L_k lie in L_{k+1}
  // and the index matches (valuation of det equals the total shift)
  for (int k = 0; k < e_; ++k) {
    int shift = 0;
    for (int i = 1; i <= n_; ++i) {
      shift += a(i, k + 1) - a(i, k);
      for (int j = 1; j <= n_; ++j) {
        const Rational& x = w_.at(i - 1, j - 1);
        if (x != 0 && a(i, k) + valuation(x, p_) < a(j, k + 1)) return fail("uniformizer does not shift the chain");
      }
    }
    if (w_.val_det(p_) != shift) return fail("uniformizer index mismatch");
  }
  PadicMatrix pw = PadicMatrix::identity(n_);
  for (int i = 0; i < e_; ++i) {
    if (pw.row_min_val(n_ - 1, p_) != 0) return fail("last row of a uniformizer power is not primitive");
    pw = pw * w_;
  }
  return true;
}

}  // namespace cusp
