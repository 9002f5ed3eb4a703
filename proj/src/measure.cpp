#include "cusp/measure.hpp"

#include <set>
#include <unordered_set>

#include "cusp/error.hpp"

namespace cusp {

std::vector<long> unit_representatives(long p, int m) {
  std::vector<long> out;
  const long pm = ipow(p, m);
  for (long u = 1; u < pm; ++u)
    if (u % p != 0) out.push_back(u);
  return out;
}

std::vector<std::vector<long>> primitive_rows(long p, int n, int m) {
  std::vector<std::vector<long>> out;
  const long pm = ipow(p, m);
  const long total = ipow(pm, n);
  for (long c = 0; c < total; ++c) {
    std::vector<long> r(static_cast<std::size_t>(n));
    long t = c;
    bool primitive = false;
    for (int i = 0; i < n; ++i) {
      r[static_cast<std::size_t>(i)] = t % pm;
      t /= pm;
      if (r[static_cast<std::size_t>(i)] % p != 0) primitive = true;
    }
    if (primitive) out.push_back(r);
  }
  return out;
}

namespace {

/// Determinant modulo p of an n x n integer matrix, row-major.
long det_mod(std::vector<long> a, int n, long p) {
  long det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[static_cast<std::size_t>(r * n + c)] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a[static_cast<std::size_t>(piv * n + j)], a[static_cast<std::size_t>(c * n + j)]);
      det = p - det;
    }
    const long x = mod_floor(a[static_cast<std::size_t>(c * n + c)], p);
    det = det * x % p;
    long inv = 1;
    for (long k = 1; k < p; ++k)
      if (x * k % p == 1) inv = k;
    for (int r = c + 1; r < n; ++r) {
      const long f = mod_floor(a[static_cast<std::size_t>(r * n + c)], p) * inv % p;
      if (f == 0) continue;
      for (int j = c; j < n; ++j)
        a[static_cast<std::size_t>(r * n + j)] = mod_floor(a[static_cast<std::size_t>(r * n + j)] - f * a[static_cast<std::size_t>(c * n + j)], p);
    }
  }
  return det % p;
}

}  // namespace

MeasureContext::MeasureContext(long p, int n) : p_(p), n_(n) {}

Rational MeasureContext::coset_volume(Ambient ambient, int m) const {
  if (m < 1) throw Error(ErrorCode::UnsupportedDescriptor, "descriptor level must be at least 1");
  int dim = 0;
  switch (ambient) {
    case Ambient::G: dim = n_ * n_; break;
    case Ambient::P: dim = n_ * n_ - n_; break;
    case Ambient::Z: dim = 1; break;
    case Ambient::N: dim = n_ * (n_ - 1) / 2; break;
    case Ambient::PKQuotient: dim = n_; break;
    case Ambient::Units: dim = 1; break;
  }
  return qpow(p_, -dim * (m - 1));
}

Rational MeasureContext::volume(const Descriptor& d) const {
  const Rational unit = coset_volume(d.ambient, d.level);
  const long pm = ipow(p_, d.level);
  const int width = d.ambient == Ambient::PKQuotient ? n_ : (d.reps.empty() ? 0 : d.reps.front().n() * d.reps.front().n());
  // classes are keyed by base-p^m digits when they fit in 63 bits
  bool packed = true;
  {
    long double span = 1;
    for (int i = 0; i < width; ++i) span *= static_cast<long double>(pm);
    packed = span < 9.0e18L;
  }
  std::unordered_set<long> keys;
  std::set<std::vector<long>> classes;
  for (const auto& g : d.reps) {
    if (!g.is_integral(p_)) throw Error(ErrorCode::UnsupportedDescriptor, "representative is not integral");
    const auto r = g.reduce(p_, d.level);
    const bool unit_det = det_mod(r, g.n(), p_) != 0;
    bool ok = true;
    switch (d.ambient) {
      case Ambient::G:
      case Ambient::PKQuotient:
        ok = unit_det;
        break;
      case Ambient::P:
        ok = unit_det;
        for (int j = 0; j < n_; ++j) ok = ok && g.at(n_ - 1, j) == (j == n_ - 1 ? 1 : 0);
        break;
      case Ambient::Z:
        ok = g.is_diagonal() && unit_det;
        for (int i = 1; i < g.n(); ++i) ok = ok && g.at(i, i) == g.at(0, 0);
        break;
      case Ambient::N:
        ok = g.is_upper_unipotent();
        break;
      case Ambient::Units:
        ok = g.n() == 1 && unit_det;
        break;
    }
    if (!ok) throw Error(ErrorCode::UnsupportedDescriptor, "representative " + g.to_string() + " outside the ambient compact set");
    const auto first = d.ambient == Ambient::PKQuotient ? r.end() - n_ : r.begin();
    if (packed && r.end() - first == width) {
      long key = 0;
      for (auto it = first; it != r.end(); ++it) key = key * pm + *it;
      keys.insert(key);
    } else {
      classes.insert(std::vector<long>(first, r.end()));
    }
  }
  return unit * Rational(static_cast<long>(keys.size() + classes.size()));
}

Descriptor MeasureContext::maximal_compact() const {
  Descriptor d{Ambient::G, 1, {}};
  const long total = ipow(p_, n_ * n_);
  std::vector<long> e(static_cast<std::size_t>(n_ * n_));
  for (long c = 0; c < total; ++c) {
    long t = c;
    for (auto& x : e) {
      x = t % p_;
      t /= p_;
    }
    if (det_mod(e, n_, p_) != 0) d.reps.push_back(PadicMatrix::from_ints(n_, e));
  }
  return d;
}

Descriptor MeasureContext::mirabolic_compact() const {
  Descriptor d{Ambient::P, 1, {}};
  const int free = n_ * (n_ - 1);
  const long total = ipow(p_, free);
  std::vector<long> e(static_cast<std::size_t>(n_ * n_), 0);
  e.back() = 1;
  for (long c = 0; c < total; ++c) {
    long t = c;
    for (int i = 0; i < free; ++i) {
      e[static_cast<std::size_t>(i)] = t % p_;
      t /= p_;
    }
    if (det_mod(e, n_, p_) != 0) d.reps.push_back(PadicMatrix::from_ints(n_, e));
  }
  return d;
}

Descriptor MeasureContext::mirabolic_quotient(int m) const {
  Descriptor d{Ambient::PKQuotient, m, {}};
  for (const auto& r : primitive_rows(p_, n_, m)) {
    std::vector<Rational> row(r.begin(), r.end());
    d.reps.push_back(complete_bottom_row(row, p_));
  }
  return d;
}

bool MeasureContext::in_unipotent_cell(const PadicMatrix& g, int v1, int v2, const PadicMatrix& k0, int m) const {
  if (n_ != 2) throw Error(ErrorCode::UnsupportedDescriptor, "unipotent cells are implemented for n = 2");
  const PadicMatrix h = g * k0.inverse();
  const Rational& c = h.at(1, 0);
  const Rational& d = h.at(1, 1);
  if (d == 0) return false;
  const Rational s2 = qpow(p_, -v2), s1 = qpow(p_, -v1);
  const int need = m;
  auto in_ideal = [&](const Rational& x) { return x == 0 || valuation(x, p_) >= need; };
  if (!in_ideal(c * s2)) return false;
  if (!in_ideal(d * s2 - 1)) return false;
  return in_ideal(h.det() / d * s1 - 1);
}

Rational MeasureContext::unipotent_cell_volume(int v1, int v2, int m) const {
  return coset_volume(Ambient::G, m) / qpow(p_, -(m + v1 - v2 - 1));
}

Rational MeasureContext::split_cell_volume(int v1, int v2, const PadicMatrix& k0, int m) const {
  if (n_ != 2) throw Error(ErrorCode::UnsupportedDescriptor, "unipotent cells are implemented for n = 2");
  const auto units = unit_representatives(p_, m);
  const auto rows = primitive_rows(p_, 2, m);
  const Rational cell = coset_volume(Ambient::Units, m) * coset_volume(Ambient::Z, m) * coset_volume(Ambient::PKQuotient, m);
  long hits = 0;
  // p z k has Iwasawa valuations (j + l, l): only j = v1 - v2, l = v2 contribute
  const Rational a_pow = qpow(p_, v1 - v2), z_pow = qpow(p_, v2);
  for (long u : units)
    for (long w : units)
      for (const auto& r : rows) {
        const PadicMatrix k = complete_bottom_row({Rational(r[0]), Rational(r[1])}, p_);
        const Rational zs = z_pow * Rational(w);
        const PadicMatrix g = PadicMatrix::diag({a_pow * Rational(u) * zs, zs}) * k;
        if (in_unipotent_cell(g, v1, v2, k0, m)) ++hits;
      }
  // the N\P integral carries the modular factor |det p|^{-1} = q^{v1 - v2}
  return cell * Rational(hits) * qpow(p_, v1 - v2);
}

}  // namespace cusp
