#include "cusp/finite_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cusp/error.hpp"
#include "cusp/rational.hpp"

namespace cusp {

std::string ConjClassLabel::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Central: os << "central"; break;
    case Kind::CentralUnipotent: os << "central-unipotent"; break;
    case Kind::Split: os << "split"; break;
    case Kind::Elliptic: os << "elliptic"; break;
    case Kind::Generic: os << "generic"; break;
  }
  os << "(";
  for (std::size_t i = 0; i < data.size(); ++i) os << (i ? "," : "") << data[i];
  os << ")";
  return os.str();
}

MatrixGroup::MatrixGroup(std::shared_ptr<const FiniteFieldTower> tower, int n)
    : tower_(std::move(tower)), F_(tower_->base()), n_(n), q_(tower_->q()) {
  if (n < 1 || n > 3) throw Error(ErrorCode::InvalidArgument, "matrix size must be 1, 2 or 3");
  long c = 1;
  for (int i = 0; i < n * n; ++i) {
    c *= q_;
    if (c > kEnumerationLimit * q_) break;
  }
  codes_ = c;
  if (n == 2) {
    const FiniteField& E = *tower_->ext(2);
    roots_.resize(static_cast<std::size_t>(q_ * q_));
    for (int t = 0; t < q_; ++t)
      for (int d = 0; d < q_; ++d) {
        const int te = tower_->embed(2, t), de = tower_->embed(2, d);
        auto& r = roots_[static_cast<std::size_t>(t * q_ + d)];
        for (int y = 0; y < E.size(); ++y)
          if (E.add(E.sub(E.mul(y, y), E.mul(te, y)), de) == 0) r.push_back(y);
      }
  }
}

long MatrixGroup::order() const {
  long qn = ipow(q_, n_);
  long r = 1, qi = 1;
  for (int i = 0; i < n_; ++i) {
    r *= qn - qi;
    qi *= q_;
  }
  return r;
}

int MatrixGroup::det_of(const std::array<int, 9>& a) const {
  const FiniteField& F = *F_;
  if (n_ == 1) return a[0];
  if (n_ == 2) return F.sub(F.mul(a[0], a[3]), F.mul(a[1], a[2]));
  auto m = [&](int i, int j) { return a[static_cast<std::size_t>(i * 3 + j)]; };
  int t1 = F.mul(m(0, 0), F.sub(F.mul(m(1, 1), m(2, 2)), F.mul(m(1, 2), m(2, 1))));
  int t2 = F.mul(m(0, 1), F.sub(F.mul(m(1, 0), m(2, 2)), F.mul(m(1, 2), m(2, 0))));
  int t3 = F.mul(m(0, 2), F.sub(F.mul(m(1, 0), m(2, 1)), F.mul(m(1, 1), m(2, 0))));
  return F.add(F.sub(t1, t2), t3);
}

FiniteMatrix MatrixGroup::make(const std::vector<int>& entries) const {
  if (static_cast<int>(entries.size()) != n_ * n_) throw Error(ErrorCode::InvalidArgument, "wrong number of matrix entries");
  FiniteMatrix g;
  g.n = n_;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0 || entries[i] >= q_) throw Error(ErrorCode::InvalidArgument, "matrix entry out of range");
    g.a[i] = entries[i];
  }
  g.det = det_of(g.a);
  if (g.det == 0) throw Error(ErrorCode::InvalidArgument, "singular matrix");
  return g;
}

FiniteMatrix MatrixGroup::identity() const {
  std::vector<int> d(static_cast<std::size_t>(n_), 1);
  return diag(d);
}

FiniteMatrix MatrixGroup::diag(const std::vector<int>& d) const {
  std::vector<int> e(static_cast<std::size_t>(n_ * n_), 0);
  for (int i = 0; i < n_; ++i) e[static_cast<std::size_t>(i * n_ + i)] = d[static_cast<std::size_t>(i)];
  return make(e);
}

FiniteMatrix MatrixGroup::mul(const FiniteMatrix& x, const FiniteMatrix& y) const {
  const FiniteField& F = *F_;
  FiniteMatrix r;
  r.n = n_;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int s = 0;
      for (int k = 0; k < n_; ++k) s = F.add(s, F.mul(x.at(i, k), y.at(k, j)));
      r.a[static_cast<std::size_t>(i * n_ + j)] = s;
    }
  r.det = F.mul(x.det, y.det);
  return r;
}

FiniteMatrix MatrixGroup::inv(const FiniteMatrix& x) const {
  const FiniteField& F = *F_;
  const int di = F.inv(x.det);
  FiniteMatrix r;
  r.n = n_;
  if (n_ == 1) {
    r.a[0] = di;
  } else if (n_ == 2) {
    r.a[0] = F.mul(x.a[3], di);
    r.a[1] = F.mul(F.neg(x.a[1]), di);
    r.a[2] = F.mul(F.neg(x.a[2]), di);
    r.a[3] = F.mul(x.a[0], di);
  } else {
    auto m = [&](int i, int j) { return x.at(i % 3, j % 3); };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        // adjugate entry (i, j) = cofactor (j, i)
        int c = F.sub(F.mul(m(j + 1, i + 1), m(j + 2, i + 2)), F.mul(m(j + 1, i + 2), m(j + 2, i + 1)));
        r.a[static_cast<std::size_t>(i * 3 + j)] = F.mul(c, di);
      }
  }
  r.det = di;
  return r;
}

int MatrixGroup::trace(const FiniteMatrix& x) const {
  int t = 0;
  for (int i = 0; i < n_; ++i) t = F_->add(t, x.at(i, i));
  return t;
}

long MatrixGroup::code(const FiniteMatrix& g) const {
  long c = 0;
  for (int i = n_ * n_ - 1; i >= 0; --i) c = c * q_ + g.a[static_cast<std::size_t>(i)];
  return c;
}

FiniteMatrix MatrixGroup::from_code(long c) const {
  FiniteMatrix g;
  g.n = n_;
  for (int i = 0; i < n_ * n_; ++i) {
    g.a[static_cast<std::size_t>(i)] = static_cast<int>(c % q_);
    c /= q_;
  }
  g.det = det_of(g.a);
  return g;
}

void MatrixGroup::enumerate_range(long lo, long hi, const std::function<void(const FiniteMatrix&)>& fn) const {
  if (codes_ > kEnumerationLimit) throw Error(ErrorCode::TooLarge, "q^(n^2) exceeds the enumeration limit");
  hi = std::min(hi, codes_);
  for (long c = std::max(0L, lo); c < hi; ++c) {
    FiniteMatrix g = from_code(c);
    if (g.det != 0) fn(g);
  }
}

void MatrixGroup::enumerate(const std::function<void(const FiniteMatrix&)>& fn) const { enumerate_range(0, codes_, fn); }

std::vector<FiniteMatrix> MatrixGroup::elements() const {
  std::vector<FiniteMatrix> out;
  enumerate([&](const FiniteMatrix& g) { out.push_back(g); });
  return out;
}

std::vector<FiniteMatrix> MatrixGroup::unipotent_elements() const {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) slots.emplace_back(i, j);
  long count = ipow(q_, static_cast<int>(slots.size()));
  std::vector<FiniteMatrix> out;
  for (long c = 0; c < count; ++c) {
    FiniteMatrix g = identity();
    long t = c;
    for (auto [i, j] : slots) {
      g.a[static_cast<std::size_t>(i * n_ + j)] = static_cast<int>(t % q_);
      t /= q_;
    }
    out.push_back(g);
  }
  return out;
}

std::vector<FiniteMatrix> MatrixGroup::mirabolic_coset_reps() const {
  std::vector<FiniteMatrix> out;
  const long rows = ipow(q_, n_);
  for (long c = 1; c < rows; ++c) {
    std::vector<int> r(static_cast<std::size_t>(n_));
    long t = c;
    for (int i = 0; i < n_; ++i) {
      r[static_cast<std::size_t>(i)] = static_cast<int>(t % q_);
      t /= q_;
    }
    int pivot = n_ - 1;
    while (r[static_cast<std::size_t>(pivot)] == 0) --pivot;
    std::vector<int> e(static_cast<std::size_t>(n_ * n_), 0);
    int row = 0;
    for (int i = 0; i < n_; ++i) {
      if (i == pivot) continue;
      e[static_cast<std::size_t>(row * n_ + i)] = 1;
      ++row;
    }
    for (int j = 0; j < n_; ++j) e[static_cast<std::size_t>((n_ - 1) * n_ + j)] = r[static_cast<std::size_t>(j)];
    out.push_back(make(e));
  }
  return out;
}

std::vector<FiniteMatrix> MatrixGroup::unipotent_mirabolic_reps() const {
  const auto N = unipotent_elements();
  std::vector<FiniteMatrix> reps;
  std::set<long> seen;
  const long top = ipow(q_, n_ * (n_ - 1));
  for (long c = 0; c < top; ++c) {
    std::vector<int> e(static_cast<std::size_t>(n_ * n_), 0);
    long t = c;
    for (int i = 0; i < n_ * (n_ - 1); ++i) {
      e[static_cast<std::size_t>(i)] = static_cast<int>(t % q_);
      t /= q_;
    }
    e.back() = 1;
    FiniteMatrix p;
    p.n = n_;
    for (std::size_t i = 0; i < e.size(); ++i) p.a[i] = e[i];
    p.det = det_of(p.a);
    if (p.det == 0 || seen.count(code(p))) continue;
    reps.push_back(p);
    for (const auto& u : N) seen.insert(code(mul(u, p)));
  }
  return reps;
}

std::vector<int> MatrixGroup::char_poly(const FiniteMatrix& g) const {
  const FiniteField& F = *F_;
  if (n_ == 1) return {F.neg(g.a[0]), 1};
  if (n_ == 2) return {g.det, F.neg(trace(g)), 1};
  // x^3 - tr x^2 + (sum of principal 2-minors) x - det
  int m2 = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) m2 = F.add(m2, F.sub(F.mul(g.at(i, i), g.at(j, j)), F.mul(g.at(i, j), g.at(j, i))));
  return {F.neg(g.det), m2, F.neg(trace(g)), 1};
}

std::vector<int> MatrixGroup::min_poly(const FiniteMatrix& g) const {
  const FiniteField& F = *F_;
  const std::vector<int> cp = char_poly(g);
  // test monic divisors of increasing degree
  auto eval_is_zero = [&](const std::vector<int>& poly) {
    std::array<int, 9> acc{};
    std::array<int, 9> pw{};
    for (int i = 0; i < n_; ++i) pw[static_cast<std::size_t>(i * n_ + i)] = 1;
    for (int d = 0; d < static_cast<int>(poly.size()); ++d) {
      for (int k = 0; k < n_ * n_; ++k)
        acc[static_cast<std::size_t>(k)] = F.add(acc[static_cast<std::size_t>(k)], F.mul(poly[static_cast<std::size_t>(d)], pw[static_cast<std::size_t>(k)]));
      FiniteMatrix cur;
      cur.n = n_;
      cur.a = pw;
      cur.det = 1;
      pw = mul(cur, g).a;
    }
    for (int k = 0; k < n_ * n_; ++k)
      if (acc[static_cast<std::size_t>(k)] != 0) return false;
    return true;
  };
  for (int deg = 1; deg < n_; ++deg) {
    const long count = ipow(q_, deg);
    for (long c = 0; c < count; ++c) {
      std::vector<int> poly(static_cast<std::size_t>(deg) + 1, 1);
      long t = c;
      for (int i = 0; i < deg; ++i) {
        poly[static_cast<std::size_t>(i)] = static_cast<int>(t % q_);
        t /= q_;
      }
      if (eval_is_zero(poly)) return poly;
    }
  }
  return cp;
}

ConjClassLabel MatrixGroup::classify(const FiniteMatrix& g) const {
  ConjClassLabel L;
  if (n_ == 1) {
    L.kind = ConjClassLabel::Kind::Central;
    L.data = {g.a[0]};
    return L;
  }
  if (n_ == 2) {
    const bool scalar = g.a[1] == 0 && g.a[2] == 0 && g.a[0] == g.a[3];
    if (scalar) {
      L.kind = ConjClassLabel::Kind::Central;
      L.data = {g.a[0]};
      return L;
    }
    const int t = trace(g);
    const auto& r = roots_[static_cast<std::size_t>(t * q_ + g.det)];
    std::vector<int> base_roots;
    for (int y : r)
      if (tower_->in_base(2, y)) base_roots.push_back(tower_->restrict(2, y));
    if (base_roots.empty()) {
      L.kind = ConjClassLabel::Kind::Elliptic;
      L.data = {std::min(r.at(0), r.at(1))};
    } else if (base_roots.size() == 1) {
      L.kind = ConjClassLabel::Kind::CentralUnipotent;
      L.data = {base_roots[0]};
    } else {
      L.kind = ConjClassLabel::Kind::Split;
      L.data = {std::min(base_roots[0], base_roots[1]), std::max(base_roots[0], base_roots[1])};
    }
    return L;
  }
  L.kind = ConjClassLabel::Kind::Generic;
  L.data = char_poly(g);
  auto mp = min_poly(g);
  L.data.insert(L.data.end(), mp.begin(), mp.end());
  return L;
}

long MatrixGroup::class_size(const ConjClassLabel& label) const {
  if (n_ != 2) throw Error(ErrorCode::InvalidArgument, "class sizes are tabulated for n = 2");
  switch (label.kind) {
    case ConjClassLabel::Kind::Central: return 1;
    case ConjClassLabel::Kind::CentralUnipotent: return q_ * q_ - 1;
    case ConjClassLabel::Kind::Split: return q_ * (q_ + 1);
    case ConjClassLabel::Kind::Elliptic: return q_ * (q_ - 1);
    default: throw Error(ErrorCode::InvalidArgument, "unexpected label");
  }
}

}  // namespace cusp
