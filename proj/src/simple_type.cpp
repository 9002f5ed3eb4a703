#include "cusp/simple_type.hpp"

#include <algorithm>

#include "cusp/error.hpp"

namespace cusp {

namespace {

long least_primitive_root(long p) {
  for (long g = 1; g < p; ++g) {
    long x = 1;
    long ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return g;
  }
  return 1;
}

int vp_int(long N, long p) {
  int v = 0;
  while (N % p == 0) {
    N /= p;
    ++v;
  }
  return v;
}

PadicMatrix upper(const PadicScalar& x) { return PadicMatrix(2, {1, x, 0, 1}); }

}  // namespace

std::string to_string(Family f) { return f == Family::DepthZero ? "depth-zero" : "ramified"; }

Family family_from_string(const std::string& s) {
  if (s == "depth-zero" || s == "depth_zero") return Family::DepthZero;
  if (s == "ramified" || s == "ramified-GL2") return Family::Ramified;
  throw Error(ErrorCode::ConfigError, "unknown family '" + s + "'");
}

TypeParams TypeParams::dual() const {
  TypeParams d = *this;
  if (family == Family::DepthZero)
    d.theta_index = mod_floor(-theta_index, p * p - 1);
  else
    d.sigma = mod_floor(-sigma, p - 1);
  d.A = A.inverse();
  d.psi_sign = -psi_sign;
  return d;
}

TypeParams TypeParams::twisted(const CycNumber& c) const {
  TypeParams t = *this;
  t.A = A * c.pow(n / e());
  return t;
}

long session_modulus(const std::vector<TypeParams>& types, const std::vector<CycNumber>& scalars, int extra_depth) {
  long N = 1;
  for (const TypeParams& t : types) {
    if (t.family == Family::DepthZero)
      N = lcm_long(N, lcm_long(ipow(t.p, 1 + extra_depth), t.p * t.p - 1));
    else
      N = lcm_long(N, lcm_long(ipow(t.p, 2 + extra_depth), t.p - 1));
    N = lcm_long(N, t.A.modulus());
  }
  for (const CycNumber& c : scalars) N = lcm_long(N, c.modulus());
  return N;
}

PsiT::PsiT(long p, std::vector<PadicScalar> t, int sign, int cap, CycFieldPtr K)
    : p_(p), t_(std::move(t)), sign_(sign), cap_(cap), K_(std::move(K)) {}

CycNumber PsiT::operator()(const PadicMatrix& u) const {
  if (!u.is_upper_unipotent()) throw Error(ErrorCode::InvalidArgument, "psi_t needs an upper unipotent matrix");
  Rational s = 0;
  for (int i = 0; i + 1 < u.n(); ++i) s += t_[static_cast<std::size_t>(i)] * u.at(i, i + 1);
  return theta_eval(sign_ * s, p_, cap_, K_);
}

CycNumber PsiT::of_entry(const PadicScalar& x) const { return theta_eval(sign_ * t_[0] * x, p_, cap_, K_); }

SimpleType::SimpleType(const TypeParams& params, CycFieldPtr K)
    : P_(params),
      K_(std::move(K)),
      cap_(vp_int(K_->modulus(), params.p) - 1),
      chain_(params.family == Family::DepthZero ? LatticeChain::depth_zero(params.p, params.n)
                                                : LatticeChain::ramified_gl2(params.p)),
      psi_(params.p, {}, params.psi_sign, cap_, K_) {
  std::vector<PadicScalar> t;
  for (int i = 1; i < P_.n; ++i) t.push_back(qpow(P_.p, chain_.a(i, 0) - chain_.a(i + 1, 0)));
  psi_ = PsiT(P_.p, t, P_.psi_sign, cap_, K_);
  A_ = P_.A.embed(K_);
  if (P_.family == Family::DepthZero) {
    auto tower = std::make_shared<const FiniteFieldTower>(P_.p, 1, std::vector<int>{2});
    auto G = std::make_shared<const MatrixGroup>(tower, 2);
    auto chi = std::make_shared<const CuspidalCharacter>(G, RegularCharacter(tower, 2, P_.theta_index), K_);
    fin_ = std::make_shared<const FiniteBessel>(chi, FiniteAdditiveCharacter(tower, P_.psi_sign));
  } else {
    primitive_root_ = least_primitive_root(P_.p);
  }
}

std::shared_ptr<const SimpleType> SimpleType::make(const TypeParams& params, CycFieldPtr K) {
  if (!is_prime(params.p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  if (params.n != 2)
    throw Error(ErrorCode::UnsupportedDescriptor, "only GL_2 types are available (GL_3 characters are gated off)");
  if (params.psi_sign != 1 && params.psi_sign != -1) throw Error(ErrorCode::InvalidArgument, "psi sign must be +-1");
  if (params.A.is_zero()) throw Error(ErrorCode::InvalidArgument, "A must be nonzero");
  if (params.family == Family::Ramified && params.p == 2)
    throw Error(ErrorCode::EvenResidualCharacteristic, "ramified GL_2 types need p odd");
  const long need = session_modulus({params});
  if (K->modulus() % need != 0)
    throw Error(ErrorCode::FieldMismatch, "session field Q(zeta_" + std::to_string(K->modulus()) +
                                              ") does not contain Q(zeta_" + std::to_string(need) + ")");
  std::shared_ptr<const SimpleType> T(new SimpleType(params, std::move(K)));
  std::string why;
  if (!T->chain().check_invariants(&why)) throw Error(ErrorCode::InvalidArgument, "lattice chain: " + why);
  T->check_nondegenerate();
  return T;
}

void SimpleType::check_nondegenerate() const {
  if (bessel(0, PadicMatrix::identity(2)) != CycNumber(1))
    throw Error(ErrorCode::NondegeneracyFailure, "Bessel function at 1 is not 1");
  const long p = P_.p;
  const long step = P_.family == Family::DepthZero ? 1 : p;
  for (long b = 0; b < p * p; b += step) {
    const PadicMatrix u = upper(b);
    if (bessel(0, u) != psi_(u))
      throw Error(ErrorCode::NondegeneracyFailure, "Lambda and psi_t disagree on N cap J at b = " + std::to_string(b));
  }
}

PadicMatrix SimpleType::uniformizer_power(int a) const {
  const PadicMatrix& w = uniformizer();
  PadicMatrix r = PadicMatrix::identity(w.n());
  const PadicMatrix b = a < 0 ? w.inverse() : w;
  for (int i = 0; i < std::abs(a); ++i) r = r * b;
  return r;
}

bool SimpleType::in_J(const PadicMatrix& j) const {
  const long p = P_.p;
  if (P_.family == Family::DepthZero) return j.in_K(p);
  if (!j.is_integral(p)) return false;
  if (vp(j.at(0, 0), p) != 0 || vp(j.at(1, 1), p) != 0 || vp(j.at(0, 1), p) < 1) return false;
  return vp(j.at(0, 0) - j.at(1, 1), p) >= 1;
}

std::optional<std::pair<int, PadicMatrix>> SimpleType::decompose_bold_J(const PadicMatrix& j) const {
  const int v = j.val_det(P_.p);
  const int step = P_.n / e();
  if (v % step != 0) return std::nullopt;
  const int a = v / step;
  PadicMatrix j0 = uniformizer_power(-a) * j;
  if (!in_J(j0)) return std::nullopt;
  return std::make_pair(a, j0);
}

CycNumber SimpleType::theta_beta(const PadicMatrix& h) const {
  const long p = P_.p;
  const Rational y11 = h.at(0, 0) - 1, y12 = h.at(0, 1), y21 = h.at(1, 0), y22 = h.at(1, 1) - 1;
  if (vp(y11, p) < 1 || vp(y22, p) < 1 || vp(y12, p) < 1 || vp(y21, p) < 0)
    throw Error(ErrorCode::NotInU, "not in 1 + P: " + h.to_string());
  return theta_eval(P_.psi_sign * (y21 + y12 / p), p, cap_, K_);
}

CycNumber SimpleType::sigma_bar(long x) const {
  const long p = P_.p;
  x = mod_floor(x, p);
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "sigma of a non-unit");
  long l = 0;
  for (long y = 1; y != x; y = y * primitive_root_ % p) ++l;
  const long N = K_->modulus();
  return CycNumber::root(K_, mod_floor(P_.sigma * l, p - 1) * (N / (p - 1)));
}

FiniteMatrix SimpleType::reduce_K(const PadicMatrix& k) const {
  const std::vector<long> r = k.reduce(P_.p, 1);
  std::vector<int> e(r.begin(), r.end());
  return fin_->group().make(e);
}

CycNumber SimpleType::extended_psi(const PadicMatrix& n, const PadicMatrix& h) const {
  const long p = P_.p;
  if (!n.is_upper_unipotent()) throw Error(ErrorCode::NotInU, "first factor is not in N");
  const int need = P_.family == Family::DepthZero ? 0 : 1;
  if (vp(n.at(0, 1), p) < need) throw Error(ErrorCode::NotInU, "first factor is not in N cap J");
  if (P_.family == Family::DepthZero) {
    if (!h.is_integral(p) || vp(h.at(0, 0) - 1, p) < 1 || vp(h.at(1, 1) - 1, p) < 1 || vp(h.at(0, 1), p) < 1 ||
        vp(h.at(1, 0), p) < 1)
      throw Error(ErrorCode::NotInU, "second factor is not in K^1");
    return psi_(n);
  }
  return psi_(n) * theta_beta(h);
}

CycNumber SimpleType::extended_psi(const PadicMatrix& u) const {
  const long p = P_.p;
  if (P_.family == Family::Ramified) return theta_beta(u);
  if (!u.is_integral(p) || vp(u.at(0, 0) - 1, p) < 1 || vp(u.at(1, 1) - 1, p) < 1 || vp(u.at(1, 0), p) < 1)
    throw Error(ErrorCode::NotInU, "not in (N cap K) K^1: " + u.to_string());
  const PadicMatrix n = upper(u.at(0, 1));
  return extended_psi(n, n.inverse() * u);
}

CycNumber SimpleType::bessel(int a, const PadicMatrix& j0) const {
  if (!in_J(j0)) throw Error(ErrorCode::NotInJ, j0.to_string());
  const CycNumber Aa = A_.pow(a);
  if (P_.family == Family::DepthZero) return Aa * (*fin_)(reduce_K(j0));
  const Rational g11 = j0.at(0, 0);
  PadicMatrix h = j0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) h.at(i, j) /= g11;
  return Aa * sigma_bar(residue_mod_power(g11, P_.p, 1)) * theta_beta(h);
}

CycNumber SimpleType::bessel(const PadicMatrix& j) const {
  auto d = decompose_bold_J(j);
  if (!d) throw Error(ErrorCode::NotInJ, j.to_string());
  return bessel(d->first, d->second);
}

CycNumber SimpleType::central_at_uniformizer() const { return A_.pow(e()); }

CycNumber SimpleType::central_on_unit(long u) const {
  if (P_.family == Family::Ramified) return sigma_bar(u);
  const auto& chi = fin_->character();
  const auto& tower = chi.theta().tower();
  return chi.theta().eval(tower.embed(2, tower.base()->from_int(u)), K_);
}

std::vector<PadicMatrix> SimpleType::finite_quotient() const {
  std::vector<PadicMatrix> out;
  const long p = P_.p;
  if (P_.family == Family::DepthZero) {
    fin_->group().enumerate([&](const FiniteMatrix& g) {
      out.push_back(PadicMatrix::from_ints(2, {g.at(0, 0), g.at(0, 1), g.at(1, 0), g.at(1, 1)}));
    });
    return out;
  }
  const long m = p * p;
  for (long a = 1; a < m; ++a) {
    if (a % p == 0) continue;
    for (long b = 0; b < m; b += p)
      for (long c = 0; c < m; ++c)
        for (long d = a % p; d < m; d += p) out.push_back(PadicMatrix::from_ints(2, {a, b, c, d}));
  }
  return out;
}

}  // namespace cusp
