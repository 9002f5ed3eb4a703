#include "cusp/cuspidal.hpp"

#include <sstream>

#include "cusp/error.hpp"

namespace cusp {

namespace {
void require_divides(long d, const CycFieldPtr& K, const char* what) {
  if (!K || K->modulus() % d != 0)
    throw Error(ErrorCode::FieldMismatch, std::string(what) + " needs zeta_" + std::to_string(d) + " in the coefficient field");
}
}  // namespace

RegularCharacter::RegularCharacter(std::shared_ptr<const FiniteFieldTower> tower, int n, long k)
    : tower_(std::move(tower)), n_(n) {
  m_ = tower_->ext(n)->size() - 1;
  k_ = mod_floor(k, m_);
}

long RegularCharacter::order() const { return m_ / gcd_long(k_, m_); }

bool RegularCharacter::is_regular() const {
  long kq = k_;
  for (int i = 1; i < n_; ++i) {
    kq = kq * tower_->q() % m_;
    if (kq == k_) return false;
  }
  return true;
}

long RegularCharacter::exponent(FiniteField::Elem x) const { return k_ * tower_->ext(n_)->log(x) % m_; }

CycNumber RegularCharacter::eval(FiniteField::Elem x, const CycFieldPtr& K) const {
  require_divides(m_, K, "regular character");
  return CycNumber::root(K, exponent(x) * (K->modulus() / m_));
}

RegularCharacter RegularCharacter::frobenius() const { return RegularCharacter(tower_, n_, k_ * tower_->q()); }

bool RegularCharacter::same_orbit(const RegularCharacter& other) const {
  if (other.n_ != n_ || other.tower_->q() != tower_->q()) return false;
  long kq = k_;
  for (int i = 0; i < n_; ++i) {
    if (kq == other.k_) return true;
    kq = kq * tower_->q() % m_;
  }
  return false;
}

FiniteAdditiveCharacter::FiniteAdditiveCharacter(std::shared_ptr<const FiniteFieldTower> tower, int sign)
    : tower_(std::move(tower)), sign_(sign >= 0 ? 1 : -1) {}

long FiniteAdditiveCharacter::exponent(FiniteField::Elem x) const {
  return mod_floor(sign_ * tower_->base()->trace_to_prime(x), tower_->p());
}

CycNumber FiniteAdditiveCharacter::eval(FiniteField::Elem x, const CycFieldPtr& K) const {
  require_divides(tower_->p(), K, "additive character");
  return CycNumber::root(K, exponent(x) * (K->modulus() / tower_->p()));
}

// ---------------------------------------------------------------------------

CuspidalCharacter::CuspidalCharacter(std::shared_ptr<const MatrixGroup> group, const RegularCharacter& theta, CycFieldPtr K)
    : G_(std::move(group)), theta_(theta), K_(std::move(K)) {
  if (G_->n() != 2)
    throw Error(ErrorCode::UnsupportedDescriptor, "cuspidal characters are implemented for GL_2 only");
  if (theta_.n() != 2) throw Error(ErrorCode::InvalidArgument, "Theta must be a character of F_{q^2}^x");
  if (!theta_.is_regular()) throw Error(ErrorCode::NotRegular, "Theta^q = Theta");
  require_divides(theta_.group_order(), K_, "cuspidal character");
  table_.assign(static_cast<std::size_t>(G_->code_count()), CycNumber(0));
  G_->enumerate([&](const FiniteMatrix& g) { table_[static_cast<std::size_t>(G_->code(g))] = value_on_label(G_->classify(g)); });
}

CycNumber CuspidalCharacter::value_on_label(const ConjClassLabel& label) const {
  const long q = G_->q();
  const auto& T = G_->tower();
  switch (label.kind) {
    case ConjClassLabel::Kind::Central:
      return CycNumber(q - 1) * theta_.eval(T.embed(2, label.data[0]), K_);
    case ConjClassLabel::Kind::CentralUnipotent:
      return -theta_.eval(T.embed(2, label.data[0]), K_);
    case ConjClassLabel::Kind::Split:
      return CycNumber::zero(K_);
    case ConjClassLabel::Kind::Elliptic: {
      const int x = label.data[0];
      return -(theta_.eval(x, K_) + theta_.eval(T.frobenius_q(2, x), K_));
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "unexpected conjugacy label");
  }
}

const CycNumber& CuspidalCharacter::operator()(const FiniteMatrix& g) const { return table_[static_cast<std::size_t>(G_->code(g))]; }

CycNumber CuspidalCharacter::inner_product(const CuspidalCharacter& other) const {
  CycNumber s = CycNumber::zero(K_);
  G_->enumerate([&](const FiniteMatrix& g) { s += (*this)(g) * other(g).conj(); });
  return s / CycNumber(G_->order());
}

CycNumber CuspidalCharacter::unipotent_sum() const {
  CycNumber s = CycNumber::zero(K_);
  for (const auto& u : G_->unipotent_elements()) s += (*this)(u);
  return s;
}

CycNumber CuspidalCharacter::degree() const { return (*this)(G_->identity()); }

// ---------------------------------------------------------------------------

FiniteBessel::FiniteBessel(std::shared_ptr<const CuspidalCharacter> chi, const FiniteAdditiveCharacter& psi)
    : chi_(std::move(chi)), psi_(psi) {
  const MatrixGroup& G = chi_->group();
  N_ = G.unipotent_elements();
  NP_ = G.unipotent_mirabolic_reps();
  const CycFieldPtr& K = chi_->field();
  require_divides(G.tower().p(), K, "Bessel function");
  std::vector<CycNumber> psi_inv;
  for (const auto& u : N_) psi_inv.push_back(psi_of(u).inverse());
  const CycNumber scale = CycNumber(Rational(1, static_cast<long>(N_.size())));
  table_.assign(static_cast<std::size_t>(G.code_count()), CycNumber(0));
  G.enumerate([&](const FiniteMatrix& g) {
    CycNumber s = CycNumber::zero(K);
    for (std::size_t i = 0; i < N_.size(); ++i) s += psi_inv[i] * (*chi_)(G.mul(g, N_[i]));
    table_[static_cast<std::size_t>(G.code(g))] = s * scale;
  });
}

CycNumber FiniteBessel::psi_of(const FiniteMatrix& u) const {
  const FiniteField& F = group().field();
  int s = 0;
  for (int i = 0; i + 1 < u.n; ++i) s = F.add(s, u.at(i, i + 1));
  return psi_.eval(s, chi_->field());
}

const CycNumber& FiniteBessel::operator()(const FiniteMatrix& g) const { return table_[static_cast<std::size_t>(group().code(g))]; }

FiniteBessel FiniteBessel::dual() const {
  auto chi_dual = std::make_shared<const CuspidalCharacter>(chi_->group_ptr(), chi_->theta().inverse(), chi_->field());
  return FiniteBessel(chi_dual, psi_.inverse());
}

bool FiniteBessel::convolution_check(const FiniteMatrix& g1, const FiniteMatrix& g2) const {
  const MatrixGroup& G = group();
  CycNumber s = CycNumber::zero(chi_->field());
  for (const auto& m : NP_) s += (*this)(G.mul(g1, G.inv(m))) * (*this)(G.mul(m, g2));
  return s == (*this)(G.mul(g1, g2));
}

bool FiniteBessel::transformation_check(const FiniteMatrix& g) const {
  const MatrixGroup& G = group();
  const CycNumber& v = (*this)(g);
  for (const auto& u : N_) {
    const CycNumber expected = psi_of(u) * v;
    if ((*this)(G.mul(u, g)) != expected || (*this)(G.mul(g, u)) != expected) return false;
  }
  return true;
}

std::string FiniteBessel::table_csv() const {
  const MatrixGroup& G = group();
  std::ostringstream os;
  for (int i = 0; i < G.n(); ++i)
    for (int j = 0; j < G.n(); ++j) os << "g" << i + 1 << j + 1 << ",";
  os << "value\n";
  G.enumerate([&](const FiniteMatrix& g) {
    for (int k = 0; k < G.n() * G.n(); ++k) os << g.a[static_cast<std::size_t>(k)] << ",";
    os << "\"" << (*this)(g).to_string() << "\"\n";
  });
  return os.str();
}

}  // namespace cusp
