#include "cusp/oracle.hpp"

#include "cusp/error.hpp"
#include "cusp/measure.hpp"

namespace cusp {

std::vector<PadicMatrix> unipotent_quotient_reps(long p, int m) {
  const long M = ipow(p, m);
  std::vector<PadicMatrix> out;
  for (long c = 0; c < M; ++c)
    for (long d = 0; d < M; ++d) {
      if (c % p == 0 && d % p == 0) continue;
      for (long a = 1; a < M; ++a) {
        if (a % p == 0) continue;
        out.push_back(d % p != 0 ? PadicMatrix::from_ints(2, {a, 0, c, d}) : PadicMatrix::from_ints(2, {0, a, c, d}));
      }
    }
  return out;
}

CycNumber c_k_bruteforce(const WhittakerEvaluator& W1, const WhittakerEvaluator& W2, int k, int level, int window) {
  const SimpleType& T = W1.type();
  const long p = T.p();
  if (T.n() != 2) throw Error(ErrorCode::UnsupportedDescriptor, "the oracle handles n = 2");
  if (level < T.level()) throw Error(ErrorCode::InvalidArgument, "oracle level below the family level");
  if (ipow(p, 4 * level) > 100000000L) throw Error(ErrorCode::TooLarge, "too many cells for the oracle");
  const auto reps = unipotent_quotient_reps(p, level);
  if (reps.size() > 100000) throw Error(ErrorCode::TooLarge, "too many cells for the oracle");
  const MeasureContext mc(p, 2);
  const int w = T.e() * window;
  CycNumber total = CycNumber::zero(T.field());
  for (int v2 = 0; v2 <= k + w; ++v2) {
    const int v1 = k - v2;
    if (std::abs(v1 - v2) > w) continue;
    const Rational vol = mc.unipotent_cell_volume(v1, v2, level);
    const PadicMatrix d = PadicMatrix::diag({qpow(p, v1), qpow(p, v2)});
    CycNumber s = CycNumber::zero(T.field());
    for (const PadicMatrix& k0 : reps) {
      const PadicMatrix g = d * k0;
      const CycNumber a = W1(g);
      if (a.is_zero()) continue;
      s += a * W2(g);
    }
    total += CycNumber(vol) * s;
  }
  return CycNumber(Rational(p - 1)) * total;
}

}  // namespace cusp
