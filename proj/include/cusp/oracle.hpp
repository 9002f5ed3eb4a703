#pragma once

#include <vector>

#include "cusp/whittaker.hpp"

namespace cusp {

/// Representatives of N(Z/p^m)\GL_2(Z/p^m): (a,0;c,d) with a a unit when d
/// is a unit, (0,b;c,d) with b a unit otherwise.
std::vector<PadicMatrix> unipotent_quotient_reps(long p, int m);

/// c_k(W1, W2, 1_{o^2}) by direct summation over the cells
/// N diag(p^{v1}, p^{v2}) k0 K^m of N\G^{(k)} with v2 >= 0 and
/// |v1 - v2| <= e * window, weighted by the quotient measure and scaled by
/// q - 1 to match the split normalization. Throws TooLarge past 10^5 cells
/// per torus point.
CycNumber c_k_bruteforce(const WhittakerEvaluator& W1, const WhittakerEvaluator& W2, int k, int level, int window);

}  // namespace cusp
