#pragma once

#include <optional>
#include <vector>

#include "blch/laurent.hpp"

namespace blch {

struct AdmissibleSplit {
    LaurentPolynomial q;
    LaurentPolynomial p;
};

// All decompositions P = q + p with q supported in [0, n-1], q(0) = 1,
// 0 <= q_e <= P_e, and p(-1) even for odd n / zero for even n. Ordered by
// the coefficient vector of q, ascending exponent, lexicographically.
std::vector<AdmissibleSplit> blch_admissible_splits(const LaurentPolynomial& P, int n);

// The lexicographically smallest split, or empty when P is not
// bLCH-admissible. Throws InputError on negative coefficients.
std::optional<AdmissibleSplit> blch_admissible_split(const LaurentPolynomial& P, int n);

// Decomposition P = q + p + t^{n-1} p(t^{-1}) with q monic of degree n and
// nonnegative; q is the lexicographically smallest choice and p the upper
// half of the symmetric remainder.
std::optional<AdmissibleSplit> lch_admissible_split(const LaurentPolynomial& P, int n);

// q(t) + t^{n-1} p(t^{-1}): the polynomial of the swapped augmentation pair.
LaurentPolynomial swapped_polynomial(const AdmissibleSplit& split, int n);

// True iff some bLCH split of P12 has swapped polynomial P21.
bool relpoly_consistent(const LaurentPolynomial& P12, const LaurentPolynomial& P21,
                        int n);

// P + t^{n-1} when the fundamental-class pairing vanishes, P - t^n
// otherwise; the latter requires a t^n term to remove.
LaurentPolynomial connected_sum_polynomial(const LaurentPolynomial& P, int n,
                                           bool rho_vanishes);

// k-m-1 for even k, n-k+m for odd k. Requires k >= 1.
int exponent_a(int k, int m, int n);

struct RealizationPair {
    int u;
    int v;
    int m;  // -u
    int k;  // v-u+1 (different parities) or n-u-v (same parity, odd n)
    int a;  // exponent_a(k, m, n); equals v by construction
};

struct RealizationPlan {
    int n = 1;
    LaurentPolynomial q;  // delegated factor, realized externally
    std::vector<RealizationPair> pairs;
    int copies = 0;  // smallest even N with every k_i <= 2N
    LaurentPolynomial predicted;
};

// Picks an admissible split of P and a pairing of the exponent multiset of p
// such that every pair is realizable by one satellite component; backtracks
// over pairings and over alternative splits. Throws DomainError when P is
// not admissible or no feasible pairing exists for any split.
RealizationPlan plan_realization(const LaurentPolynomial& P, int n);

// q + sum_i (t^{-m_i} + t^{a_i}).
LaurentPolynomial predicted_polynomial(const RealizationPlan& plan);

}  // namespace blch
