#include "blch/geography.hpp"

#include <algorithm>
#include <set>

#include "blch/errors.hpp"

namespace blch {

namespace {

void require_nonnegative(const LaurentPolynomial& P, const char* who) {
    if (!P.nonnegative())
        throw InputError(std::string("geography: ") + who +
                         " requires nonnegative coefficients");
}

// Enumerates coefficient vectors (digits[0..k-1]) bounded by caps in
// ascending lexicographic order, leftmost digit most significant.
struct Odometer {
    std::vector<long long> digits;
    const std::vector<long long>& caps;

    explicit Odometer(const std::vector<long long>& caps)
        : digits(caps.size(), 0), caps(caps) {}

    bool advance() {
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (digits[i] < caps[i]) {
                ++digits[i];
                std::fill(digits.begin() + i + 1, digits.end(), 0);
                return true;
            }
        }
        return false;
    }
};

}  // namespace

std::vector<AdmissibleSplit> blch_admissible_splits(const LaurentPolynomial& P, int n) {
    require_nonnegative(P, "bLCH admissibility");
    std::vector<AdmissibleSplit> splits;
    if (P.coeff(0) < 1) return splits;  // q(0) = 1 needs a constant term

    std::vector<long long> caps;
    for (int e = 1; e <= n - 1; ++e) caps.push_back(P.coeff(e));

    Odometer odo(caps);
    while (true) {
        LaurentPolynomial q = LaurentPolynomial::constant(1);
        for (std::size_t i = 0; i < caps.size(); ++i)
            q.add_term(static_cast<int>(i) + 1, odo.digits[i]);
        LaurentPolynomial p = P - q;

        const long long pm1 = p.eval_minus_one();
        const bool parity_ok = (n % 2 != 0) ? (pm1 % 2 == 0) : (pm1 == 0);
        if (parity_ok) splits.push_back({q, p});

        if (!odo.advance()) break;
    }
    return splits;
}

std::optional<AdmissibleSplit> blch_admissible_split(const LaurentPolynomial& P, int n) {
    auto splits = blch_admissible_splits(P, n);
    if (splits.empty()) return std::nullopt;
    return splits.front();
}

std::optional<AdmissibleSplit> lch_admissible_split(const LaurentPolynomial& P, int n) {
    require_nonnegative(P, "LCH admissibility");
    if (P.coeff(n) < 1) return std::nullopt;  // q must be monic of degree n

    std::vector<long long> caps;
    for (int e = 0; e <= n - 1; ++e) caps.push_back(P.coeff(e));

    Odometer odo(caps);
    while (true) {
        LaurentPolynomial q = LaurentPolynomial::term(1, n);
        for (std::size_t i = 0; i < caps.size(); ++i)
            q.add_term(static_cast<int>(i), odo.digits[i]);
        const LaurentPolynomial r = P - q;

        // r must be p + t^{n-1} p(t^{-1}) for some nonnegative p: symmetric
        // under e <-> n-1-e, with even coefficient at a fixed exponent.
        bool ok = r.nonnegative();
        for (const auto& [e, c] : r.terms()) {
            if (!ok) break;
            const int mirror = n - 1 - e;
            if (e == mirror)
                ok = (c % 2 == 0);
            else
                ok = (r.coeff(mirror) == c);
        }
        if (ok) {
            LaurentPolynomial p;
            for (const auto& [e, c] : r.terms()) {
                const int mirror = n - 1 - e;
                if (e > mirror)
                    p.add_term(e, c);
                else if (e == mirror)
                    p.add_term(e, c / 2);
            }
            return AdmissibleSplit{q, p};
        }
        if (!odo.advance()) break;
    }
    return std::nullopt;
}

LaurentPolynomial swapped_polynomial(const AdmissibleSplit& split, int n) {
    return split.q + split.p.reversed().shifted(n - 1);
}

bool relpoly_consistent(const LaurentPolynomial& P12, const LaurentPolynomial& P21,
                        int n) {
    require_nonnegative(P12, "relpoly consistency");
    require_nonnegative(P21, "relpoly consistency");
    for (const AdmissibleSplit& split : blch_admissible_splits(P12, n))
        if (swapped_polynomial(split, n) == P21) return true;
    return false;
}

LaurentPolynomial connected_sum_polynomial(const LaurentPolynomial& P, int n,
                                           bool rho_vanishes) {
    if (rho_vanishes) return P + LaurentPolynomial::term(1, n - 1);
    if (P.coeff(n) < 1)
        throw InputError("geography: connected sum with nonvanishing pairing needs a t^" +
                         std::to_string(n) + " term to remove");
    return P - LaurentPolynomial::term(1, n);
}

int exponent_a(int k, int m, int n) {
    if (k < 1) throw InputError("geography: exponent formula requires k >= 1");
    return (k % 2 == 0) ? k - m - 1 : n - k + m;
}

namespace {

// A single satellite component realizes t^u + t^v iff some k >= 1 matches:
// different-parity pairs always do (k = v-u+1 even), same-parity pairs need
// odd n and k = n-u-v >= 1.
std::optional<RealizationPair> make_pair(int x, int y, int n) {
    const int u = std::min(x, y);
    const int v = std::max(x, y);
    if ((u + v) % 2 != 0) {
        const int k = v - u + 1;
        return RealizationPair{u, v, -u, k, exponent_a(k, -u, n)};
    }
    if (n % 2 != 0 && n - u - v >= 1) {
        const int k = n - u - v;
        return RealizationPair{u, v, -u, k, exponent_a(k, -u, n)};
    }
    return std::nullopt;
}

bool pair_multiset(const std::vector<int>& exponents, int n,
                   std::vector<RealizationPair>& out,
                   std::set<std::vector<int>>& dead_ends) {
    if (exponents.empty()) return true;
    if (dead_ends.count(exponents)) return false;
    const int x = exponents.front();
    for (std::size_t t = 1; t < exponents.size(); ++t) {
        if (t > 1 && exponents[t] == exponents[t - 1]) continue;  // dedupe branches
        const auto pr = make_pair(x, exponents[t], n);
        if (!pr) continue;
        std::vector<int> rest;
        rest.reserve(exponents.size() - 2);
        for (std::size_t s = 1; s < exponents.size(); ++s)
            if (s != t) rest.push_back(exponents[s]);
        if (pair_multiset(rest, n, out, dead_ends)) {
            out.push_back(*pr);
            return true;
        }
    }
    dead_ends.insert(exponents);
    return false;
}

}  // namespace

RealizationPlan plan_realization(const LaurentPolynomial& P, int n) {
    const auto splits = blch_admissible_splits(P, n);
    if (splits.empty())
        throw DomainError("geography: polynomial is not bLCH-admissible for n = " +
                          std::to_string(n));

    for (const AdmissibleSplit& split : splits) {
        std::vector<int> exponents;
        for (const auto& [e, c] : split.p.terms())
            for (long long i = 0; i < c; ++i) exponents.push_back(e);
        if (exponents.size() % 2 != 0) continue;  // cannot happen for valid splits
        if (exponents.size() > 64)
            throw InputError("geography: realization search too large (" +
                             std::to_string(exponents.size()) + " exponents)");

        std::vector<RealizationPair> pairs;
        std::set<std::vector<int>> dead_ends;
        if (!pair_multiset(exponents, n, pairs, dead_ends)) continue;

        std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
            return a.u != b.u ? a.u < b.u : a.v < b.v;
        });

        RealizationPlan plan;
        plan.n = n;
        plan.q = split.q;
        plan.pairs = std::move(pairs);
        if (!plan.pairs.empty()) {
            int maxk = 0;
            for (const auto& pr : plan.pairs) maxk = std::max(maxk, pr.k);
            int copies = (maxk + 1) / 2;
            if (copies % 2 != 0) ++copies;
            plan.copies = copies;
        }
        plan.predicted = predicted_polynomial(plan);
        if (!(plan.predicted == P))
            throw DomainError("geography: realization plan does not reproduce its input");
        return plan;
    }
    throw DomainError("geography: no feasible realization pairing for any admissible split of " +
                      P.to_string() + " with n = " + std::to_string(n));
}

LaurentPolynomial predicted_polynomial(const RealizationPlan& plan) {
    LaurentPolynomial out = plan.q;
    for (const RealizationPair& pr : plan.pairs) {
        out.add_term(-pr.m, 1);
        out.add_term(pr.a, 1);
    }
    return out;
}

}  // namespace blch
