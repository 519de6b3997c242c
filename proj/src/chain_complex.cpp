#include "blch/chain_complex.hpp"

#include <algorithm>
#include <set>

#include "blch/errors.hpp"

namespace blch {

const std::vector<std::uint32_t> ChainComplex::empty_;

namespace {

// Cancel repeated indices mod 2 and sort.
std::vector<std::uint32_t> normalize(std::vector<std::uint32_t> targets) {
    std::sort(targets.begin(), targets.end());
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < targets.size();) {
        std::size_t j = i;
        while (j < targets.size() && targets[j] == targets[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(targets[i]);
        i = j;
    }
    return out;
}

}  // namespace

ChainComplex::ChainComplex(int ambient_dim, std::vector<BasisElement> basis,
                           std::vector<std::vector<std::uint32_t>> boundary)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), boundary_(std::move(boundary)) {
    if (boundary_.size() != basis_.size())
        throw InputError("complex: boundary list does not match basis size");
    position_in_degree_.resize(basis_.size());
    for (std::uint32_t i = 0; i < basis_.size(); ++i) {
        auto& bucket = by_degree_[basis_[i].degree];
        position_in_degree_[i] = static_cast<std::uint32_t>(bucket.size());
        bucket.push_back(i);
    }
    for (std::uint32_t i = 0; i < basis_.size(); ++i) {
        boundary_[i] = normalize(std::move(boundary_[i]));
        for (std::uint32_t t : boundary_[i]) {
            if (t >= basis_.size())
                throw InputError("complex: boundary target out of range");
            if (basis_[t].degree != basis_[i].degree - 1)
                throw DomainError("complex: boundary of '" + basis_[i].name +
                                  "' hits '" + basis_[t].name +
                                  "', which is not one degree below");
        }
    }
}

std::optional<std::uint32_t> ChainComplex::find(const std::string& name) const {
    for (std::uint32_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return i;
    return std::nullopt;
}

const std::vector<std::uint32_t>& ChainComplex::indices_of_degree(int k) const {
    auto it = by_degree_.find(k);
    return it == by_degree_.end() ? empty_ : it->second;
}

gf2::BitMatrix ChainComplex::boundary_matrix(int k) const {
    const auto& sources = indices_of_degree(k);
    const auto& targets = indices_of_degree(k - 1);
    gf2::BitMatrix m(targets.size(), sources.size());
    for (std::size_t col = 0; col < sources.size(); ++col)
        for (std::uint32_t t : boundary_[sources[col]])
            m.set(position_in_degree_[t], col, true);
    return m;
}

bool ChainComplex::dd_is_zero() const {
    for (std::uint32_t i = 0; i < basis_.size(); ++i) {
        std::set<std::uint32_t> acc;
        for (std::uint32_t t : boundary_[i])
            for (std::uint32_t u : boundary_[t]) {
                auto it = acc.find(u);
                if (it == acc.end())
                    acc.insert(u);
                else
                    acc.erase(it);
            }
        if (!acc.empty()) return false;
    }
    return true;
}

std::optional<int> ChainComplex::min_degree() const {
    if (by_degree_.empty()) return std::nullopt;
    return by_degree_.begin()->first;
}

std::optional<int> ChainComplex::max_degree() const {
    if (by_degree_.empty()) return std::nullopt;
    return by_degree_.rbegin()->first;
}

std::map<int, int> betti(const ChainComplex& cx) {
    if (!cx.dd_is_zero())
        throw DomainError("complex: boundary does not square to zero");

    std::map<int, int> result;
    if (!cx.min_degree()) return result;
    const int lo = *cx.min_degree();
    const int hi = *cx.max_degree();

    std::map<int, std::size_t> ranks;  // rank of boundary C_k -> C_{k-1}
    for (int k = lo; k <= hi + 1; ++k) ranks[k] = gf2::rank(cx.boundary_matrix(k));

    for (int k = lo; k <= hi; ++k) {
        const long long b = static_cast<long long>(cx.dim_in_degree(k)) -
                            static_cast<long long>(ranks[k]) -
                            static_cast<long long>(ranks[k + 1]);
        if (b != 0) result[k] = static_cast<int>(b);
    }
    return result;
}

LaurentPolynomial poincare(const ChainComplex& cx) {
    LaurentPolynomial p;
    for (const auto& [k, b] : betti(cx)) p.add_term(k, b);
    return p;
}

}  // namespace blch
