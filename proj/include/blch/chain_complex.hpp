#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blch/gf2.hpp"
#include "blch/laurent.hpp"

namespace blch {

struct BasisElement {
    std::string name;
    int degree = 0;
};

// Z-graded chain complex over GF(2) with a degree -1 boundary, stored as a
// named basis plus, per basis element, the set of basis indices its boundary
// hits (GF(2) coefficients, so a set is enough).
class ChainComplex {
public:
    // boundary[i] lists the indices hit by basis[i]; repeated indices cancel
    // in pairs. Throws DomainError if some target does not sit one degree
    // below its source.
    ChainComplex(int ambient_dim, std::vector<BasisElement> basis,
                 std::vector<std::vector<std::uint32_t>> boundary);

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const std::vector<std::uint32_t>& boundary_of(std::uint32_t i) const {
        return boundary_[i];
    }
    std::optional<std::uint32_t> find(const std::string& name) const;

    const std::vector<std::uint32_t>& indices_of_degree(int k) const;
    std::size_t dim_in_degree(int k) const { return indices_of_degree(k).size(); }

    // The matrix of the boundary C_k -> C_{k-1}; rows are indexed by the
    // degree k-1 basis, columns by the degree k basis, both in basis order.
    gf2::BitMatrix boundary_matrix(int k) const;

    bool dd_is_zero() const;

    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;

private:
    int ambient_dim_;
    std::vector<BasisElement> basis_;
    std::vector<std::vector<std::uint32_t>> boundary_;
    std::map<int, std::vector<std::uint32_t>> by_degree_;
    std::vector<std::uint32_t> position_in_degree_;
    static const std::vector<std::uint32_t> empty_;
};

// Homology dimensions per degree; only nonzero entries are reported.
// Throws DomainError when the boundary does not square to zero.
std::map<int, int> betti(const ChainComplex& cx);

LaurentPolynomial poincare(const ChainComplex& cx);

}  // namespace blch
